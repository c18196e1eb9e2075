use super::echelon::Echelon;
use super::matrix::{BlockMatrix, Matrix};
use num_traits::{One, Zero};

use super::scalar::Scalar;

/// An element of a finite-dimensional associative unital algebra with a
/// fixed coordinate system.
pub trait AlgebraElement: Clone {
    type Scalar: Scalar;

    fn mul(&self, rhs: &Self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &Self::Scalar) -> Self;
    /// The unit of the algebra this element lives in.
    fn unit(&self) -> Self;
    /// Coordinates in a fixed basis of the ambient space.
    fn coords(&self) -> Vec<Self::Scalar>;

    fn is_zero(&self) -> bool {
        self.coords().iter().all(|x| x.is_zero())
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-Self::Scalar::one()))
    }

    fn add_scalar(&self, c: &Self::Scalar) -> Self {
        self.add(&self.unit().scale(c))
    }

    fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other).sub(&other.mul(self)).is_zero()
    }
}

impl<T: Scalar> AlgebraElement for Matrix<T> {
    type Scalar = T;

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn scale(&self, c: &T) -> Self {
        Matrix::scale(self, c)
    }
    fn unit(&self) -> Self {
        Matrix::identity(self.rows())
    }
    fn coords(&self) -> Vec<T> {
        self.entries().to_vec()
    }
    fn is_zero(&self) -> bool {
        Matrix::is_zero(self)
    }
    fn add_scalar(&self, c: &T) -> Self {
        Matrix::add_scalar(self, c)
    }
}

impl<T: Scalar> AlgebraElement for BlockMatrix<T> {
    type Scalar = T;

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn scale(&self, c: &T) -> Self {
        BlockMatrix::scale(self, c)
    }
    fn unit(&self) -> Self {
        self.identity_like()
    }
    fn coords(&self) -> Vec<T> {
        self.blocks().iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }
    fn is_zero(&self) -> bool {
        BlockMatrix::is_zero(self)
    }
    fn add_scalar(&self, c: &T) -> Self {
        BlockMatrix::add_scalar(self, c)
    }
}

/// Basis of the unital algebra generated by `gens`.
///
/// Starts from the unit and closes the span under left multiplication by
/// each generator; the result is deterministic (generators are applied in
/// order, breadth first). Its length is the dimension of the generated
/// algebra. Panics if `gens` is empty, since the ambient unit is unknown.
pub fn span_closure<E: AlgebraElement>(gens: &[E]) -> Vec<E> {
    let first = gens.first().expect("span_closure needs at least one generator");
    let unit = first.unit();
    let width = unit.coords().len();
    let mut echelon = Echelon::new(width);
    let mut basis = Vec::new();
    echelon.insert(unit.coords()).expect("the unit is nonzero");
    basis.push(unit);
    let mut next = 0;
    while next < basis.len() {
        for g in gens {
            let candidate = g.mul(&basis[next]);
            if echelon.insert(candidate.coords()).is_ok() {
                basis.push(candidate);
            }
        }
        next += 1;
    }
    basis
}

/// Dimension of the span of `elems`.
pub fn span_dim<E: AlgebraElement>(elems: &[E]) -> usize {
    let Some(first) = elems.first() else { return 0 };
    let mut echelon = Echelon::new(first.coords().len());
    elems.iter().filter(|e| echelon.insert(e.coords()).is_ok()).count()
}

/// Monic minimal polynomial of `m`, coefficients in ascending degree
/// (`[c0, c1, ..., 1]`), found as the first linear dependence among the
/// powers `1, m, m², ...`.
pub fn minimal_polynomial<E: AlgebraElement>(m: &E) -> Vec<E::Scalar> {
    let width = m.coords().len();
    // Degree never exceeds the ambient dimension.
    let max_degree = width;
    let tagged = |coords: Vec<E::Scalar>, k: usize| {
        let mut v = coords;
        v.extend((0..=max_degree).map(|i| if i == k { E::Scalar::one() } else { E::Scalar::zero() }));
        v
    };
    let mut echelon = Echelon::new(width);
    let mut power = m.unit();
    for k in 0..=max_degree {
        match echelon.insert(tagged(power.coords(), k)) {
            Ok(_) => power = power.mul(m),
            Err(rem) => {
                let tag = &rem[width..width + k + 1];
                let lead = tag[k].clone();
                return tag.iter().map(|c| c.clone() / lead.clone()).collect();
            }
        }
    }
    unreachable!("powers of an element span at most the ambient dimension")
}

/// `p(m)` for a polynomial with ascending coefficients, by Horner's rule.
pub fn eval_poly<E: AlgebraElement>(coeffs: &[E::Scalar], m: &E) -> E {
    let mut acc = m.unit().scale(&E::Scalar::zero());
    for c in coeffs.iter().rev() {
        acc = acc.mul(m).add_scalar(c);
    }
    acc
}

/// `∏ (m − r)` over the given roots.
pub fn eval_root_product<E: AlgebraElement>(roots: &[E::Scalar], m: &E) -> E {
    let mut acc = m.unit();
    for r in roots {
        acc = acc.mul(&m.add_scalar(&-r.clone()));
    }
    acc
}

/// Ascending coefficients of `∏ (x − r)`.
pub fn poly_from_roots<T: Scalar>(roots: &[T]) -> Vec<T> {
    let mut p = vec![T::one()];
    for r in roots {
        let mut next = vec![T::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + c.clone();
            next[i] = next[i].clone() - r.clone() * c.clone();
        }
        p = next;
    }
    p
}

/// Evaluates a scalar polynomial with ascending coefficients.
pub fn poly_value<T: Scalar>(coeffs: &[T], x: &T) -> T {
    coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Roots of `p` among `candidates` (deduplicated, candidate order kept),
/// provided they account for the full degree of `p`; `None` when `p` does
/// not split into distinct linear factors over the candidate set.
pub fn split_over<T: Scalar>(p: &[T], candidates: &[T]) -> Option<Vec<T>> {
    let mut roots: Vec<T> = Vec::new();
    for c in candidates {
        if !roots.contains(c) && poly_value(p, c).is_zero() {
            roots.push(c.clone());
        }
    }
    (roots.len() + 1 == p.len()).then_some(roots)
}
