//! Spin-`j` representations of sl(2) with integer matrix entries, their
//! embeddings into a triple tensor product, and the intermediate Casimirs.
//!
//! The representation uses the Chevalley basis `E, F, H` with
//! `E v_m = (j−m) v_{m+1}`, `F v_m = (j+m) v_{m−1}`, `H v_m = 2m v_m`, where
//! the basis is ordered from the highest weight `m = j` down to `m = −j`.
//! Every Casimir `K_S = (E_S F_S + F_S E_S)/2 + H_S²/4` then has rational
//! entries and acts on an irreducible `[2j]` as `j(j+1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bratteli::tensor_decompose;
use crate::exact::{
    kron, minimal_polynomial, parse_rational, q, qi, split_over, AlgebraElement, BlockMatrix, Matrix, Rational, Scalar,
};
use crate::{Error, Result};

/// Default upper bound on `2j` accepted by [`build_context`].
pub const DEFAULT_SPIN_CAP: u32 = 8;

/// A nonnegative integer or half-integer spin, stored as `2j`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spin {
    twice: u32,
}

impl Spin {
    pub const ZERO: Spin = Spin { twice: 0 };
    pub const HALF: Spin = Spin { twice: 1 };
    pub const ONE: Spin = Spin { twice: 2 };

    pub const fn from_twice(twice: u32) -> Self {
        Spin { twice }
    }

    pub const fn twice(self) -> u32 {
        self.twice
    }

    /// Dimension `2j + 1` of `[2j]`.
    pub const fn dim(self) -> usize {
        self.twice as usize + 1
    }

    pub fn value(self) -> Rational {
        q(self.twice as i64, 2)
    }

    /// Casimir eigenvalue `j(j+1)`.
    pub fn casimir(self) -> Rational {
        let t = self.twice as i64;
        q(t * (t + 2), 4)
    }

    /// `j + 1/2`.
    pub fn x(self) -> Rational {
        q(self.twice as i64 + 1, 2)
    }

    pub fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    /// Spin with value `v`, if `v` is a nonnegative multiple of 1/2.
    pub fn from_rational(v: &Rational) -> Option<Self> {
        let doubled = v * qi(2);
        if !doubled.is_integer() || doubled < qi(0) {
            return None;
        }
        u32::try_from(doubled.to_integer()).ok().map(Spin::from_twice)
    }
}

impl FromStr for Spin {
    type Err = Error;

    /// Accepts `3/2`, `1.5`, `2`, and so on.
    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).and_then(|v| Spin::from_rational(&v)).ok_or_else(|| Error::InvalidSpin(s.to_string()))
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spin({self})")
    }
}

impl Serialize for Spin {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Spin {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Chevalley generators of one representation.
#[derive(Clone, Debug, PartialEq)]
pub struct RepGens<T> {
    pub e: Matrix<T>,
    pub f: Matrix<T>,
    pub h: Matrix<T>,
}

impl<T: Scalar> RepGens<T> {
    /// `(EF + FE)/2 + H²/4`.
    pub fn casimir(&self) -> Matrix<T> {
        let two = T::from_i64(2);
        let four = T::from_i64(4);
        let ef = &(&self.e * &self.f) + &(&self.f * &self.e);
        let hh = &self.h * &self.h;
        &ef.scale(&(T::one() / two)) + &hh.scale(&(T::one() / four))
    }

    /// Checks `[H,E] = 2E`, `[H,F] = −2F`, `[E,F] = H` exactly.
    pub fn satisfies_chevalley(&self) -> bool {
        let two = T::from_i64(2);
        self.h.commutator(&self.e) == self.e.scale(&two)
            && self.h.commutator(&self.f) == self.f.scale(&-two)
            && self.e.commutator(&self.f) == self.h
    }

    fn sum(&self, other: &Self) -> Self {
        RepGens { e: &self.e + &other.e, f: &self.f + &other.f, h: &self.h + &other.h }
    }
}

/// The spin-`j` representation in the integer Chevalley basis.
pub fn spin_rep<T: Scalar>(j: Spin) -> RepGens<T> {
    let n = j.dim();
    let t2 = j.twice() as i64;
    let mut e = Matrix::zeros(n, n);
    let mut f = Matrix::zeros(n, n);
    let mut h = Matrix::zeros(n, n);
    // Index t carries weight m = j − t.
    for t in 0..n {
        let ti = t as i64;
        h.set(t, t, T::from_i64(t2 - 2 * ti));
        if t > 0 {
            e.set(t - 1, t, T::from_i64(ti));
        }
        if t + 1 < n {
            f.set(t + 1, t, T::from_i64(t2 - ti));
        }
    }
    RepGens { e, f, h }
}

/// Selects one of the intermediate Casimirs.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CasimirLabel {
    K1,
    K2,
    K3,
    K12,
    K13,
    K23,
    K123,
}

impl CasimirLabel {
    pub const ALL: [CasimirLabel; 7] = [
        CasimirLabel::K1,
        CasimirLabel::K2,
        CasimirLabel::K3,
        CasimirLabel::K12,
        CasimirLabel::K13,
        CasimirLabel::K23,
        CasimirLabel::K123,
    ];

    /// Tensor sites (0-based) the Casimir acts on.
    pub fn sites(self) -> &'static [usize] {
        match self {
            CasimirLabel::K1 => &[0],
            CasimirLabel::K2 => &[1],
            CasimirLabel::K3 => &[2],
            CasimirLabel::K12 => &[0, 1],
            CasimirLabel::K13 => &[0, 2],
            CasimirLabel::K23 => &[1, 2],
            CasimirLabel::K123 => &[0, 1, 2],
        }
    }
}

/// Which Casimir difference [`spectrum_difference`] examines.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Difference {
    /// `K123 − K12`
    Total12,
    /// `K123 − K23`
    Total23,
    /// `K123 − K13`
    Total13,
}

/// Everything about `[2j1] ⊗ [2j2] ⊗ [2j3]` needed by the verifiers.
#[derive(Clone, Debug)]
pub struct TensorContext {
    spins: [Spin; 3],
    site_gens: [RepGens<Rational>; 3],
    total: RepGens<Rational>,
    casimirs: BTreeMap<CasimirLabel, Matrix<Rational>>,
    weight_groups: Vec<Vec<usize>>,
}

impl TensorContext {
    pub fn spins(&self) -> [Spin; 3] {
        self.spins
    }

    pub fn dim(&self) -> usize {
        self.spins.iter().map(|s| s.dim()).product()
    }

    /// Generators of site `a` (0-based) embedded in the full space.
    pub fn site_gens(&self, a: usize) -> &RepGens<Rational> {
        &self.site_gens[a]
    }

    /// Diagonal action `E_tot, F_tot, H_tot`.
    pub fn total_gens(&self) -> &RepGens<Rational> {
        &self.total
    }

    pub fn casimir(&self, label: CasimirLabel) -> &Matrix<Rational> {
        &self.casimirs[&label]
    }

    /// Basis indices grouped by total weight, lowest weight first.
    pub fn weight_groups(&self) -> &[Vec<usize>] {
        &self.weight_groups
    }

    /// Restriction of a weight-preserving operator to the weight blocks.
    /// Panics if `m` mixes different weights.
    pub fn to_blocks(&self, m: &Matrix<Rational>) -> BlockMatrix<Rational> {
        BlockMatrix::from_dense(m, &self.weight_groups).expect("operator does not preserve total weight")
    }

    pub fn casimir_blocks(&self, label: CasimirLabel) -> BlockMatrix<Rational> {
        self.to_blocks(self.casimir(label))
    }

    /// True if `m` commutes with the diagonal sl(2) action.
    pub fn in_centralizer(&self, m: &Matrix<Rational>) -> bool {
        m.commutes_with(&self.total.e) && m.commutes_with(&self.total.f) && m.commutes_with(&self.total.h)
    }
}

/// Builds the tensor context with the default spin cap.
pub fn build_context(j1: Spin, j2: Spin, j3: Spin) -> Result<TensorContext> {
    build_context_with_cap(j1, j2, j3, DEFAULT_SPIN_CAP)
}

pub fn build_context_with_cap(j1: Spin, j2: Spin, j3: Spin, cap: u32) -> Result<TensorContext> {
    let spins = [j1, j2, j3];
    if let Some(s) = spins.iter().find(|s| s.twice() > cap) {
        return Err(Error::SpinCap { spin: *s, cap });
    }
    let local: Vec<RepGens<Rational>> = spins.iter().map(|&s| spin_rep(s)).collect();
    let ids: Vec<Matrix<Rational>> = spins.iter().map(|s| Matrix::identity(s.dim())).collect();
    let embed = |a: usize, m: &Matrix<Rational>| {
        let factors: Vec<&Matrix<Rational>> = (0..3).map(|b| if b == a { m } else { &ids[b] }).collect();
        kron(&kron(factors[0], factors[1]), factors[2])
    };
    let site_gens: [RepGens<Rational>; 3] = std::array::from_fn(|a| RepGens {
        e: embed(a, &local[a].e),
        f: embed(a, &local[a].f),
        h: embed(a, &local[a].h),
    });
    let total = site_gens[0].sum(&site_gens[1]).sum(&site_gens[2]);

    let mut casimirs = BTreeMap::new();
    for label in CasimirLabel::ALL {
        let sites = label.sites();
        let mut acc = site_gens[sites[0]].clone();
        for &s in &sites[1..] {
            acc = acc.sum(&site_gens[s]);
        }
        casimirs.insert(label, acc.casimir());
    }

    // Weight 2M of each basis vector; index t at a site has 2m = 2j − 2t.
    let mut by_weight: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    let dims: Vec<usize> = spins.iter().map(|s| s.dim()).collect();
    for i in 0..dims.iter().product() {
        let (t1, rest) = (i / (dims[1] * dims[2]), i % (dims[1] * dims[2]));
        let (t2, t3) = (rest / dims[2], rest % dims[2]);
        let w: i64 = [(0, t1), (1, t2), (2, t3)].iter().map(|&(a, t)| spins[a].twice() as i64 - 2 * t as i64).sum();
        by_weight.entry(w).or_default().push(i);
    }

    Ok(TensorContext { spins, site_gens, total, casimirs, weight_groups: by_weight.into_values().collect() })
}

/// Checks `K1 + K2 + K3 + K123 = K12 + K23 + K13` exactly.
pub fn verify_casimir_identity(ctx: &TensorContext) -> bool {
    use CasimirLabel::*;
    let lhs = [K1, K2, K3, K123].iter().fold(Matrix::zeros(ctx.dim(), ctx.dim()), |acc, &l| &acc + ctx.casimir(l));
    let rhs = [K12, K23, K13].iter().fold(Matrix::zeros(ctx.dim(), ctx.dim()), |acc, &l| &acc + ctx.casimir(l));
    lhs == rhs
}

/// Spectrum of a Casimir difference, read from the roots of its minimal
/// polynomial among the values `ℓ(ℓ+1) − k(k+1)`.
pub fn spectrum_difference(ctx: &TensorContext, which: Difference) -> Result<Vec<Rational>> {
    let [j1, j2, j3] = ctx.spins();
    let (pair, label) = match which {
        Difference::Total12 => (tensor_decompose(j1, j2), CasimirLabel::K12),
        Difference::Total23 => (tensor_decompose(j2, j3), CasimirLabel::K23),
        Difference::Total13 => (tensor_decompose(j1, j3), CasimirLabel::K13),
    };
    let totals: Vec<Spin> = {
        let mut t: Vec<Spin> = tensor_decompose(j1, j2).into_iter().flat_map(|k| tensor_decompose(k, j3)).collect();
        t.sort();
        t.dedup();
        t
    };
    let candidates: Vec<Rational> =
        totals.iter().flat_map(|l| pair.iter().map(move |k| l.casimir() - k.casimir())).collect();
    let diff = &ctx.casimir_blocks(CasimirLabel::K123) - &ctx.casimir_blocks(label);
    let p = minimal_polynomial(&diff);
    let mut roots = split_over(&p, &candidates).ok_or(Error::NonSplitSpectrum)?;
    roots.sort();
    Ok(roots)
}

/// `true` iff `m` is `c·I` for the given scalar.
pub fn is_scalar_multiple<E: AlgebraElement<Scalar = Rational>>(m: &E, c: &Rational) -> bool {
    m.sub(&m.unit().scale(c)).is_zero()
}
