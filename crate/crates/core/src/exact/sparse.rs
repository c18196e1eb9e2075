use super::scalar::Scalar;

/// Sparse vector: `(column, value)` pairs, strictly increasing columns, no
/// stored zeros.
pub type SparseVec<T> = Vec<(usize, T)>;

/// `a + c·b` for sparse vectors.
pub fn axpy<T: Scalar>(a: &[(usize, T)], c: &T, b: &[(usize, T)]) -> SparseVec<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c.clone() * b[j].1.clone()));
            j += 1;
        } else {
            let v = a[i].1.clone() + c.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row-echelon form over sparse rows whose pivot is the *largest*
/// column. Every stored row is monic and vanishes on all other pivots.
#[derive(Clone, Debug)]
pub struct SparseRref<T> {
    width: usize,
    rows: Vec<SparseVec<T>>,
    pivot_row: Vec<Option<usize>>,
}

impl<T: Scalar> SparseRref<T> {
    pub fn new(width: usize) -> Self {
        SparseRref { width, rows: Vec::new(), pivot_row: vec![None; width] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    pub fn rows(&self) -> &[SparseVec<T>] {
        &self.rows
    }

    /// Unique representative of `v` modulo the row space, supported on
    /// non-pivot columns.
    pub fn reduce(&self, v: &[(usize, T)]) -> SparseVec<T> {
        let mut out: SparseVec<T> = v.to_vec();
        for (col, x) in v {
            if let Some(r) = self.pivot_row[*col] {
                out = axpy(&out, &-x.clone(), &self.rows[r]);
            }
        }
        out
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, T)]) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.last().cloned() else {
            return false;
        };
        if !lead.is_one() {
            for (_, x) in r.iter_mut() {
                *x = x.clone() / lead.clone();
            }
        }
        for row in self.rows.iter_mut() {
            if let Ok(k) = row.binary_search_by_key(&pivot, |e| e.0) {
                let c = -row[k].1.clone();
                *row = axpy(row, &c, &r);
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qi, Rational};

    #[test]
    fn rref_reduces_to_normal_form() {
        let mut e = SparseRref::<Rational>::new(4);
        assert!(e.insert(&[(0, qi(1)), (3, qi(2))]));
        assert!(e.insert(&[(2, qi(1)), (3, qi(1))]));
        assert!(!e.insert(&[(0, qi(2)), (2, qi(-4))]));
        assert_eq!(e.rank(), 2);
        // x3 ≡ −x0/2 and x2 ≡ x0/2.
        assert_eq!(e.reduce(&[(3, qi(2))]), vec![(0, qi(-1))]);
        assert_eq!(e.reduce(&[(1, qi(5)), (2, qi(2))]), vec![(0, qi(1)), (1, qi(5))]);
    }
}
