use super::scalar::Scalar;

/// Incrementally built row-echelon basis of a subspace of `T^width`.
///
/// Rows may carry a trailing tag (for example the expression of the row in
/// terms of the original inputs); pivots are searched in the first `width`
/// entries only and the tag is transformed together with the row. Reduction
/// is fraction-free: `v ← r[p]·v − v[p]·r`, followed by content
/// normalization.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    width: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> Echelon<T> {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// Reduces `v` against the stored rows. Afterwards `v` vanishes on every
    /// stored pivot; it is zero on the first `width` entries iff the input
    /// lay in the span.
    pub fn reduce(&self, v: &mut [T]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let a = row[*p].clone();
            let b = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                let scaled = if a.is_one() { x.clone() } else { a.clone() * x.clone() };
                *x = if r.is_zero() { scaled } else { scaled - b.clone() * r.clone() };
            }
            T::normalize_row(v);
        }
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w[..self.width].iter().all(T::is_zero)
    }

    /// Inserts `v`; returns the reduced vector (with its tag) when it was
    /// independent, or the reduced remainder as `Err` when it was not.
    pub fn insert(&mut self, mut v: Vec<T>) -> Result<usize, Vec<T>> {
        assert!(v.len() >= self.width);
        T::normalize_row(&mut v);
        self.reduce(&mut v);
        match v[..self.width].iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                Ok(self.rows.len() - 1)
            }
            None => Err(v),
        }
    }
}
