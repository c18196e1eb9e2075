use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::Scalar;

/// Dense row-major matrix over a [`Scalar`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    /// `c` times the `n × n` identity.
    pub fn scalar(n: usize, c: T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_diag(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    /// `self + c·I`.
    pub fn add_scalar(&self, c: &T) -> Self {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i).clone() + c.clone();
            m.set(i, i, v);
        }
        m
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self * other == other * self
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Submatrix on the given row and column index sets.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Rank, computed by fraction-free (Bareiss) elimination on
    /// content-normalized rows.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<T>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        for row in a.iter_mut() {
            T::normalize_row(row);
        }
        bareiss_rank(&mut a, self.cols)
    }
}

/// Rank of `a` (rows of width `cols`), destroying its contents.
///
/// Divisions by the previous pivot are exact over the integers, so
/// integer-valued rational rows stay integer-valued.
pub(crate) fn bareiss_rank<T: Scalar>(a: &mut [Vec<T>], cols: usize) -> usize {
    let n = a.len();
    let mut prev = T::one();
    let mut r = 0;
    for k in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][k].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[k].clone();
        for row in bottom.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..cols {
                let lhs = pivot.clone() * row[j].clone();
                let v = if factor.is_zero() || pivot_row[j].is_zero() {
                    lhs
                } else {
                    lhs - factor.clone() * pivot_row[j].clone()
                };
                row[j] = if prev.is_one() { v } else { v / prev.clone() };
            }
            row[k] = T::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Kronecker product; `(m×n) ⊗ (p×q)` is `mp × nq`.
pub fn kron<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = Matrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.set(i * b.rows + k, j * b.cols + l, x.clone() * y.clone());
                    }
                }
            }
        }
    }
    out
}

/// Rank over the scalar field. See [`Matrix::rank`].
pub fn mat_rank<T: Scalar>(m: &Matrix<T>) -> usize {
    m.rank()
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    // Zero entries of the left factor are skipped; Casimir and ladder
    // matrices are very sparse.
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let brow = rhs.row(k);
                let orow: &mut [T] = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o = o.clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in matrix sum");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in matrix difference");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x.clone()).collect() }
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(self.data.chunks(self.cols.max(1))).finish()
    }
}

/// Block-diagonal square matrix, stored block by block.
///
/// All operators commuting with the total weight of a tensor product are
/// block-diagonal in the weight basis; products and spans are computed
/// block-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix<T> {
    blocks: Vec<Matrix<T>>,
}

impl<T: Scalar> BlockMatrix<T> {
    pub fn new(blocks: Vec<Matrix<T>>) -> Self {
        assert!(blocks.iter().all(Matrix::is_square), "blocks must be square");
        BlockMatrix { blocks }
    }

    /// Restricts `m` to the diagonal blocks indexed by `groups`; returns
    /// `None` when `m` has a nonzero entry outside those blocks.
    pub fn from_dense(m: &Matrix<T>, groups: &[Vec<usize>]) -> Option<Self> {
        let mut owner = vec![usize::MAX; m.rows()];
        for (g, idx) in groups.iter().enumerate() {
            for &i in idx {
                owner[i] = g;
            }
        }
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if owner[i] != owner[j] && !m.get(i, j).is_zero() {
                    return None;
                }
            }
        }
        Some(BlockMatrix { blocks: groups.iter().map(|idx| m.select(idx, idx)).collect() })
    }

    pub fn blocks(&self) -> &[Matrix<T>] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(Matrix::rows).sum()
    }

    pub fn identity_like(&self) -> Self {
        BlockMatrix { blocks: self.blocks.iter().map(|b| Matrix::identity(b.rows())).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        BlockMatrix { blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }

    pub fn add_scalar(&self, c: &T) -> Self {
        BlockMatrix { blocks: self.blocks.iter().map(|b| b.add_scalar(c)).collect() }
    }

    pub fn to_dense(&self) -> Matrix<T> {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        let mut off = 0;
        for b in &self.blocks {
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    out.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.rows();
        }
        out
    }
}

impl<T: Scalar> Mul for &BlockMatrix<T> {
    type Output = BlockMatrix<T>;

    fn mul(self, rhs: &BlockMatrix<T>) -> BlockMatrix<T> {
        assert_eq!(self.blocks.len(), rhs.blocks.len(), "block structure mismatch");
        BlockMatrix { blocks: self.blocks.iter().zip(&rhs.blocks).map(|(a, b)| a * b).collect() }
    }
}

impl<T: Scalar> Add for &BlockMatrix<T> {
    type Output = BlockMatrix<T>;

    fn add(self, rhs: &BlockMatrix<T>) -> BlockMatrix<T> {
        assert_eq!(self.blocks.len(), rhs.blocks.len(), "block structure mismatch");
        BlockMatrix { blocks: self.blocks.iter().zip(&rhs.blocks).map(|(a, b)| a + b).collect() }
    }
}

impl<T: Scalar> Sub for &BlockMatrix<T> {
    type Output = BlockMatrix<T>;

    fn sub(self, rhs: &BlockMatrix<T>) -> BlockMatrix<T> {
        assert_eq!(self.blocks.len(), rhs.blocks.len(), "block structure mismatch");
        BlockMatrix { blocks: self.blocks.iter().zip(&rhs.blocks).map(|(a, b)| a - b).collect() }
    }
}
