//! Exact linear algebra over ℚ: dense matrices with Gaussian elimination
//! (determinant, inverse, rank, solving, kernels) and an incremental
//! row-echelon span used for filtrations and derivative closures.

use num_traits::{One, Zero};

use crate::error::CoreError;
use crate::poly::Rat;

/// A dense rows×cols matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>, // row-major
}

impl QMatrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    /// Identity matrix of size n.
    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Build from row vectors (all must share one length).
    ///
    /// # Panics
    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "all rows must have equal length");
            data.extend(row);
        }
        QMatrix { rows: r, cols: c, data }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at (i, j).
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }

    /// Set entry (i, j).
    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        self.data[i * self.cols + j] = v;
    }

    /// The i-th row as a slice.
    pub fn row(&self, i: usize) -> &[Rat] {
        assert!(i < self.rows, "row index out of range");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Transpose.
    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product `self · other`.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn matmul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + &(a * other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Determinant by Gaussian elimination (square matrices only).
    ///
    /// # Panics
    /// Panics if the matrix is not square.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant requires a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let pivot = match pivot {
                None => return Rat::zero(),
                Some(p) => p,
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = -det;
            }
            let p = m.get(col, col).clone();
            det *= &p;
            for r in (col + 1)..n {
                let factor = m.get(r, col) / &p;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c) - &(&factor * m.get(col, c));
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination.
    ///
    /// # Panics
    /// Panics if the matrix is not square.
    pub fn inverse(&self) -> Result<QMatrix, CoreError> {
        assert_eq!(self.rows, self.cols, "inverse requires a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero()).ok_or_else(|| {
                CoreError::SingularMatrix(format!("no pivot in column {col}"))
            })?;
            if pivot != col {
                m.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = m.get(col, col).clone();
            for c in 0..n {
                let v = m.get(col, c) / &p;
                m.set(col, c, v);
                let w = inv.get(col, c) / &p;
                inv.set(col, c, w);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = m.get(r, c) - &(&factor * m.get(col, c));
                    m.set(r, c, v);
                    let w = inv.get(r, c) - &(&factor * inv.get(col, c));
                    inv.set(r, c, w);
                }
            }
        }
        Ok(inv)
    }

    /// Rank via row reduction.
    pub fn rank(&self) -> usize {
        let mut span = RowSpan::new(self.cols);
        for i in 0..self.rows {
            span.insert(self.row(i).to_vec());
        }
        span.dim()
    }

    /// One solution x of `self · x = b`, or `None` when inconsistent.
    /// Free variables are set to zero.
    ///
    /// # Panics
    /// Panics if `b.len() != rows`.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        // Row-reduce the augmented matrix [self | b].
        let mut aug = QMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref_in_place();
        // Inconsistent iff a pivot lands in the augmented column.
        if pivots.iter().any(|&c| c == self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// A basis of the right kernel {x : self·x = 0}.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<usize> = pivots.clone();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// nonzero row (rows beyond the rank become zero and sink to the
    /// bottom).
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot = match ((row)..self.rows).find(|&r| !self.get(r, col).is_zero()) {
                None => continue,
                Some(p) => p,
            };
            self.swap_rows(pivot, row);
            let p = self.get(row, col).clone();
            for c in col..self.cols {
                let v = self.get(row, c) / &p;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let v = self.get(r, c) - &(&factor * self.get(row, c));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// An incrementally built subspace of ℚ^width, kept in reduced row echelon
/// form so membership tests and dimension queries are O(dim·width).
#[derive(Debug, Clone)]
pub struct RowSpan {
    width: usize,
    /// Echelon rows, each normalized to leading coefficient 1, sorted by
    /// pivot column; fully reduced against each other.
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowSpan {
    /// Empty span inside ℚ^width.
    pub fn new(width: usize) -> Self {
        RowSpan { width, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Dimension of the span.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Ambient width.
    pub fn width(&self) -> usize {
        self.width
    }

    /// The echelon basis rows.
    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Fully reduce `v` against the current rows.
    fn reduce(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (vi, ri) in v.iter_mut().zip(row) {
                *vi -= &factor * ri;
            }
        }
        v
    }

    /// Whether `v` already lies in the span.
    ///
    /// # Panics
    /// Panics on width mismatch.
    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        self.reduce(v.to_vec()).iter().all(Rat::is_zero)
    }

    /// Add a vector; returns `true` when it enlarged the span.
    ///
    /// # Panics
    /// Panics on width mismatch.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut v = self.reduce(v);
        let pivot = match v.iter().position(|x| !x.is_zero()) {
            None => return false,
            Some(p) => p,
        };
        let lead = v[pivot].clone();
        for x in v.iter_mut() {
            *x /= &lead;
        }
        // Back-substitute into existing rows to stay fully reduced.
        for row in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (ri, vi) in row.iter_mut().zip(&v) {
                *ri -= &factor * vi;
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }
}
