//! Exact dense linear algebra over ℚ(i): reduced row echelon form, rank,
//! and nullspace bases.
//!
//! Matrices are dense and row-major. Every computation is fraction-free in
//! spirit only — entries are exact Gaussian rationals throughout, so ranks
//! and kernels are certificates, not approximations. At the library's scale
//! (spaces of dimension ≤ C(8,4) = 70) dense elimination is instant.

use num_traits::{One, Zero};

use crate::scalars::GaussianRational;

/// A dense rows×cols matrix over ℚ(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    /// The zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    /// The n×n identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    /// Build from explicit rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: n_rows,
            cols: n_cols,
            data,
        }
    }

    /// Build from explicit columns; all columns must share one length.
    pub fn from_columns(columns: &[Vec<GaussianRational>]) -> Self {
        let n_cols = columns.len();
        let n_rows = columns.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(n_rows, n_cols);
        for (c, column) in columns.iter().enumerate() {
            assert_eq!(column.len(), n_rows, "ragged columns");
            for (r, value) in column.iter().enumerate() {
                m.set(r, c, value.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: GaussianRational) {
        self.data[r * self.cols + c] = value;
    }

    /// Matrix product self·rhs (shapes must chain).
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let sum = out.get(r, c) + &(a * b);
                    out.set(r, c, sum);
                }
            }
        }
        out
    }

    /// Conjugate transpose Aᴴ — the adjoint for the Hermitian product that
    /// declares the monomial basis orthonormal.
    pub fn hermitian_transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    /// Stack matrices with equal column counts vertically: [self; below].
    pub fn stack_vertical(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols, "column mismatch in vertical stack");
        let mut data = Vec::with_capacity((self.rows + below.rows) * self.cols);
        data.extend_from_slice(&self.data);
        data.extend_from_slice(&below.data);
        Matrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    /// Concatenate matrices with equal row counts horizontally: [self | right].
    pub fn concat_horizontal(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows, "row mismatch in horizontal concat");
        let mut out = Matrix::zeros(self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..right.cols {
                out.set(r, self.cols + c, right.get(r, c).clone());
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot column indices, via exact
    /// Gauss-Jordan elimination (first nonzero entry in a column scan picks
    /// the pivot row).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m
                .get(pivot_row, col)
                .inv()
                .expect("pivot entry is nonzero by selection");
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.subtract_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Rank over ℚ(i).
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right nullspace {x : self·x = 0}, one vector per free
    /// column in ascending order, each normalized so its first nonzero
    /// coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussianRational>> {
        let (reduced, pivots) = self.rref();
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut vector = vec![GaussianRational::zero(); self.cols];
            vector[free] = GaussianRational::one();
            for (row, &pivot_col) in pivots.iter().enumerate() {
                vector[pivot_col] = -reduced.get(row, free).clone();
            }
            normalize_leading_coefficient(&mut vector);
            basis.push(vector);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &GaussianRational) {
        for c in 0..self.cols {
            let scaled = self.get(r, c) * factor;
            self.set(r, c, scaled);
        }
    }

    fn subtract_scaled_row(&mut self, target: usize, source: usize, factor: &GaussianRational) {
        for c in 0..self.cols {
            let delta = self.get(source, c) * factor;
            let value = self.get(target, c) - &delta;
            self.set(target, c, value);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }
}

/// Scale a vector so its first nonzero coordinate becomes 1.
fn normalize_leading_coefficient(vector: &mut [GaussianRational]) {
    let Some(lead) = vector.iter().find(|v| !v.is_zero()).cloned() else {
        return;
    };
    let inv = lead.inv().expect("leading coefficient is nonzero");
    for entry in vector.iter_mut() {
        *entry = &*entry * &inv;
    }
}
