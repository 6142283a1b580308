use std::fmt;

use num_complex::Complex;
use num_traits::Float;

use crate::error::LaurentError;
use crate::poly::{Coeff, LaurentPoly};
use crate::torus::TorusPoint;

/// Dense rectangular matrix over [`LaurentPoly`], row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix<C> {
    mu: usize,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly<C>>,
}

impl<C: Coeff> PolyMatrix<C> {
    pub fn zeros(mu: usize, rows: usize, cols: usize) -> Self {
        Self { mu, rows, cols, entries: vec![LaurentPoly::zero(mu); rows * cols] }
    }

    pub fn identity(mu: usize, n: usize) -> Self {
        let mut m = Self::zeros(mu, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(mu));
        }
        m
    }

    pub fn from_rows(mu: usize, rows: Vec<Vec<LaurentPoly<C>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for p in row {
                assert_eq!(p.mu(), mu);
                entries.push(p);
            }
        }
        Self { mu, rows: r, cols: c, entries }
    }

    pub fn from_fn(
        mu: usize,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly<C>,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { mu, rows, cols, entries }
    }

    pub fn mu(&self) -> usize {
        self.mu
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

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<C> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly<C>) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly<C>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly<C>>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly<C>) -> LaurentPoly<C>) -> Self {
        Self { mu: self.mu, rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.mu, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LaurentError> {
        if self.cols != rhs.rows {
            return Err(LaurentError::ShapeMismatch((self.rows, self.cols), (rhs.rows, rhs.cols)));
        }
        if self.mu != rhs.mu {
            return Err(LaurentError::VariableCountMismatch(self.mu, rhs.mu));
        }
        Ok(Self::from_fn(self.mu, self.rows, rhs.cols, |i, j| {
            let mut acc = LaurentPoly::zero(self.mu);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), rhs.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
            acc
        }))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, LaurentError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(LaurentError::ShapeMismatch((self.rows, self.cols), (rhs.rows, rhs.cols)));
        }
        Ok(Self::from_fn(self.mu, self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j)))
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let d = m.get(i, i) - &LaurentPoly::one(self.mu);
            m.set(i, i, d);
        }
        m
    }

    /// Delete row `l` and column `m` (0-based).
    pub fn minor(&self, l: usize, m: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != l).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != m).collect();
        self.select(&rows, &cols)
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(self.mu, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Determinant by fraction-free Bareiss elimination. The empty matrix has determinant 1.
    pub fn det(&self) -> Result<LaurentPoly<C>, LaurentError> {
        if !self.is_square() {
            return Err(LaurentError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one(self.mu));
        }
        let mut a = self.to_rows();
        let mut negate = false;
        let mut prev = LaurentPoly::one(self.mu);
        for k in 0..n - 1 {
            // sparsest nonzero pivot keeps intermediate sizes small
            let pivot = (k..n)
                .filter(|&r| !a[r][k].is_zero())
                .min_by_key(|&r| a[r][k].num_terms());
            let Some(p) = pivot else {
                return Ok(LaurentPoly::zero(self.mu));
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_divide(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Determinant by Laplace expansion along the first row.
    pub fn det_laplace(&self) -> Result<LaurentPoly<C>, LaurentError> {
        if !self.is_square() {
            return Err(LaurentError::NotSquare(self.rows, self.cols));
        }
        if self.rows == 0 {
            return Ok(LaurentPoly::one(self.mu));
        }
        let mut acc = LaurentPoly::zero(self.mu);
        for j in 0..self.cols {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let term = a * &self.minor(0, j).det_laplace()?;
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        Ok(acc)
    }

    pub fn evaluate<T: Float>(&self, z: &TorusPoint<T>) -> Vec<Vec<Complex<T>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.evaluate(z)).collect())
            .collect()
    }
}

impl<C: Coeff> fmt::Debug for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
