use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::{binomial, check_bivariate_degree, ComplexPolynomial};
use crate::Result;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Dense polynomial in two commuting variables `x` and `y`.
///
/// The engine uses `x = q` and `y = p` for phase-space polynomials and
/// `y = ∂_p` for operator polynomials. Coefficients are stored row-major with
/// the `x` power outermost; trailing all-zero rows and columns are trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariatePolynomial {
    rows: usize,
    cols: usize,
    coeffs: Vec<Complex64>,
}

impl Default for BivariatePolynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self {
            rows: 0,
            cols: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = Self {
            rows: 1,
            cols: 1,
            coeffs: vec![c],
        };
        p.trim();
        p
    }

    /// `c·x^i·y^j`.
    pub fn monomial(i: usize, j: usize, c: Complex64) -> Result<Self> {
        check_bivariate_degree(i.max(j))?;
        let mut p = Self::with_shape(i + 1, j + 1);
        p.coeffs[i * (j + 1) + j] = c;
        p.trim();
        Ok(p)
    }

    /// Embeds a univariate polynomial in `x`.
    pub fn from_x(poly: &ComplexPolynomial) -> Self {
        let mut p = Self::with_shape(poly.coeffs().len(), 1);
        p.coeffs.copy_from_slice(poly.coeffs());
        p.trim();
        p
    }

    /// Embeds a univariate polynomial in `y`.
    pub fn from_y(poly: &ComplexPolynomial) -> Self {
        let mut p = Self::with_shape(1, poly.coeffs().len());
        p.coeffs.copy_from_slice(poly.coeffs());
        p.trim();
        p
    }

    fn with_shape(rows: usize, cols: usize) -> Self {
        if rows == 0 || cols == 0 {
            return Self::zero();
        }
        Self {
            rows,
            cols,
            coeffs: vec![ZERO; rows * cols],
        }
    }

    /// Coefficient of `x^i y^j`.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        if i < self.rows && j < self.cols {
            self.coeffs[i * self.cols + j]
        } else {
            ZERO
        }
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut Complex64 {
        &mut self.coeffs[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `x`, `None` for zero.
    pub fn degree_x(&self) -> Option<usize> {
        self.rows.checked_sub(1)
    }

    /// Degree in `y`, `None` for zero.
    pub fn degree_y(&self) -> Option<usize> {
        self.cols.checked_sub(1)
    }

    /// Iterates over nonzero coefficients as `(i, j, c)` for `c·x^i y^j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        let cols = self.cols;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != ZERO)
            .map(move |(k, c)| (k / cols, k % cols, *c))
    }

    fn trim(&mut self) {
        let mut rows = self.rows;
        while rows > 0 && (0..self.cols).all(|j| self.coeffs[(rows - 1) * self.cols + j] == ZERO) {
            rows -= 1;
        }
        let mut cols = self.cols;
        while cols > 0 && (0..rows).all(|i| self.coeffs[i * self.cols + cols - 1] == ZERO) {
            cols -= 1;
        }
        if rows == self.rows && cols == self.cols {
            return;
        }
        if rows == 0 || cols == 0 {
            *self = Self::zero();
            return;
        }
        let mut out = Self::with_shape(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *out.at_mut(i, j) = self.get(i, j);
            }
        }
        *self = out;
    }

    fn reshaped(&self, rows: usize, cols: usize) -> Self {
        let mut out = Self::with_shape(rows, cols);
        for i in 0..self.rows.min(rows) {
            for j in 0..self.cols.min(cols) {
                *out.at_mut(i, j) = self.get(i, j);
            }
        }
        out
    }

    /// `self + factor·other`.
    pub fn add_scaled(&self, other: &Self, factor: Complex64) -> Self {
        let mut out = self.reshaped(self.rows.max(other.rows), self.cols.max(other.cols));
        for (i, j, c) in other.terms() {
            *out.at_mut(i, j) += c * factor;
        }
        out.trim();
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, Complex64::new(1.0, 0.0))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|c| *c *= factor);
        out.trim();
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let rows = self.rows + other.rows - 1;
        let cols = self.cols + other.cols - 1;
        check_bivariate_degree((rows - 1).max(cols - 1))?;
        let mut out = Self::with_shape(rows, cols);
        for (i, j, a) in self.terms() {
            for (k, l, b) in other.terms() {
                *out.at_mut(i + k, j + l) += a * b;
            }
        }
        out.trim();
        Ok(out)
    }

    /// Multiplies by `x^k`.
    pub fn mul_x_pow(&self, k: usize) -> Result<Self> {
        if self.is_zero() || k == 0 {
            return Ok(self.clone());
        }
        check_bivariate_degree(self.rows - 1 + k)?;
        let mut out = Self::with_shape(self.rows + k, self.cols);
        out.coeffs[k * self.cols..].copy_from_slice(&self.coeffs);
        Ok(out)
    }

    /// Multiplies by `(y − center)`.
    pub fn mul_y_minus(&self, center: Complex64) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        check_bivariate_degree(self.cols)?;
        let mut out = Self::with_shape(self.rows, self.cols + 1);
        for (i, j, c) in self.terms() {
            *out.at_mut(i, j + 1) += c;
            *out.at_mut(i, j) -= c * center;
        }
        out.trim();
        Ok(out)
    }

    /// Partial derivative with respect to `y`.
    pub fn d_dy(&self) -> Self {
        if self.cols <= 1 {
            return Self::zero();
        }
        let mut out = Self::with_shape(self.rows, self.cols - 1);
        for (i, j, c) in self.terms() {
            if j > 0 {
                *out.at_mut(i, j - 1) = c * j as f64;
            }
        }
        out.trim();
        out
    }

    /// Substitutes `y → y + shift`.
    pub fn shift_y(&self, shift: Complex64) -> Self {
        if shift == ZERO || self.cols <= 1 {
            return self.clone();
        }
        let mut powers = Vec::with_capacity(self.cols);
        let mut acc = Complex64::new(1.0, 0.0);
        for _ in 0..self.cols {
            powers.push(acc);
            acc *= shift;
        }
        let mut out = Self::with_shape(self.rows, self.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let c = self.get(i, k);
                if c == ZERO {
                    continue;
                }
                for j in 0..=k {
                    *out.at_mut(i, j) += c * binomial(k, j) * powers[k - j];
                }
            }
        }
        out.trim();
        out
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        let mut acc = ZERO;
        for i in (0..self.rows).rev() {
            let row = &self.coeffs[i * self.cols..(i + 1) * self.cols];
            let inner = row.iter().rev().fold(ZERO, |a, c| a * y + c);
            acc = acc * x + inner;
        }
        acc
    }

    /// `poly(inner)` with `inner` bivariate, by Horner's scheme.
    pub fn compose(poly: &ComplexPolynomial, inner: &Self) -> Result<Self> {
        let mut acc = Self::zero();
        for c in poly.coeffs().iter().rev() {
            acc = acc.mul(inner)?.add(&Self::constant(*c));
        }
        Ok(acc)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficient-wise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let rows = self.rows.max(other.rows);
        let cols = self.cols.max(other.cols);
        let mut worst = 0.0f64;
        for i in 0..rows {
            for j in 0..cols {
                worst = worst.max((self.get(i, j) - other.get(i, j)).norm());
            }
        }
        worst
    }
}
