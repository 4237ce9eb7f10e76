use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::check_degree;
use crate::Result;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Dense univariate polynomial with complex coefficients, lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has an
/// empty coefficient list and derived equality is structural.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ComplexPolynomial {
    coeffs: Vec<Complex64>,
}

impl ComplexPolynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        let mut p = Self { coeffs };
        p.trim();
        if let Some(d) = p.degree() {
            check_degree(d)?;
        }
        Ok(p)
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = Self { coeffs: vec![c] };
        p.trim();
        p
    }

    /// `c·x^k`.
    pub fn monomial(k: usize, c: Complex64) -> Result<Self> {
        let mut coeffs = vec![ZERO; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| *c == ZERO) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut p = Self {
            coeffs: (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        };
        p.trim();
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut p = Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        check_degree(self.coeffs.len() + other.coeffs.len() - 2)?;
        let mut out = vec![ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Conjugates every coefficient.
    pub fn conj(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, c| acc * x + c)
    }

    pub fn eval_real(&self, x: f64) -> Complex64 {
        self.eval(Complex64::new(x, 0.0))
    }

    pub fn derivative(&self) -> Self {
        let mut p = Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        };
        p.trim();
        p
    }

    /// `self(inner(x))` by Horner's scheme.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?.add(&Self::constant(*c));
        }
        Ok(acc)
    }

    /// Largest coefficient-wise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }
}
