use alloc::vec::Vec;

use num_complex::Complex64;

use super::dd::Dd;
use super::{check_degree, ComplexPolynomial};
use crate::Result;

/// Physicists' Hermite polynomial `H_n` from its explicit finite sum
/// `Σ_r (−1)^r n!/(r!(n−2r)!) 2^{n−2r} x^{n−2r}`.
///
/// Consecutive terms are generated by their ratio, so every coefficient stays
/// an exactly representable integer as long as it fits in 53 bits.
pub fn hermite(n: usize) -> Result<ComplexPolynomial> {
    check_degree(n)?;
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); n + 1];
    let mut term = libm::ldexp(1.0, n as i32);
    coeffs[n].re = term;
    for r in 1..=n / 2 {
        let k = n - 2 * r;
        term = -term * ((k + 2) * (k + 1)) as f64 / (4 * r) as f64;
        coeffs[k].re = term;
    }
    ComplexPolynomial::new(coeffs)
}

/// Generalized Laguerre polynomial `L_n^{(alpha)}` via the three-term
/// recurrence `(k+1) L_{k+1} = (2k+1+α−x) L_k − (k+α) L_{k−1}`.
pub fn laguerre(n: usize, alpha: f64) -> Result<ComplexPolynomial> {
    check_degree(n)?;
    let mut prev = ComplexPolynomial::from_real(&[1.0])?;
    if n == 0 {
        return Ok(prev);
    }
    let mut curr = ComplexPolynomial::from_real(&[1.0 + alpha, -1.0])?;
    for k in 1..n {
        let kf = k as f64;
        let linear = ComplexPolynomial::from_real(&[2.0 * kf + 1.0 + alpha, -1.0])?;
        let next = linear
            .mul(&curr)?
            .sub(&prev.scale(Complex64::new(kf + alpha, 0.0)))
            .scale(Complex64::new(1.0 / (kf + 1.0), 0.0));
        prev = curr;
        curr = next;
    }
    Ok(curr)
}

/// Coefficients `C_n` of an expansion `Σ_n C_n H_n(x)`.
///
/// Low-degree coefficients of high-degree polynomials are large and the
/// Hermite sum cancels heavily, so each `C_n` also carries a low-order
/// correction term; [`values`](Self::values) exposes the rounded `C_n`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct HermiteCoefficients {
    values: Vec<Complex64>,
    residuals: Vec<Complex64>,
}

impl HermiteCoefficients {
    pub fn new(values: Vec<Complex64>) -> Self {
        let residuals = alloc::vec![Complex64::new(0.0, 0.0); values.len()];
        Self { values, residuals }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `C_n`, zero past the stored length.
    pub fn get(&self, n: usize) -> Complex64 {
        self.values.get(n).copied().unwrap_or_default()
    }

    fn parts(&self, n: usize) -> (Dd, Dd) {
        let (v, r) = (self.values[n], self.residuals[n]);
        (Dd::new(v.re, r.re), Dd::new(v.im, r.im))
    }
}

/// Expands a polynomial in the Hermite basis.
///
/// This is the inverse of the triangular Hermite coefficient matrix written out
/// explicitly: `x^j = j!/2^j Σ_l H_{j−2l}(x) / (l! (j−2l)!)`, hence
/// `C_n = Σ_l p_{n+2l} (n+2l)! / (2^{n+2l} l! n!)`. All weights are positive,
/// and the sums are carried in double-double precision.
pub fn monomial_to_hermite(p: &ComplexPolynomial) -> HermiteCoefficients {
    let Some(deg) = p.degree() else {
        return HermiteCoefficients::default();
    };
    let mut values = Vec::with_capacity(deg + 1);
    let mut residuals = Vec::with_capacity(deg + 1);
    for n in 0..=deg {
        let mut weight = Dd::from_f64(libm::ldexp(1.0, -(n as i32)));
        let (mut re, mut im) = (Dd::ZERO, Dd::ZERO);
        let mut l = 0;
        while n + 2 * l <= deg {
            if l > 0 {
                let j = n + 2 * l;
                weight = weight.mul_f64((j * (j - 1)) as f64).div_f64((4 * l) as f64);
            }
            let c = p.coeff(n + 2 * l);
            re = re.add(weight.mul_f64(c.re));
            im = im.add(weight.mul_f64(c.im));
            l += 1;
        }
        values.push(Complex64::new(re.hi, im.hi));
        residuals.push(Complex64::new(re.lo, im.lo));
    }
    HermiteCoefficients { values, residuals }
}

/// Sums `Σ_n C_n H_n(x)` back into monomial form, in double-double precision:
/// the coefficient of `x^k` is `Σ_r C_{k+2r} (−1)^r (k+2r)! 2^k / (r! k!)`.
pub fn hermite_to_monomial(c: &HermiteCoefficients) -> Result<ComplexPolynomial> {
    let len = c.values.len();
    if len == 0 {
        return Ok(ComplexPolynomial::zero());
    }
    check_degree(len - 1)?;
    let mut coeffs = Vec::with_capacity(len);
    for k in 0..len {
        let mut weight = Dd::from_f64(libm::ldexp(1.0, k as i32));
        let (mut re, mut im) = (Dd::ZERO, Dd::ZERO);
        let mut r = 0;
        while k + 2 * r < len {
            if r > 0 {
                let j = k + 2 * r;
                weight = weight
                    .mul_f64(-((j * (j - 1)) as f64))
                    .div_f64(r as f64);
            }
            let (cre, cim) = c.parts(k + 2 * r);
            re = re.add(weight.mul(cre));
            im = im.add(weight.mul(cim));
            r += 1;
        }
        coeffs.push(Complex64::new(re.hi + re.lo, im.hi + im.lo));
    }
    ComplexPolynomial::new(coeffs)
}
