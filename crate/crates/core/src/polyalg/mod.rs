//! Complex-coefficient polynomial algebra: dense univariate and bivariate
//! polynomials, the Hermite and Laguerre families, Hermite/monomial basis
//! conversion and Γ at half-integer arguments.

use core::sync::atomic::{AtomicUsize, Ordering};

use crate::{Error, Result};

mod bivariate;
mod dd;
mod gamma;
mod orthogonal;
mod poly;

pub use bivariate::BivariatePolynomial;
pub use gamma::gamma_half_integer;
pub use orthogonal::{
    hermite, hermite_to_monomial, laguerre, monomial_to_hermite, HermiteCoefficients,
};
pub use poly::ComplexPolynomial;

/// Default maximum degree of a univariate polynomial.
pub const DEFAULT_DEGREE_CAP: usize = 64;

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_DEGREE_CAP);

/// Current process-wide degree cap for univariate polynomials.
///
/// Bivariate polynomials produced by the operator engine are products of two
/// capped factors, so they are allowed twice the cap in each variable.
pub fn degree_cap() -> usize {
    DEGREE_CAP.load(Ordering::Relaxed)
}

/// Overrides the degree cap. Intended to be called once at start-up.
pub fn set_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn check_degree(degree: usize) -> Result<()> {
    let cap = degree_cap();
    if degree > cap {
        Err(Error::DegreeCapExceeded { degree, cap })
    } else {
        Ok(())
    }
}

pub(crate) fn check_bivariate_degree(degree: usize) -> Result<()> {
    let cap = 2 * degree_cap();
    if degree > cap {
        Err(Error::DegreeCapExceeded { degree, cap })
    } else {
        Ok(())
    }
}

/// Binomial coefficient as a float, exact for the small arguments used here.
pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc
}

pub(crate) fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}
