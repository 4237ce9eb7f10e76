//! Direct numerical evaluation of the Wigner integral
//! `W(q,p) = (1/2π) ∫ ψ*(q − ħy/2) ψ(q + ħy/2) e^{−iyp} dy`.
//!
//! Shares nothing with the closed-form engine except the [`Wavefunction`]
//! type. The Gaussian factor of `ψ` turns the integrand into
//! `e^{−2aq²} φ*(q − ħy/2) φ(q + ħy/2) e^{−(ħ²a/2)y² − iyp}`, which after
//! `t = ħ√(a/2)·y` is a Gauss–Hermite integrand.

use num_complex::Complex64;

use crate::engine::Wavefunction;
use crate::{Error, Result};

mod gauss_hermite;

pub use gauss_hermite::GaussHermiteRule;

/// Smallest order accepted by [`wigner_quadrature`].
pub const MIN_ORDER: usize = 8;
const ADAPTIVE_START: usize = 16;
const ADAPTIVE_MAX: usize = 1024;
const REALNESS_TOLERANCE: f64 = 1e-10;

/// Complex quadrature sum for `W(q, p)` with a prebuilt rule.
pub fn wigner_quadrature_complex(
    psi: &Wavefunction,
    q: f64,
    p: f64,
    rule: &GaussHermiteRule,
) -> Complex64 {
    let (a, hbar) = (psi.a(), psi.hbar());
    let t_to_y = 1.0 / (hbar * libm::sqrt(a / 2.0));
    let t_to_x = 1.0 / libm::sqrt(2.0 * a);
    let sum = rule.integrate(|t| {
        let (x, y) = (t * t_to_x, t * t_to_y);
        let left = psi.phi(Complex64::new(q - x, 0.0)).conj();
        let right = psi.phi(Complex64::new(q + x, 0.0));
        left * right * Complex64::new(0.0, -y * p).exp()
    });
    sum * (t_to_y * libm::exp(-2.0 * a * q * q) / (2.0 * core::f64::consts::PI))
}

/// `W(q, p)` from a prebuilt rule, so repeated evaluations share nodes.
pub fn wigner_quadrature_with_rule(
    psi: &Wavefunction,
    q: f64,
    p: f64,
    rule: &GaussHermiteRule,
) -> Result<f64> {
    let w = wigner_quadrature_complex(psi, q, p, rule);
    if w.im.abs() > REALNESS_TOLERANCE * (1.0 + w.re.abs()) {
        return Err(Error::RealnessViolation {
            q,
            p,
            real: w.re,
            imag: w.im,
        });
    }
    Ok(w.re)
}

/// `W(q, p)` by Gauss–Hermite quadrature of the given order (at least
/// [`MIN_ORDER`]).
pub fn wigner_quadrature(psi: &Wavefunction, q: f64, p: f64, order: usize) -> Result<f64> {
    if order < MIN_ORDER {
        return Err(Error::InvalidParameter {
            name: "order",
            value: order as f64,
            reason: "quadrature order must be at least 8",
        });
    }
    wigner_quadrature_with_rule(psi, q, p, &GaussHermiteRule::new(order)?)
}

/// Doubles the order from 16 until two successive results agree within
/// `tol`. Returns the value at the lower of the two agreeing orders together
/// with that order.
pub fn wigner_quadrature_adaptive(
    psi: &Wavefunction,
    q: f64,
    p: f64,
    tol: f64,
) -> Result<(f64, usize)> {
    if tol.is_nan() || tol < 1e-13 {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
            reason: "tolerance must be at least 1e-13",
        });
    }
    let mut order = ADAPTIVE_START;
    let mut value = wigner_quadrature(psi, q, p, order)?;
    loop {
        let next_order = order * 2;
        if next_order > ADAPTIVE_MAX {
            let refined = wigner_quadrature(psi, q, p, ADAPTIVE_MAX)?;
            return Err(Error::NoConvergence {
                order: ADAPTIVE_MAX,
                difference: (refined - value).abs(),
            });
        }
        let next = wigner_quadrature(psi, q, p, next_order)?;
        if (next - value).abs() < tol {
            return Ok((value, order));
        }
        order = next_order;
        value = next;
    }
}

/// Result of [`condition_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionReport {
    pub finite: bool,
    /// Last estimate of `∫ e^{−q²} |φ(q)|² dq`.
    pub estimate: f64,
    /// Half-width of the window the estimate was taken over.
    pub half_width: f64,
}

const CONDITION_RTOL: f64 = 1e-6;
const CONDITION_DOUBLINGS: usize = 8;

/// Numerically checks that `∫ e^{−q²} |φ(q)|² dq` is finite, the
/// precondition for `φ` to have a convergent Hermite expansion.
///
/// The integral over `[−b, b]` is compared with `[−2b, 2b]`; the window keeps
/// doubling (at most eight times) until the relative change drops below
/// `1e-6`.
pub fn condition_check(psi: &Wavefunction, half_width: f64) -> Result<ConditionReport> {
    if !(half_width > 0.0 && half_width.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "half_width",
            value: half_width,
            reason: "must be a finite positive number",
        });
    }
    let integrand = |q: f64| -> f64 {
        let z = Complex64::new(q, 0.0);
        psi.terms()
            .iter()
            .map(|t| t.coeff * z.powu(t.power) * (t.rate * q - q * q / 2.0).exp())
            .sum::<Complex64>()
            .norm_sqr()
    };
    let mut b = half_width;
    let mut estimate = simpson(&integrand, b);
    for _ in 0..CONDITION_DOUBLINGS {
        let wider = simpson(&integrand, 2.0 * b);
        let change = (wider - estimate).abs();
        b *= 2.0;
        estimate = wider;
        if change <= CONDITION_RTOL * wider.abs() {
            return Ok(ConditionReport {
                finite: true,
                estimate,
                half_width: b,
            });
        }
    }
    Ok(ConditionReport {
        finite: false,
        estimate,
        half_width: b,
    })
}

fn simpson(f: &impl Fn(f64) -> f64, half_width: f64) -> f64 {
    let intervals = (((2.0 * half_width) / 0.005) as usize).max(2000) & !1;
    let h = 2.0 * half_width / intervals as f64;
    let mut acc = f(-half_width) + f(half_width);
    for k in 1..intervals {
        let x = -half_width + k as f64 * h;
        acc += if k % 2 == 1 { 4.0 } else { 2.0 } * f(x);
    }
    acc * h / 3.0
}
