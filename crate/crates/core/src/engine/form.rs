use alloc::vec::Vec;

use num_complex::Complex64;

use super::moments::{gaussian_moment_integrals, shifted_gaussian_moments};
use super::state::{groups_approx_eq, Group, PState};
use crate::{Error, Result};

/// Tolerance of the realness check: `|Im W| ≤ 1e-10·(1 + |Re W|)`.
pub const REALNESS_TOLERANCE: f64 = 1e-10;

/// Closed-form Wigner function
/// `W(q,p) = prefactor · e^{−2aq²} · Σ_groups poly(q,p) e^{sq} e^{−(p−μ)²/(2aħ²)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSpaceForm {
    prefactor: f64,
    a: f64,
    hbar: f64,
    groups: Vec<Group>,
}

impl PhaseSpaceForm {
    /// Attaches the normalization `1/(ħ√(2πa))` and `e^{−2aq²}` to a state.
    pub fn from_state(state: PState) -> Self {
        let (a, hbar) = (state.a(), state.hbar());
        Self::with_prefactor(state, 1.0 / (hbar * libm::sqrt(2.0 * core::f64::consts::PI * a)))
    }

    pub(crate) fn with_prefactor(state: PState, prefactor: f64) -> Self {
        Self {
            prefactor,
            a: state.a(),
            hbar: state.hbar(),
            groups: state.groups().to_vec(),
        }
    }

    pub fn prefactor(&self) -> f64 {
        self.prefactor
    }

    /// Coefficient of `q²` in the position Gaussian, `2a`.
    pub fn q_gauss(&self) -> f64 {
        2.0 * self.a
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    fn variance(&self) -> f64 {
        self.a * self.hbar * self.hbar
    }

    /// Complex value before the realness check.
    pub fn evaluate_complex(&self, q: f64, p: f64) -> Complex64 {
        let extra = -self.q_gauss() * q * q;
        let v = self.variance();
        let sum: Complex64 = self.groups.iter().map(|g| g.eval_with(q, p, v, extra)).sum();
        sum * self.prefactor
    }

    /// `W(q, p)`; fails if the imaginary residue exceeds
    /// [`REALNESS_TOLERANCE`].
    pub fn evaluate(&self, q: f64, p: f64) -> Result<f64> {
        let w = self.evaluate_complex(q, p);
        check_real(q, p, w)?;
        Ok(w.re)
    }

    /// `∬ W dq dp`. The integrand factorizes per group into a `q` and a `p`
    /// Gaussian moment.
    pub fn analytic_integral(&self) -> f64 {
        self.integral_terms().0
    }

    /// `Σ |c_ij M_i M_j|` over the terms of [`analytic_integral`](Self::analytic_integral).
    /// Rounding in the stored coefficients limits the integral to an absolute
    /// accuracy of a few ulps of this magnitude.
    pub fn analytic_integral_magnitude(&self) -> f64 {
        self.integral_terms().1
    }

    fn integral_terms(&self) -> (f64, f64) {
        let v = self.variance();
        let p_norm = libm::sqrt(2.0 * core::f64::consts::PI * v);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut magnitude = 0.0;
        for g in &self.groups {
            let (Some(dq), Some(dp)) = (g.poly.degree_x(), g.poly.degree_y()) else {
                continue;
            };
            let q_moments = gaussian_moment_integrals(dq, self.q_gauss(), g.rate);
            let p_moments = shifted_gaussian_moments(dp, g.center, v);
            for (i, j, c) in g.poly.terms() {
                let t = c * q_moments[i] * p_moments[j] * p_norm;
                magnitude += t.norm();
                acc += t;
            }
        }
        (self.prefactor * acc.re, self.prefactor.abs() * magnitude)
    }

    /// `∫ W(q, p) dp`.
    pub fn marginal_q(&self, q: f64) -> f64 {
        let v = self.variance();
        let p_norm = libm::sqrt(2.0 * core::f64::consts::PI * v);
        let zq = Complex64::new(q, 0.0);
        let mut acc = Complex64::new(0.0, 0.0);
        for g in &self.groups {
            let Some(dp) = g.poly.degree_y() else {
                continue;
            };
            let p_moments = shifted_gaussian_moments(dp, g.center, v);
            let mut inner = Complex64::new(0.0, 0.0);
            for (i, j, c) in g.poly.terms() {
                inner += c * zq.powu(i as u32) * p_moments[j];
            }
            acc += inner * (g.rate * q - self.q_gauss() * q * q).exp() * p_norm;
        }
        self.prefactor * acc.re
    }

    /// Coefficient-level comparison including the prefactor.
    pub fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        if self.a != other.a || self.hbar != other.hbar {
            return false;
        }
        let scale = |f: &Self| -> Vec<Group> {
            f.groups
                .iter()
                .map(|g| Group {
                    poly: g.poly.scale(Complex64::new(f.prefactor, 0.0)),
                    ..g.clone()
                })
                .collect()
        };
        groups_approx_eq(&scale(self), &scale(other), rel_tol)
    }
}

pub(crate) fn check_real(q: f64, p: f64, w: Complex64) -> Result<()> {
    if w.im.abs() <= REALNESS_TOLERANCE * (1.0 + w.re.abs()) {
        Ok(())
    } else {
        Err(Error::RealnessViolation {
            q,
            p,
            real: w.re,
            imag: w.im,
        })
    }
}
