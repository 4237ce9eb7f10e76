//! Worked examples: Gaussian wave packet, harmonic oscillator and singular
//! oscillator states, with their known closed-form Wigner functions.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::engine::{
    apply, probe_realness, substitute_operator, OperatorForm, PState, PhaseSpaceForm, Sign, Term,
    Wavefunction,
};
use crate::polyalg::{
    factorial, gamma_half_integer, hermite, laguerre, BivariatePolynomial, ComplexPolynomial,
};
use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be a finite positive number",
        })
    }
}

/// Gaussian wave packet centred at `q0` with mean momentum `p0` and width
/// `dq`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PacketParams {
    pub q0: f64,
    pub p0: f64,
    pub dq: f64,
    pub hbar: f64,
}

impl PacketParams {
    pub fn new(q0: f64, p0: f64, dq: f64, hbar: f64) -> Result<Self> {
        positive("dq", dq)?;
        positive("hbar", hbar)?;
        if !(q0.is_finite() && p0.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "q0/p0",
                value: if q0.is_finite() { p0 } else { q0 },
                reason: "must be finite",
            });
        }
        Ok(Self { q0, p0, dq, hbar })
    }

    /// Minimum-uncertainty momentum width `ħ/(2Δq)`.
    pub fn dp(&self) -> f64 {
        self.hbar / (2.0 * self.dq)
    }
}

/// `ψ(q) = C exp[−(q−q0)²/(4Δq²)] e^{ip0 q/ħ}` with `C = [2πΔq²]^{−1/4}`,
/// written as `e^{−aq²}·c·e^{bq}`.
pub fn gaussian_packet(params: &PacketParams) -> Wavefunction {
    let PacketParams { q0, p0, dq, hbar } = *params;
    let var = dq * dq;
    let a = 1.0 / (4.0 * var);
    let amplitude = libm::pow(2.0 * PI * var, -0.25) * libm::exp(-q0 * q0 / (4.0 * var));
    let rate = Complex64::new(q0 / (2.0 * var), p0 / hbar);
    Wavefunction::new(a, hbar, alloc::vec![Term::new(Complex64::new(amplitude, 0.0), 0, rate)])
        .expect("validated packet parameters")
}

/// `W = (1/πħ) exp[−(q−q0)²/(2Δq²)] exp[−(p−p0)²/(2Δp²)]`.
pub fn packet_reference(params: &PacketParams, q: f64, p: f64) -> f64 {
    let (dq, dp) = (params.dq, params.dp());
    let x = (q - params.q0) / dq;
    let y = (p - params.p0) / dp;
    libm::exp(-0.5 * (x * x + y * y)) / (PI * params.hbar)
}

/// `ψ_n(q) = C_n e^{−q²/(2ħ)} H_n(q/√ħ)`, `C_n = (πħ)^{−1/4}/√(2ⁿ n!)`.
pub fn harmonic_oscillator_state(n: usize, hbar: f64) -> Result<Wavefunction> {
    positive("hbar", hbar)?;
    let h = hermite(n)?;
    let norm = libm::pow(PI * hbar, -0.25) / libm::sqrt(libm::ldexp(factorial(n), n as i32));
    let inv_sqrt_hbar = 1.0 / libm::sqrt(hbar);
    let terms: Vec<Term> = h
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != ZERO)
        .map(|(k, c)| {
            Term::new(c * norm * libm::pow(inv_sqrt_hbar, k as f64), k as u32, ZERO)
        })
        .collect();
    Wavefunction::new(1.0 / (2.0 * hbar), hbar, terms)
}

/// `W_n = ((−1)ⁿ/πħ) e^{−2H/ħ} L_n(4H/ħ)` with `H = (p² + q²)/2`.
pub fn harmonic_oscillator_reference(n: usize, q: f64, p: f64, hbar: f64) -> Result<f64> {
    positive("hbar", hbar)?;
    let energy = 0.5 * (p * p + q * q);
    let l = laguerre(n, 0.0)?.eval_real(4.0 * energy / hbar).re;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(sign / (PI * hbar) * libm::exp(-2.0 * energy / hbar) * l)
}

/// Largest `n` accepted by [`hermite_product_identity_check`].
pub const IDENTITY_MAX_N: usize = 8;

/// Checks
/// `H_n[(q − iħ∂_p/2)/√ħ] H_n[(q + iħ∂_p/2)/√ħ] e^{−p²/ħ} = (−1)ⁿ 2ⁿ n! L_n[2(q²+p²)/ħ] e^{−p²/ħ}`
/// with the left side built by the operator engine (`a = 1/(2ħ)`) and the
/// right side from the Laguerre polynomial.
///
/// Returns the largest discrepancy over `points`, relative to
/// `2ⁿ n! e^{−p²/ħ}·max(1, |L_n|)` so that zeros of `L_n` do not blow it up.
pub fn hermite_product_identity_check(n: usize, points: &[(f64, f64)], hbar: f64) -> Result<f64> {
    positive("hbar", hbar)?;
    if n > IDENTITY_MAX_N {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            reason: "identity check is limited to n ≤ 8",
        });
    }
    let inv_sqrt_hbar = 1.0 / libm::sqrt(hbar);
    let h = hermite(n)?;
    let terms: Vec<Term> = h
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != ZERO)
        .map(|(k, c)| Term::new(c * libm::pow(inv_sqrt_hbar, k as f64), k as u32, ZERO))
        .collect();
    let a = 1.0 / (2.0 * hbar);
    let phi = Wavefunction::new(a, hbar, terms)?;
    let plus = substitute_operator(&phi, Sign::Plus, false);
    let minus = substitute_operator(&phi, Sign::Minus, true);
    let lhs = apply(&minus, &apply(&plus, &PState::seed(a, hbar))?)?;

    let l = laguerre(n, 0.0)?;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let scale = libm::ldexp(factorial(n), n as i32);
    let mut worst = 0.0f64;
    for &(q, p) in points {
        let gauss = libm::exp(-p * p / hbar);
        let lag = l.eval_real(2.0 * (q * q + p * p) / hbar).re;
        let rhs = sign * scale * lag * gauss;
        let got = lhs.eval(q, p);
        let denom = scale * gauss * lag.abs().max(1.0);
        if denom > 0.0 {
            worst = worst.max((got - rhs).norm() / denom);
        }
    }
    Ok(worst)
}

/// Eigenstate parameters of `H = p²/2 + q²/2 + g²/q²`. The exponent `α` must
/// be an integer ≥ 1; the coupling follows as `g² = α(α−1)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularParams {
    pub n: usize,
    pub alpha: u32,
    pub hbar: f64,
}

impl SingularParams {
    /// Fractional `alpha` (for instance 1/2, the anyon-like case) gives
    /// [`Error::FractionalPowerUnsupported`].
    pub fn new(n: usize, alpha: f64, hbar: f64) -> Result<Self> {
        positive("hbar", hbar)?;
        if !alpha.is_finite() || libm::trunc(alpha) != alpha {
            return Err(Error::FractionalPowerUnsupported { power: alpha });
        }
        if alpha < 1.0 {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "singular oscillator exponent must be at least 1",
            });
        }
        if alpha > u32::MAX as f64 {
            return Err(Error::DegreeCapExceeded {
                degree: usize::MAX,
                cap: crate::polyalg::degree_cap(),
            });
        }
        Ok(Self {
            n,
            alpha: alpha as u32,
            hbar,
        })
    }

    /// `g² = α(α−1)/2`.
    pub fn g_squared(&self) -> f64 {
        let alpha = self.alpha as f64;
        alpha * (alpha - 1.0) / 2.0
    }

    /// `C_n² = n!/[Γ(n+α+1/2) ħ^{α+1}]`.
    pub fn norm_constant_squared(&self) -> Result<f64> {
        let gamma = gamma_half_integer(2 * (self.n as u32 + self.alpha) + 1)?;
        Ok(factorial(self.n) / (gamma * libm::pow(self.hbar, self.alpha as f64 + 1.0)))
    }

    fn laguerre(&self) -> Result<ComplexPolynomial> {
        laguerre(self.n, self.alpha as f64 - 0.5)
    }
}

/// `ψ_n(q) = C_n q^α L_n^{α−1/2}(q²/ħ) e^{−q²/(2ħ)}`, expanded into monomials.
pub fn singular_oscillator_state(params: &SingularParams) -> Result<Wavefunction> {
    let c = libm::sqrt(params.norm_constant_squared()?);
    let l = params.laguerre()?;
    let terms: Vec<Term> = l
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, lk)| **lk != ZERO)
        .map(|(k, lk)| {
            Term::new(
                lk * c / libm::pow(params.hbar, k as f64),
                params.alpha + 2 * k as u32,
                ZERO,
            )
        })
        .collect();
    Wavefunction::new(1.0 / (2.0 * params.hbar), params.hbar, terms)
}

/// Full-line `⟨ψ|ψ⟩` of [`singular_oscillator_state`], i.e. the factor by
/// which the tabulated constant `C_n` misses full-line normalization.
pub fn singular_norm_discrepancy(params: &SingularParams) -> Result<f64> {
    Ok(singular_oscillator_state(params)?.norm_squared())
}

/// The same Wigner function as the generic engine path, built from the
/// factored operator form
/// `C_n² e^{−q²/ħ} (q² + ħ²∂_p²/4)^α L[(q − iħ∂_p/2)²/ħ] L[(q + iħ∂_p/2)²/ħ] e^{−p²/ħ}`
/// with `L = L_n^{α−1/2}` and the usual `1/(ħ√(2πa))` normalization.
pub fn singular_reference_operator_form(params: &SingularParams) -> Result<PhaseSpaceForm> {
    let hbar = params.hbar;
    let a = 1.0 / (2.0 * hbar);
    let q = BivariatePolynomial::monomial(1, 0, Complex64::new(1.0, 0.0))?;
    let d = |c: Complex64| BivariatePolynomial::monomial(0, 1, c);
    let half = Complex64::new(0.0, hbar / 2.0);
    let l = params.laguerre()?;
    let inv_hbar = Complex64::new(1.0 / hbar, 0.0);

    let mut ops = Vec::with_capacity(3);
    for step in [half, -half] {
        let arg = q.add(&d(step)?);
        let arg_sq = arg.mul(&arg)?.scale(inv_hbar);
        ops.push(BivariatePolynomial::compose(&l, &arg_sq)?);
    }
    let radial = q
        .mul(&q)?
        .add(&BivariatePolynomial::monomial(0, 2, Complex64::new(hbar * hbar / 4.0, 0.0))?);
    let mut power = BivariatePolynomial::constant(Complex64::new(1.0, 0.0));
    for _ in 0..params.alpha {
        power = power.mul(&radial)?;
    }
    ops.push(power);

    let mut state = PState::seed(a, hbar);
    for poly in &ops {
        let op = OperatorForm::from_polynomial(a, hbar, poly, ZERO, ZERO);
        state = apply(&op, &state)?;
    }
    let prefactor =
        params.norm_constant_squared()? / (hbar * libm::sqrt(2.0 * PI * a));
    let form = PhaseSpaceForm::with_prefactor(state, prefactor);
    probe_realness(&form)?;
    Ok(form)
}

/// `ψ_n ∝ e^{−q²/2} q^{1/2} H_n(q)` at `ħ = 1`. Never succeeds: the
/// half-integer powers fail the smoothness condition and are rejected with
/// [`Error::FractionalPowerUnsupported`].
pub fn anyon_state(n: usize) -> Result<Wavefunction> {
    let terms = hermite(n)?
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != ZERO)
        .map(|(k, c)| Term::with_real_power(*c, k as f64 + 0.5, ZERO))
        .collect::<Result<Vec<_>>>()?;
    Wavefunction::new(0.5, 1.0, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::wigner_closed_form;

    const SQRT_PI: f64 = 1.772_453_850_905_516_f64;

    fn probe_points() -> Vec<(f64, f64)> {
        let axis = [-2.0, -1.0, 0.0, 1.0, 2.0];
        axis.iter()
            .flat_map(|&q| axis.iter().map(move |&p| (q, p)))
            .collect()
    }

    #[test]
    fn packet_parameters() {
        let pp = PacketParams::new(0.0, 0.0, core::f64::consts::FRAC_1_SQRT_2, 1.0).unwrap();
        let psi = gaussian_packet(&pp);
        assert!((psi.a() - 0.5).abs() < 1e-15);
        assert_eq!(psi.terms()[0].rate, ZERO);
        assert!((psi.terms()[0].coeff.norm() - libm::pow(PI, -0.25)).abs() < 1e-15);

        let dq = 0.7;
        let pp = PacketParams::new(1.0, 2.0, dq, 1.0).unwrap();
        let rate = gaussian_packet(&pp).terms()[0].rate;
        assert!((rate - Complex64::new(1.0 / (2.0 * dq * dq), 2.0)).norm() < 1e-15);
        assert!(PacketParams::new(0.0, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn packet_reference_values() {
        let pp = PacketParams::new(0.5, -1.0, 1.3, 0.8).unwrap();
        assert!((packet_reference(&pp, 0.5, -1.0) - 1.0 / (PI * 0.8)).abs() < 1e-15);
        let off = packet_reference(&pp, 0.5 + 1.3 * core::f64::consts::SQRT_2, -1.0);
        assert!((off - libm::exp(-1.0) / (PI * 0.8)).abs() < 1e-15);
        // p-direction falls off on the scale Δp = ħ/(2Δq)
        let dp = pp.dp();
        let offp = packet_reference(&pp, 0.5, -1.0 + dp * core::f64::consts::SQRT_2);
        assert!((offp - libm::exp(-1.0) / (PI * 0.8)).abs() < 1e-15);
    }

    #[test]
    fn packet_engine_matches_reference() {
        for &(q0, p0, dq, hbar) in &[(0.0, 0.0, 1.0, 1.0), (1.0, 2.0, 0.7, 1.0), (-2.0, 0.5, 1.3, 0.6)] {
            let pp = PacketParams::new(q0, p0, dq, hbar).unwrap();
            let w = wigner_closed_form(&gaussian_packet(&pp)).unwrap();
            assert!((w.analytic_integral() - 1.0).abs() < 1e-12);
            for (q, p) in probe_points() {
                let (got, want) = (w.evaluate(q, p).unwrap(), packet_reference(&pp, q, p));
                assert!((got - want).abs() < 1e-12, "({q},{p}): {got} vs {want}");
            }
        }
    }

    #[test]
    fn oscillator_states() {
        let psi0 = harmonic_oscillator_state(0, 1.0).unwrap();
        assert_eq!(psi0.a(), 0.5);
        assert_eq!(psi0.terms().len(), 1);
        assert!((psi0.terms()[0].coeff.re - libm::pow(PI, -0.25)).abs() < 1e-15);

        let psi1 = harmonic_oscillator_state(1, 1.0).unwrap();
        assert_eq!(psi1.terms().len(), 1);
        assert_eq!(psi1.terms()[0].power, 1);
        assert!((psi1.terms()[0].coeff.re - libm::pow(4.0 / PI, 0.25)).abs() < 1e-15);

        for n in 0..=10 {
            for hbar in [1.0, 0.5] {
                let psi = harmonic_oscillator_state(n, hbar).unwrap();
                assert!((psi.norm_squared() - 1.0).abs() < 1e-12, "n={n}");
                let w = wigner_closed_form(&psi).unwrap();
                let err = (w.analytic_integral() - 1.0).abs();
                if n <= 8 {
                    assert!(err < 1e-12, "n={n}: {err}");
                } else {
                    assert!(err < 4.0 * f64::EPSILON * w.analytic_integral_magnitude(), "n={n}: {err}");
                }
            }
        }
        assert!(harmonic_oscillator_state(65, 1.0).is_err());
    }

    #[test]
    fn oscillator_reference_values() {
        assert!((harmonic_oscillator_reference(0, 0.0, 0.0, 1.0).unwrap() - 1.0 / PI).abs() < 1e-16);
        assert!((harmonic_oscillator_reference(1, 0.0, 0.0, 1.0).unwrap() + 1.0 / PI).abs() < 1e-16);
        // L_2(2) = -1
        let w = harmonic_oscillator_reference(2, 1.0, 0.0, 1.0).unwrap();
        assert!((w + libm::exp(-1.0) / PI).abs() < 1e-15);
        assert!((w + 0.1171).abs() < 1e-4);
    }

    #[test]
    fn oscillator_engine_matches_reference_and_parity() {
        for n in 0..=8 {
            let w = wigner_closed_form(&harmonic_oscillator_state(n, 1.0).unwrap()).unwrap();
            for (q, p) in probe_points() {
                let got = w.evaluate(q, p).unwrap();
                let want = harmonic_oscillator_reference(n, q, p, 1.0).unwrap();
                assert!((got - want).abs() <= 1e-10 * (1.0 + want.abs()), "n={n}");
                let mirrored = w.evaluate(-q, -p).unwrap();
                assert!((got - mirrored).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn identity_check_small_n() {
        let grid: Vec<(f64, f64)> = (0..9)
            .flat_map(|i| (0..9).map(move |j| (-2.0 + 0.5 * i as f64, -2.0 + 0.5 * j as f64)))
            .collect();
        assert!(hermite_product_identity_check(0, &grid, 1.0).unwrap() < 1e-14);
        assert!(hermite_product_identity_check(1, &grid, 1.0).unwrap() < 1e-10);
        assert!(hermite_product_identity_check(6, &grid, 1.0).unwrap() < 1e-8);
        assert!(hermite_product_identity_check(3, &grid, 0.5).unwrap() < 1e-8);
        assert!(hermite_product_identity_check(9, &grid, 1.0).is_err());
    }

    #[test]
    fn singular_parameters() {
        let p = SingularParams::new(0, 1.0, 1.0).unwrap();
        assert_eq!(p.g_squared(), 0.0);
        assert!((p.norm_constant_squared().unwrap() - 2.0 / SQRT_PI).abs() < 1e-15);
        assert_eq!(SingularParams::new(0, 3.0, 1.0).unwrap().g_squared(), 3.0);
        let err = SingularParams::new(0, 0.5, 1.0).unwrap_err();
        assert_eq!(err, Error::FractionalPowerUnsupported { power: 0.5 });
        assert!(alloc::format!("{err}").contains("smoothness condition"));
        assert!(matches!(
            SingularParams::new(0, 0.0, 1.0),
            Err(Error::InvalidParameter { name: "alpha", .. })
        ));
    }

    #[test]
    fn anyon_is_rejected() {
        assert_eq!(anyon_state(0).unwrap_err(), Error::FractionalPowerUnsupported { power: 0.5 });
        let err = anyon_state(3).unwrap_err();
        assert!(matches!(err, Error::FractionalPowerUnsupported { .. }));
        assert!(alloc::format!("{err}").contains("smoothness condition"));
    }

    #[test]
    fn singular_states() {
        let psi = singular_oscillator_state(&SingularParams::new(0, 1.0, 1.0).unwrap()).unwrap();
        assert_eq!(psi.terms().len(), 1);
        assert_eq!(psi.terms()[0].power, 1);
        let c0 = libm::sqrt(2.0 / SQRT_PI);
        assert!((psi.terms()[0].coeff.re - c0).abs() < 1e-15);

        // α = 2, n = 1: C q² (5/2 − q²)
        let psi = singular_oscillator_state(&SingularParams::new(1, 2.0, 1.0).unwrap()).unwrap();
        let powers: Vec<u32> = psi.terms().iter().map(|t| t.power).collect();
        assert_eq!(powers, [2, 4]);
        let ratio = psi.terms()[0].coeff / psi.terms()[1].coeff;
        assert!((ratio - Complex64::new(-2.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn singular_states_are_eigenfunctions() {
        // −ψ''/2 + q²ψ/2 + g²ψ/q² = (2n + α + 1/2)ψ at ħ = 1
        let h = 1e-3;
        for alpha in 1..=3u32 {
            for n in 0..=3 {
                let p = SingularParams::new(n, alpha as f64, 1.0).unwrap();
                let psi = singular_oscillator_state(&p).unwrap();
                let energy = 2.0 * n as f64 + alpha as f64 + 0.5;
                for q in [0.4, 0.9, 1.7, 2.3] {
                    let f = |x: f64| psi.psi(x).re;
                    let d2 = (-f(q + 2.0 * h) + 16.0 * f(q + h) - 30.0 * f(q) + 16.0 * f(q - h)
                        - f(q - 2.0 * h))
                        / (12.0 * h * h);
                    let lhs = -0.5 * d2 + (0.5 * q * q + p.g_squared() / (q * q)) * f(q);
                    assert!((lhs - energy * f(q)).abs() < 1e-6, "α={alpha} n={n} q={q}");
                }
            }
        }
    }

    #[test]
    fn singular_norm_is_full_line_normalized_at_unit_hbar() {
        for alpha in 1..=3 {
            for n in 0..=3 {
                let p = SingularParams::new(n, alpha as f64, 1.0).unwrap();
                let d = singular_norm_discrepancy(&p).unwrap();
                assert!((d - 1.0).abs() < 1e-12, "α={alpha} n={n}: {d}");
                let w = wigner_closed_form(&singular_oscillator_state(&p).unwrap()).unwrap();
                let bound = (1e-12 * d).max(4.0 * f64::EPSILON * w.analytic_integral_magnitude());
                assert!((w.analytic_integral() - d).abs() < bound, "α={alpha} n={n}");
            }
        }
        // at other ħ the tabulated constant is off by ħ^{-1/2}
        let p = SingularParams::new(1, 2.0, 0.5).unwrap();
        let d = singular_norm_discrepancy(&p).unwrap();
        assert!((d - libm::sqrt(2.0)).abs() < 1e-12);
    }

    #[test]
    fn operator_form_matches_generic_path() {
        for (alpha, n, hbar, tol) in [(1u32, 0usize, 1.0, 1e-12), (2, 0, 1.0, 1e-10), (2, 1, 0.7, 1e-10), (3, 2, 1.0, 1e-10)] {
            let p = SingularParams::new(n, alpha as f64, hbar).unwrap();
            let generic = wigner_closed_form(&singular_oscillator_state(&p).unwrap()).unwrap();
            let factored = singular_reference_operator_form(&p).unwrap();
            for (q, pp) in probe_points() {
                let (g, f) = (generic.evaluate(q, pp).unwrap(), factored.evaluate(q, pp).unwrap());
                assert!((g - f).abs() <= tol * (1.0 + g.abs()), "α={alpha} n={n}: {g} vs {f}");
            }
        }
        assert!(SingularParams::new(0, 1.5, 1.0).is_err());
    }
}
