//! The integral-free Wigner transform.
//!
//! For `ψ(q) = e^{−aq²} φ(q)`,
//!
//! ```text
//! W(q,p) = 1/(ħ√(2πa)) · e^{−2aq²} · φ*(q − (iħ/2)∂_p) φ(q + (iħ/2)∂_p) · e^{−p²/(2aħ²)}
//! ```
//!
//! Each operand is expanded into commuting `q`-multiplications, `∂_p`
//! powers, `e^{bq}` factors and translations `e^{λ∂_p}`
//! ([`substitute_operator`]), then applied right to left to the momentum
//! Gaussian ([`apply`]). Intermediate values stay in the class of
//! polynomial × exponential × shifted Gaussian ([`PState`]), so no integral is
//! ever evaluated.

use num_complex::Complex64;

mod form;
mod moments;
mod operator;
mod state;
mod wavefunction;

pub use form::{PhaseSpaceForm, REALNESS_TOLERANCE};
pub use operator::{apply, substitute_operator, OperatorForm, OperatorTerm, Sign};
pub use state::{Group, PState};
pub use wavefunction::{Term, Wavefunction};

use crate::polyalg::check_degree;
use crate::Result;

/// Points at which a freshly assembled form is checked for realness.
const PROBES: [f64; 5] = [-2.0, -1.0, 0.0, 1.0, 2.0];

/// `W(q,p)` of `psi` in closed form.
///
/// Returns [`Error::RealnessViolation`](crate::Error::RealnessViolation) if the
/// assembled form has a non-negligible imaginary part at any probe point,
/// which can only come from an engine defect.
pub fn wigner_closed_form(psi: &Wavefunction) -> Result<PhaseSpaceForm> {
    let plus = substitute_operator(psi, Sign::Plus, false);
    let minus = substitute_operator(psi, Sign::Minus, true);
    let seed = PState::seed(psi.a(), psi.hbar());
    let state = apply(&minus, &apply(&plus, &seed)?)?;
    let form = PhaseSpaceForm::from_state(state);
    probe_realness(&form)?;
    Ok(form)
}

pub(crate) fn probe_realness(form: &PhaseSpaceForm) -> Result<()> {
    for q in PROBES {
        for p in PROBES {
            form.evaluate(q, p)?;
        }
    }
    Ok(())
}

/// `χ(p) = (√(2π/a)/ħ) (i∂_p)^k e^{−p²/(2aħ²)}`, the Fourier transform
/// `∫ y^k e^{−(ħ²a/2)y² − iyp} dy`, by `k` applications of the engine's
/// derivative rule.
pub fn chi_closed_form(k: usize, p: f64, a: f64, hbar: f64) -> Result<Complex64> {
    check_degree(k)?;
    let seed = PState::seed(a, hbar);
    let variance = seed.variance();
    let mut group = seed.groups()[0].clone();
    for _ in 0..k {
        group = group.d_dp(variance)?;
    }
    let i_pow = Complex64::new(0.0, 1.0).powu(k as u32);
    let norm = libm::sqrt(2.0 * core::f64::consts::PI / a) / hbar;
    Ok(group.eval_with(0.0, p, variance, 0.0) * i_pow * norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{hermite_to_monomial, monomial_to_hermite};
    use crate::Error;
    use alloc::vec;
    use alloc::vec::Vec;
    use core::f64::consts::PI;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn ground() -> Wavefunction {
        Wavefunction::new(0.5, 1.0, vec![Term::new(c(libm::pow(PI, -0.25), 0.0), 0, c(0.0, 0.0))])
            .unwrap()
    }

    fn first_excited() -> Wavefunction {
        // (4/π)^{1/4} q e^{-q²/2}
        Wavefunction::new(0.5, 1.0, vec![Term::new(c(libm::pow(4.0 / PI, 0.25), 0.0), 1, c(0.0, 0.0))])
            .unwrap()
    }

    #[test]
    fn ground_state_values() {
        let w = wigner_closed_form(&ground()).unwrap();
        assert!((w.evaluate(0.0, 0.0).unwrap() - 1.0 / PI).abs() < 1e-15);
        let expected = libm::exp(-1.0) / PI;
        assert!((w.evaluate(1.0, 0.0).unwrap() - expected).abs() < 1e-15);
        assert!((w.evaluate(1.0, 0.0).unwrap() - 0.117_099_663_0).abs() < 1e-10);
        assert_eq!(w.evaluate(1e3, 1e3).unwrap(), 0.0);
        assert_eq!(w.groups().len(), 1);
        assert!((w.prefactor() - 1.0 / libm::sqrt(PI)).abs() < 1e-16);
        assert_eq!(w.q_gauss(), 1.0);
    }

    #[test]
    fn first_excited_is_negative_at_origin() {
        let w = wigner_closed_form(&first_excited()).unwrap();
        assert!((w.evaluate(0.0, 0.0).unwrap() + 1.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn normalization_and_scaling() {
        let w = wigner_closed_form(&ground()).unwrap();
        assert!((w.analytic_integral() - 1.0).abs() < 1e-14);
        let w2 = wigner_closed_form(&ground().scaled(c(2.0, 0.0))).unwrap();
        assert!((w2.analytic_integral() - 4.0).abs() < 1e-13);
        let w1 = wigner_closed_form(&first_excited()).unwrap();
        assert!((w1.analytic_integral() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn marginals() {
        let w = wigner_closed_form(&ground()).unwrap();
        assert!((w.marginal_q(0.0) - 0.564_189_583_5).abs() < 1e-10);
        let w1 = wigner_closed_form(&first_excited()).unwrap();
        assert!(w1.marginal_q(0.0).abs() < 1e-16);
    }

    #[test]
    fn zero_wavefunction_is_zero() {
        let w = wigner_closed_form(&ground().scaled(c(0.0, 0.0))).unwrap();
        assert!(w.groups().is_empty());
        assert_eq!(w.evaluate(0.3, -0.2).unwrap(), 0.0);
        assert_eq!(w.analytic_integral(), 0.0);
    }

    #[test]
    fn chi_examples() {
        let root_two_pi = libm::sqrt(2.0 * PI);
        let v = chi_closed_form(0, 0.0, 1.0, 1.0).unwrap();
        assert!((v - c(root_two_pi, 0.0)).norm() < 1e-15);
        assert!((v.re - 2.506_628_274_6).abs() < 1e-10);
        for (a, hbar) in [(0.5, 1.0), (2.0, 0.5)] {
            assert!(chi_closed_form(1, 0.0, a, hbar).unwrap().norm() < 1e-15);
        }
        // ∫ y² e^{-y²/2} dy = √(2π)
        let v2 = chi_closed_form(2, 0.0, 1.0, 1.0).unwrap();
        assert!((v2 - c(root_two_pi, 0.0)).norm() < 1e-14);
        assert!(chi_closed_form(65, 0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn chi_against_riemann_sum() {
        let (a, hbar) = (0.8, 0.9);
        let h = 1e-3;
        for k in 0..=5 {
            for p in [-1.0, 0.0, 2.0] {
                let mut acc = c(0.0, 0.0);
                for j in -20_000..=20_000 {
                    let y = j as f64 * h;
                    acc += c(-hbar * hbar * a * y * y / 2.0, -y * p).exp() * libm::pow(y, k as f64) * h;
                }
                let got = chi_closed_form(k, p, a, hbar).unwrap();
                assert!((got - acc).norm() < 1e-10, "k={k} p={p}: {got} vs {acc}");
            }
        }
    }

    #[test]
    fn realness_violation_reports() {
        let err = form::check_real(0.0, 0.0, c(1.0, 1.0)).unwrap_err();
        assert!(matches!(err, Error::RealnessViolation { .. }));
        assert!(form::check_real(0.0, 0.0, c(1.0, 1e-11)).is_ok());
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        (
            -1.0f64..1.0,
            -1.0f64..1.0,
            0u32..=3,
            -0.5f64..0.5,
            -1.0f64..1.0,
        )
            .prop_map(|(cr, ci, m, br, bi)| Term::new(c(cr, ci), m, c(br, bi)))
    }

    fn arb_wavefunction() -> impl Strategy<Value = Wavefunction> {
        (0.3f64..1.5, 0.5f64..1.5, prop::collection::vec(arb_term(), 1..=4))
            .prop_map(|(a, hbar, terms)| Wavefunction::new(a, hbar, terms).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn operators_commute(psi in arb_wavefunction()) {
            let plus = substitute_operator(&psi, Sign::Plus, false);
            let minus = substitute_operator(&psi, Sign::Minus, true);
            let seed = PState::seed(psi.a(), psi.hbar());
            let one = apply(&minus, &apply(&plus, &seed).unwrap()).unwrap();
            let other = apply(&plus, &apply(&minus, &seed).unwrap()).unwrap();
            prop_assert!(one.approx_eq(&other, 1e-12));
        }

        #[test]
        fn closed_form_is_real(psi in arb_wavefunction()) {
            let w = wigner_closed_form(&psi).unwrap();
            for i in 0..5 {
                for j in 0..5 {
                    let (q, p) = (-3.0 + 1.5 * i as f64, -3.0 + 1.5 * j as f64);
                    let v = w.evaluate_complex(q, p);
                    prop_assert!(v.im.abs() <= 1e-10 * (1.0 + v.re.abs()));
                }
            }
        }

        #[test]
        fn normalization_matches_norm(psi in arb_wavefunction()) {
            let w = wigner_closed_form(&psi).unwrap();
            let norm = psi.norm_squared();
            prop_assert!((w.analytic_integral() - norm).abs() <= 1e-12 * norm.abs().max(1e-300));
        }

        #[test]
        fn marginal_is_density(psi in arb_wavefunction()) {
            let w = wigner_closed_form(&psi).unwrap();
            for q in [-2.0, -1.0, 0.0, 1.0, 2.0] {
                let (m, d) = (w.marginal_q(q), psi.density(q));
                prop_assert!((m - d).abs() <= 1e-10 * (1.0 + d), "q={} {} vs {}", q, m, d);
            }
        }

        #[test]
        fn hermite_round_trip_leaves_form_unchanged(
            coeffs in prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..=7),
            a in 0.3f64..1.5,
        ) {
            let terms: Vec<Term> = coeffs
                .iter()
                .enumerate()
                .map(|(m, &(re, im))| Term::new(c(re, im), m as u32, c(0.0, 0.0)))
                .collect();
            let psi = Wavefunction::new(a, 1.0, terms).unwrap();
            let parts: Vec<_> = psi
                .polynomial_parts()
                .unwrap()
                .into_iter()
                .map(|(rate, p)| (rate, hermite_to_monomial(&monomial_to_hermite(&p)).unwrap()))
                .collect();
            let back = Wavefunction::from_polynomial_parts(a, 1.0, &parts).unwrap();
            let w = wigner_closed_form(&psi).unwrap();
            let w_back = wigner_closed_form(&back).unwrap();
            prop_assert!(w.approx_eq(&w_back, 1e-12));
        }
    }
}
