use alloc::vec::Vec;

use num_complex::Complex64;

use super::state::{Group, PState};
use super::wavefunction::Wavefunction;
use crate::polyalg::{binomial, BivariatePolynomial};
use crate::{Error, Result};

/// Which of the two operands of the Wigner operator product to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// `φ(q + (iħ/2)∂_p)`
    Plus,
    /// `φ*(q − (iħ/2)∂_p)` (with `conjugated = true`)
    Minus,
}

impl Sign {
    fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// `coeff·q^{q_power}·∂_p^{d_power}·e^{rate·q}·e^{shift·∂_p}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorTerm {
    pub coeff: Complex64,
    pub q_power: u32,
    pub d_power: u32,
    pub shift: Complex64,
    pub rate: Complex64,
}

/// A sum of [`OperatorTerm`]s. All factors commute, so each term is kept with
/// `q` powers first.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorForm {
    a: f64,
    hbar: f64,
    terms: Vec<OperatorTerm>,
}

/// Builds `φ(q + (iħ/2)∂_p)` for [`Sign::Plus`] or `φ*(q − (iħ/2)∂_p)` for
/// [`Sign::Minus`] with `conjugated`.
///
/// A term `c·q^m·e^{bq}` expands to
/// `c Σ_α binom(m,α) (±iħ/2)^α q^{m−α} ∂_p^α · e^{bq} e^{λ∂_p}` with
/// `λ = ±ibħ/2`. Conjugation applies to `c` and `b` only, never to the
/// `i` of the substituted argument.
pub fn substitute_operator(psi: &Wavefunction, sign: Sign, conjugated: bool) -> OperatorForm {
    let hbar = psi.hbar();
    let step = Complex64::new(0.0, sign.value() * hbar / 2.0);
    let mut terms = Vec::new();
    for t in psi.terms() {
        let (c, b) = if conjugated {
            (t.coeff.conj(), t.rate.conj())
        } else {
            (t.coeff, t.rate)
        };
        let shift = step * b;
        let m = t.power as usize;
        let mut step_pow = Complex64::new(1.0, 0.0);
        for alpha in 0..=m {
            terms.push(OperatorTerm {
                coeff: c * binomial(m, alpha) * step_pow,
                q_power: (m - alpha) as u32,
                d_power: alpha as u32,
                shift,
                rate: b,
            });
            step_pow *= step;
        }
    }
    OperatorForm {
        a: psi.a(),
        hbar,
        terms,
    }
}

impl OperatorForm {
    /// Operator from a commuting polynomial `Σ c_ij q^i ∂_p^j`, combined with
    /// the given translation and `e^{rate·q}` factor.
    pub fn from_polynomial(
        a: f64,
        hbar: f64,
        poly: &BivariatePolynomial,
        shift: Complex64,
        rate: Complex64,
    ) -> Self {
        let terms = poly
            .terms()
            .map(|(i, j, c)| OperatorTerm {
                coeff: c,
                q_power: i as u32,
                d_power: j as u32,
                shift,
                rate,
            })
            .collect();
        Self { a, hbar, terms }
    }

    pub fn terms(&self) -> &[OperatorTerm] {
        &self.terms
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }
}

/// Applies an operator to a momentum-space state.
///
/// Translations and derivatives are applied to each group once per distinct
/// `(shift, rate)` pair, building the derivative ladder up to the highest
/// `∂_p` power needed.
pub fn apply(op: &OperatorForm, state: &PState) -> Result<PState> {
    if op.a != state.a() || op.hbar != state.hbar() {
        return Err(Error::ParameterMismatch);
    }
    let variance = state.variance();

    let mut buckets: Vec<(Complex64, Complex64, Vec<&OperatorTerm>)> = Vec::new();
    for t in &op.terms {
        match buckets
            .iter_mut()
            .find(|(shift, rate, _)| *shift == t.shift && *rate == t.rate)
        {
            Some((_, _, members)) => members.push(t),
            None => buckets.push((t.shift, t.rate, alloc::vec![t])),
        }
    }

    let mut out = PState::from_groups(state.a(), state.hbar(), Vec::new());
    for group in state.groups() {
        for (shift, rate, members) in &buckets {
            let max_d = members.iter().map(|t| t.d_power).max().unwrap_or(0) as usize;
            let mut ladder = Vec::with_capacity(max_d + 1);
            ladder.push(group.translate(*shift));
            for k in 0..max_d {
                let next = ladder[k].d_dp(variance)?;
                ladder.push(next);
            }
            let mut poly = BivariatePolynomial::zero();
            for t in members {
                let term = ladder[t.d_power as usize].poly.mul_x_pow(t.q_power as usize)?;
                poly = poly.add_scaled(&term, t.coeff);
            }
            out.accumulate(Group {
                poly,
                rate: group.rate + rate,
                center: ladder[0].center,
            });
        }
    }
    out.canonicalize();
    Ok(out)
}
