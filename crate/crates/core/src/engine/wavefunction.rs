use alloc::vec::Vec;

use num_complex::Complex64;

use super::moments::gaussian_moment_integrals;
use crate::polyalg::{check_degree, ComplexPolynomial};
use crate::{Error, Result};

/// One term `c·q^m·e^{bq}` of `φ(q)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    pub power: u32,
    pub rate: Complex64,
}

impl Term {
    pub fn new(coeff: Complex64, power: u32, rate: Complex64) -> Self {
        Self { coeff, power, rate }
    }

    /// Builds a term from a power given as a real number, as read from a file.
    ///
    /// Non-integer powers such as `q^{1/2}` have no Hermite expansion and are
    /// rejected with [`Error::FractionalPowerUnsupported`].
    pub fn with_real_power(coeff: Complex64, power: f64, rate: Complex64) -> Result<Self> {
        if !power.is_finite() || libm::trunc(power) != power {
            return Err(Error::FractionalPowerUnsupported { power });
        }
        if power < 0.0 {
            return Err(Error::InvalidParameter {
                name: "power",
                value: power,
                reason: "powers of q must be non-negative",
            });
        }
        if power > u32::MAX as f64 {
            return Err(Error::DegreeCapExceeded {
                degree: usize::MAX,
                cap: crate::polyalg::degree_cap(),
            });
        }
        Ok(Self::new(coeff, power as u32, rate))
    }

    fn eval(&self, q: Complex64) -> Complex64 {
        self.coeff * q.powu(self.power) * (self.rate * q).exp()
    }
}

/// `ψ(q) = e^{−aq²} Σ_j c_j q^{m_j} e^{b_j q}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Wavefunction {
    a: f64,
    hbar: f64,
    terms: Vec<Term>,
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
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

impl Wavefunction {
    /// Validates and canonicalizes: terms with the same `(m, b)` are merged,
    /// keeping first-occurrence order.
    pub fn new(a: f64, hbar: f64, terms: Vec<Term>) -> Result<Self> {
        check_positive("a", a)?;
        check_positive("hbar", hbar)?;
        if terms.is_empty() {
            return Err(Error::EmptyWavefunction);
        }
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            check_degree(t.power as usize)?;
            if !(t.coeff.is_finite() && t.rate.is_finite()) {
                return Err(Error::InvalidParameter {
                    name: "term",
                    value: f64::NAN,
                    reason: "coefficients and rates must be finite",
                });
            }
            match merged
                .iter_mut()
                .find(|m| m.power == t.power && m.rate == t.rate)
            {
                Some(m) => m.coeff += t.coeff,
                None => merged.push(t),
            }
        }
        Ok(Self {
            a,
            hbar,
            terms: merged,
        })
    }

    /// Gaussian width parameter `a` of `e^{−aq²}`.
    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// `φ(q)` at a complex argument.
    pub fn phi(&self, q: Complex64) -> Complex64 {
        self.terms.iter().map(|t| t.eval(q)).sum()
    }

    /// `ψ(q)` at a real argument.
    pub fn psi(&self, q: f64) -> Complex64 {
        let z = Complex64::new(q, 0.0);
        self.terms
            .iter()
            .map(|t| t.coeff * z.powu(t.power) * (t.rate * q - self.a * q * q).exp())
            .sum()
    }

    /// `|ψ(q)|²`.
    pub fn density(&self, q: f64) -> f64 {
        self.psi(q).norm_sqr()
    }

    /// Multiplies every amplitude by `factor`.
    pub fn scaled(&self, factor: Complex64) -> Self {
        let mut out = self.clone();
        out.terms.iter_mut().for_each(|t| t.coeff *= factor);
        out
    }

    /// Degree of the largest power of `q`.
    pub fn max_power(&self) -> u32 {
        self.terms.iter().map(|t| t.power).max().unwrap_or(0)
    }

    /// `⟨ψ|ψ⟩` from Gaussian moment formulas, term pair by term pair.
    pub fn norm_squared(&self) -> f64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for tj in &self.terms {
            for tk in &self.terms {
                let n = (tj.power + tk.power) as usize;
                let moments = gaussian_moment_integrals(n, 2.0 * self.a, tj.rate.conj() + tk.rate);
                acc += tj.coeff.conj() * tk.coeff * moments[n];
            }
        }
        acc.re
    }

    /// Groups `φ` into `Σ_b P_b(q) e^{bq}`, one polynomial per distinct rate.
    pub fn polynomial_parts(&self) -> Result<Vec<(Complex64, ComplexPolynomial)>> {
        let mut parts: Vec<(Complex64, ComplexPolynomial)> = Vec::new();
        for t in &self.terms {
            let mono = ComplexPolynomial::monomial(t.power as usize, t.coeff)?;
            match parts.iter_mut().find(|(rate, _)| *rate == t.rate) {
                Some((_, p)) => *p = p.add(&mono),
                None => parts.push((t.rate, mono)),
            }
        }
        Ok(parts)
    }

    /// Inverse of [`polynomial_parts`](Self::polynomial_parts). Zero
    /// coefficients are dropped unless everything is zero.
    pub fn from_polynomial_parts(
        a: f64,
        hbar: f64,
        parts: &[(Complex64, ComplexPolynomial)],
    ) -> Result<Self> {
        let mut terms = Vec::new();
        for (rate, poly) in parts {
            for (m, c) in poly.coeffs().iter().enumerate() {
                if *c != Complex64::new(0.0, 0.0) {
                    terms.push(Term::new(*c, m as u32, *rate));
                }
            }
        }
        if terms.is_empty() {
            terms.push(Term::new(Complex64::new(0.0, 0.0), 0, Complex64::new(0.0, 0.0)));
        }
        Self::new(a, hbar, terms)
    }
}
