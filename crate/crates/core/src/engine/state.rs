use alloc::vec::Vec;

use num_complex::Complex64;

use crate::polyalg::BivariatePolynomial;
use crate::Result;

/// Matching radius for group keys `(s, μ)`.
pub(crate) const KEY_TOLERANCE: f64 = 1e-14;

fn same_key(x: Complex64, y: Complex64) -> bool {
    (x - y).norm() <= KEY_TOLERANCE * (1.0 + x.norm().max(y.norm()))
}

/// `poly(q, p)·e^{sq}·e^{−(p−μ)²/(2aħ²)}`.
///
/// The width of the momentum Gaussian is owned by the enclosing [`PState`].
#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    pub poly: BivariatePolynomial,
    /// `s`, the rate of `e^{sq}`.
    pub rate: Complex64,
    /// `μ`, the (complex) center of the momentum Gaussian.
    pub center: Complex64,
}

impl Group {
    fn has_key(&self, rate: Complex64, center: Complex64) -> bool {
        same_key(self.rate, rate) && same_key(self.center, center)
    }

    /// `∂_p` by the product rule:
    /// `(∂_p poly − poly·(p−μ)/(aħ²))·Gauss`.
    pub(crate) fn d_dp(&self, variance: f64) -> Result<Self> {
        let drift = self
            .poly
            .mul_y_minus(self.center)?
            .scale(Complex64::new(-1.0 / variance, 0.0));
        Ok(Self {
            poly: self.poly.d_dy().add(&drift),
            rate: self.rate,
            center: self.center,
        })
    }

    /// `e^{λ∂_p}`: `p → p + λ` inside the polynomial, `μ → μ − λ`.
    pub(crate) fn translate(&self, shift: Complex64) -> Self {
        Self {
            poly: self.poly.shift_y(shift),
            rate: self.rate,
            center: self.center - shift,
        }
    }

    /// Value at `(q, p)` with an extra real exponent folded in before
    /// exponentiation.
    pub(crate) fn eval_with(&self, q: f64, p: f64, variance: f64, extra: f64) -> Complex64 {
        let dp = Complex64::new(p, 0.0) - self.center;
        let exponent = self.rate * q - dp * dp / (2.0 * variance) + extra;
        let e = exponent.exp();
        if e == Complex64::new(0.0, 0.0) {
            return e;
        }
        self.poly.eval(Complex64::new(q, 0.0), Complex64::new(p, 0.0)) * e
    }
}

/// A sum of [`Group`]s sharing the momentum Gaussian width `2aħ²`.
#[derive(Debug, Clone, PartialEq)]
pub struct PState {
    a: f64,
    hbar: f64,
    groups: Vec<Group>,
}

impl PState {
    /// The momentum Gaussian `e^{−p²/(2aħ²)}`.
    pub fn seed(a: f64, hbar: f64) -> Self {
        Self {
            a,
            hbar,
            groups: alloc::vec![Group {
                poly: BivariatePolynomial::constant(Complex64::new(1.0, 0.0)),
                rate: Complex64::new(0.0, 0.0),
                center: Complex64::new(0.0, 0.0),
            }],
        }
    }

    pub(crate) fn from_groups(a: f64, hbar: f64, groups: Vec<Group>) -> Self {
        let mut s = Self {
            a,
            hbar,
            groups: Vec::new(),
        };
        for g in groups {
            s.accumulate(g);
        }
        s.canonicalize();
        s
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// `aħ²`: the variance of the momentum Gaussian.
    pub fn variance(&self) -> f64 {
        self.a * self.hbar * self.hbar
    }

    /// Denominator `2aħ²` of the momentum Gaussian exponent.
    pub fn gaussian_denominator(&self) -> f64 {
        2.0 * self.variance()
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub(crate) fn accumulate(&mut self, g: Group) {
        if g.poly.is_zero() {
            return;
        }
        match self
            .groups
            .iter_mut()
            .find(|h| h.has_key(g.rate, g.center))
        {
            Some(h) => h.poly = h.poly.add(&g.poly),
            None => self.groups.push(g),
        }
    }

    /// Drops vanished groups and orders the rest by `(s, μ)`.
    pub(crate) fn canonicalize(&mut self) {
        self.groups.retain(|g| !g.poly.is_zero());
        self.groups.sort_by(|x, y| {
            let kx = [x.rate.re, x.rate.im, x.center.re, x.center.im];
            let ky = [y.rate.re, y.rate.im, y.center.re, y.center.im];
            kx.partial_cmp(&ky).unwrap_or(core::cmp::Ordering::Equal)
        });
    }

    /// Value of the state (no Wigner prefactor) at `(q, p)`.
    pub fn eval(&self, q: f64, p: f64) -> Complex64 {
        self.groups
            .iter()
            .map(|g| g.eval_with(q, p, self.variance(), 0.0))
            .sum()
    }

    /// Group-by-group comparison: every coefficient agrees within
    /// `rel_tol` times the largest coefficient of either state.
    pub fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        groups_approx_eq(&self.groups, &other.groups, rel_tol)
    }
}

pub(crate) fn groups_approx_eq(lhs: &[Group], rhs: &[Group], rel_tol: f64) -> bool {
    let scale = lhs
        .iter()
        .chain(rhs)
        .map(|g| g.poly.max_abs())
        .fold(0.0, f64::max);
    let tol = rel_tol * scale.max(f64::MIN_POSITIVE);
    let zero = BivariatePolynomial::zero();
    let covered = |from: &[Group], to: &[Group]| {
        from.iter().all(|g| {
            let other = to
                .iter()
                .find(|h| h.has_key(g.rate, g.center))
                .map_or(&zero, |h| &h.poly);
            g.poly.max_abs_diff(other) <= tol
        })
    };
    covered(lhs, rhs) && covered(rhs, lhs)
}
