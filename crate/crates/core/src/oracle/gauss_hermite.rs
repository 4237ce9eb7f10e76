use alloc::vec::Vec;

use crate::{Error, Result};

const SQRT_PI: f64 = 1.772_453_850_905_516_f64;
const MAX_QL_ITERATIONS: usize = 60;

/// Gauss–Hermite rule for `∫ f(t) e^{−t²} dt`, exact for polynomials of degree
/// below `2·order`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussHermiteRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussHermiteRule {
    /// Golub–Welsch: the nodes are the eigenvalues of the Jacobi matrix
    /// (zero diagonal, off-diagonal `√(k/2)`), the weights `√π` times the
    /// squared first components of its normalized eigenvectors. Nodes are then
    /// polished by one Newton step on the orthonormal recurrence.
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter {
                name: "order",
                value: 0.0,
                reason: "a quadrature rule needs at least one node",
            });
        }
        let mut diag = alloc::vec![0.0; order];
        let mut off: Vec<f64> = (1..order).map(|k| libm::sqrt(k as f64 / 2.0)).collect();
        off.push(0.0);
        let mut first = alloc::vec![0.0; order];
        first[0] = 1.0;
        implicit_ql(&mut diag, &mut off, &mut first)?;

        let mut pairs: Vec<(f64, f64)> = diag
            .iter()
            .zip(&first)
            .map(|(&x, &z)| (newton_polish(x, order), SQRT_PI * z * z))
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        // Symmetrize: the rule is exactly symmetric about the origin.
        let n = pairs.len();
        for i in 0..n / 2 {
            let x = 0.5 * (pairs[n - 1 - i].0 - pairs[i].0);
            let w = 0.5 * (pairs[n - 1 - i].1 + pairs[i].1);
            pairs[i] = (-x, w);
            pairs[n - 1 - i] = (x, w);
        }
        if n % 2 == 1 {
            pairs[n / 2].0 = 0.0;
        }
        Ok(Self {
            nodes: pairs.iter().map(|p| p.0).collect(),
            weights: pairs.iter().map(|p| p.1).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<T>(&self, mut f: impl FnMut(f64) -> T) -> T
    where
        T: core::ops::Mul<f64, Output = T> + core::iter::Sum<T>,
    {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| f(t) * w)
            .sum()
    }
}

/// One Newton step on the orthonormal Hermite polynomial of degree `n`, using
/// the ratio `h_j/h_{j−1}` so that nothing overflows at large `|x|`.
fn newton_polish(x: f64, n: usize) -> f64 {
    let mut ratio = core::f64::consts::SQRT_2 * x;
    for j in 1..n {
        let jf = j as f64;
        ratio = libm::sqrt(2.0 / (jf + 1.0)) * x - libm::sqrt(jf / (jf + 1.0)) / ratio;
    }
    let step = ratio / libm::sqrt(2.0 * n as f64);
    if step.is_finite() && step.abs() < 1e-8 * (1.0 + x.abs()) {
        x - step
    } else {
        x
    }
}

/// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal matrix.
/// `off[i]` couples rows `i` and `i+1`; only the first component of each
/// eigenvector is tracked, in `first`.
fn implicit_ql(diag: &mut [f64], off: &mut [f64], first: &mut [f64]) -> Result<()> {
    let n = diag.len();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() + dd == dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(Error::NoConvergence {
                    order: n,
                    difference: off[l].abs(),
                });
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = libm::hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = libm::hypot(f, g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                let z = first[i + 1];
                first[i + 1] = s * first[i] + c * z;
                first[i] = c * first[i] - s * z;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}
