//! Rectangular phase-space grids and parallel evaluation over them.

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;
use wigfree_core::engine::{wigner_closed_form, PhaseSpaceForm, Wavefunction};
use wigfree_core::oracle::{wigner_quadrature_with_rule, GaussHermiteRule};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub q_min: f64,
    pub q_max: f64,
    pub p_min: f64,
    pub p_max: f64,
    pub nq: usize,
    pub np: usize,
}

impl GridSpec {
    pub fn new(q_min: f64, q_max: f64, p_min: f64, p_max: f64, nq: usize, np: usize) -> Result<Self, CliError> {
        for (axis, lo, hi, n) in [("q", q_min, q_max, nq), ("p", p_min, p_max, np)] {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(CliError::input(format!(
                    "grid: need finite --{axis}-min < --{axis}-max, got {lo} and {hi}"
                )));
            }
            if n < 2 {
                return Err(CliError::input(format!("grid: --n{axis} must be at least 2, got {n}")));
            }
        }
        Ok(Self {
            q_min,
            q_max,
            p_min,
            p_max,
            nq,
            np,
        })
    }

    /// The 17×17 grid over `[−4, 4]²`.
    pub fn standard() -> Self {
        Self::new(-4.0, 4.0, -4.0, 4.0, 17, 17).expect("valid")
    }

    pub fn q(&self, i: usize) -> f64 {
        node(self.q_min, self.q_max, self.nq, i)
    }

    pub fn p(&self, j: usize) -> f64 {
        node(self.p_min, self.p_max, self.np, j)
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        (0..self.nq).flat_map(move |i| (0..self.np).map(move |j| (self.q(i), self.p(j))))
    }
}

fn node(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Quad,
}

/// Point evaluator for one wavefunction.
#[derive(Debug)]
pub enum Evaluator<'a> {
    Closed(PhaseSpaceForm),
    Quad {
        psi: &'a Wavefunction,
        rule: GaussHermiteRule,
    },
}

impl<'a> Evaluator<'a> {
    pub fn new(psi: &'a Wavefunction, method: Method, order: usize) -> Result<Self, CliError> {
        Ok(match method {
            Method::Closed => Self::Closed(wigner_closed_form(psi)?),
            Method::Quad => {
                if order < wigfree_core::oracle::MIN_ORDER {
                    return Err(CliError::input(format!(
                        "--order must be at least {}, got {order}",
                        wigfree_core::oracle::MIN_ORDER
                    )));
                }
                Self::Quad {
                    psi,
                    rule: GaussHermiteRule::new(order)?,
                }
            }
        })
    }

    pub fn at(&self, q: f64, p: f64) -> Result<f64, CliError> {
        Ok(match self {
            Self::Closed(form) => form.evaluate(q, p)?,
            Self::Quad { psi, rule } => wigner_quadrature_with_rule(psi, q, p, rule)?,
        })
    }

    /// `values[i][j] = W(q_i, p_j)`, rows evaluated in parallel.
    pub fn grid(&self, grid: &GridSpec) -> Result<Vec<Vec<f64>>, CliError> {
        (0..grid.nq)
            .into_par_iter()
            .map(|i| (0..grid.np).map(|j| self.at(grid.q(i), grid.p(j))).collect())
            .collect()
    }
}
