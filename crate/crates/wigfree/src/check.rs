//! Property checks run by `wigfree check`.

use std::fmt;

use wigfree_core::engine::{wigner_closed_form, PhaseSpaceForm, REALNESS_TOLERANCE};
use wigfree_core::oracle::{wigner_quadrature_with_rule, GaussHermiteRule};
use wigfree_core::systems::{
    gaussian_packet, harmonic_oscillator_reference, packet_reference,
    singular_norm_discrepancy, singular_reference_operator_form, PacketParams,
};

use crate::builtin::System;
use crate::error::CliError;
use crate::grid::GridSpec;

const MARGINAL_POINTS: [f64; 5] = [-2.0, -1.0, 0.0, 1.0, 2.0];

#[derive(Debug, Clone, PartialEq)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {:<22} {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub label: String,
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }
}

fn line(name: &'static str, worst: f64, bound: f64, what: &str) -> CheckLine {
    CheckLine {
        name,
        passed: worst <= bound,
        detail: format!("{what}: max error {worst:.3e} (bound {bound:.1e})"),
    }
}

/// Worst `|a − b| / scale(b)` over the grid.
fn grid_error(
    grid: &GridSpec,
    mut a: impl FnMut(f64, f64) -> Result<f64, CliError>,
    mut b: impl FnMut(f64, f64) -> Result<f64, CliError>,
    scale: impl Fn(f64) -> f64,
) -> Result<f64, CliError> {
    let mut worst = 0.0f64;
    for (q, p) in grid.points() {
        let (x, y) = (a(q, p)?, b(q, p)?);
        worst = worst.max((x - y).abs() / scale(y));
    }
    Ok(worst)
}

/// Realness, normalization, marginal and oracle checks, plus reference
/// comparisons for the built-in systems. `tol` bounds the engine-versus-
/// quadrature difference relative to `max(1, |W|)`.
pub fn run(system: &System, tol: f64, order: usize) -> Result<CheckReport, CliError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::input(format!("--tol must be positive, got {tol}")));
    }
    let psi = system.wavefunction();
    let form = wigner_closed_form(psi)?;
    let grid = GridSpec::standard();
    let mut lines = Vec::new();

    let worst_im = grid
        .points()
        .map(|(q, p)| {
            let w = form.evaluate_complex(q, p);
            w.im.abs() / (1.0 + w.re.abs())
        })
        .fold(0.0, f64::max);
    lines.push(line("realness", worst_im, REALNESS_TOLERANCE, "|Im W|/(1+|Re W|) on 17x17 grid"));

    let norm = psi.norm_squared();
    let integral = form.analytic_integral();
    let floor = 4.0 * f64::EPSILON * form.analytic_integral_magnitude();
    let bound = (1e-12 * norm.abs()).max(floor);
    lines.push(CheckLine {
        name: "normalization",
        passed: (integral - norm).abs() <= bound,
        detail: format!(
            "integral W = {integral:.16e}, <psi|psi> = {norm:.16e}, |diff| {:.3e} (bound {bound:.1e})",
            (integral - norm).abs()
        ),
    });

    let worst_marginal = MARGINAL_POINTS
        .iter()
        .map(|&q| {
            let d = psi.density(q);
            (form.marginal_q(q) - d).abs() / (1.0 + d)
        })
        .fold(0.0, f64::max);
    lines.push(line("marginal", worst_marginal, 1e-10, "int W dp vs |psi(q)|^2 at q = -2..2"));

    let rule = GaussHermiteRule::new(order)?;
    let worst = grid_error(
        &grid,
        |q, p| Ok(form.evaluate(q, p)?),
        |q, p| Ok(wigner_quadrature_with_rule(psi, q, p, &rule)?),
        |w| w.abs().max(1.0),
    )?;
    lines.push(line("oracle", worst, tol, &format!("closed form vs quadrature order {order}")));

    match system {
        System::Oscillator { n, psi } => {
            let hbar = psi.hbar();
            let worst = grid_error(
                &grid,
                |q, p| Ok(form.evaluate(q, p)?),
                |q, p| Ok(harmonic_oscillator_reference(*n, q, p, hbar)?),
                |w| 1.0 + w.abs(),
            )?;
            lines.push(line("laguerre-reference", worst, 1e-10, "vs ((-1)^n/pi hbar) e^{-2H/hbar} L_n(4H/hbar)"));
        }
        System::Packet { params, .. } => {
            let worst = grid_error(
                &grid,
                |q, p| Ok(form.evaluate(q, p)?),
                |q, p| Ok(packet_reference(params, q, p)),
                |_| 1.0,
            )?;
            lines.push(line("packet-reference", worst, 1e-10, "vs product Gaussian"));
            let origin = PacketParams::new(0.0, 0.0, params.dq, params.hbar)?;
            let centered: PhaseSpaceForm = wigner_closed_form(&gaussian_packet(&origin))?;
            let worst = grid_error(
                &grid,
                |q, p| Ok(form.evaluate(q, p)?),
                |q, p| Ok(centered.evaluate(q - params.q0, p - params.p0)?),
                |_| 1.0,
            )?;
            lines.push(line(
                "translation-covariance",
                worst,
                1e-10,
                "W(q,p; q0,p0) vs W(q-q0,p-p0; 0,0)",
            ));
        }
        System::Singular { params, .. } => {
            let factored = singular_reference_operator_form(params)?;
            let worst = grid_error(
                &grid,
                |q, p| Ok(form.evaluate(q, p)?),
                |q, p| Ok(factored.evaluate(q, p)?),
                |w| 1.0 + w.abs(),
            )?;
            lines.push(line("factored-operator-form", worst, 1e-10, "generic path vs factored operator"));
            let d = singular_norm_discrepancy(params)?;
            lines.push(CheckLine {
                name: "radial-constant",
                passed: true,
                detail: format!("full-line <psi|psi> with tabulated C_n: {d:.16e} (informational)"),
            });
        }
        System::Custom { .. } => {}
    }

    Ok(CheckReport {
        label: system.label(),
        lines,
    })
}
