use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial degree {degree} exceeds the configured cap of {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error(
        "fractional power q^{power} violates the smoothness condition of φ(q): \
         only non-negative integer powers admit a Hermite expansion"
    )]
    FractionalPowerUnsupported { power: f64 },

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("wavefunction must have at least one term")]
    EmptyWavefunction,

    #[error("state parameters (a, ħ) do not match the operator's")]
    ParameterMismatch,

    #[error(
        "Wigner function is not real at (q, p) = ({q}, {p}): imaginary residue {imag:e} \
         against real part {real:e}"
    )]
    RealnessViolation { q: f64, p: f64, real: f64, imag: f64 },

    #[error("quadrature did not converge: |Δ| = {difference:e} at order {order}")]
    NoConvergence { order: usize, difference: f64 },
}
