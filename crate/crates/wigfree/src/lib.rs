//! File formats, built-in systems and command implementations for the
//! `wigfree` command-line tool.

pub mod builtin;
pub mod check;
pub mod error;
pub mod grid;
pub mod output;
pub mod wavefile;

pub use error::CliError;

/// Environment variable overriding the polynomial degree cap.
pub const DEGREE_CAP_ENV: &str = "WIGFREE_DEGREE_CAP";

/// Applies `WIGFREE_DEGREE_CAP` if set.
pub fn apply_degree_cap_env() -> Result<(), CliError> {
    match std::env::var(DEGREE_CAP_ENV) {
        Ok(raw) => {
            let cap: usize = raw.trim().parse().map_err(|_| {
                CliError::input(format!("{DEGREE_CAP_ENV} must be a positive integer, got {raw:?}"))
            })?;
            if cap == 0 {
                return Err(CliError::input(format!("{DEGREE_CAP_ENV} must be positive")));
            }
            wigfree_core::polyalg::set_degree_cap(cap);
            Ok(())
        }
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(e) => Err(CliError::input(format!("{DEGREE_CAP_ENV}: {e}"))),
    }
}
