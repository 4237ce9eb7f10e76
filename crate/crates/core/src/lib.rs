//! Closed-form Wigner functions for wavefunctions of the form
//! `ψ(q) = e^{-aq²} φ(q)` with `φ` an exponential polynomial
//! `Σ_j c_j q^{m_j} e^{b_j q}`.
//!
//! Instead of evaluating the Fourier integral
//! `W(q,p) = (1/2π) ∫ ψ*(q − ħy/2) ψ(q + ħy/2) e^{-iyp} dy`, the
//! [`engine`] substitutes `q ± (iħ/2)∂_p` into `φ` and applies the resulting
//! differential/translation operators to the momentum Gaussian
//! `e^{-p²/(2aħ²)}`. The [`oracle`] module evaluates the integral directly by
//! Gauss–Hermite quadrature and is used to cross-check the engine.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

mod error;
pub mod engine;
pub mod oracle;
pub mod polyalg;
pub mod systems;

pub use error::{Error, Result};

pub use num_complex::Complex64;
