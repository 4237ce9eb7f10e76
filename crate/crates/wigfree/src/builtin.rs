//! Named example systems.

use clap::ValueEnum;
use wigfree_core::engine::Wavefunction;
use wigfree_core::systems::{
    anyon_state, gaussian_packet, harmonic_oscillator_state, singular_oscillator_state,
    PacketParams, SingularParams,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuiltinName {
    /// Harmonic oscillator eigenstate (--n, --hbar)
    Ho,
    /// Gaussian wave packet (--q0, --p0, --dq, --hbar)
    Packet,
    /// Singular oscillator eigenstate (--n, --alpha, --hbar)
    Singular,
    /// Anyon state; always rejected
    Anyon,
}

impl BuiltinName {
    pub const ALL: [Self; 4] = [Self::Ho, Self::Packet, Self::Singular, Self::Anyon];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Ho => "ho",
            Self::Packet => "packet",
            Self::Singular => "singular",
            Self::Anyon => "anyon",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Self::Ho => "harmonic oscillator eigenstate, H = p²/2 + q²/2 (--n, --hbar)",
            Self::Packet => "Gaussian wave packet (--q0, --p0, --dq, --hbar)",
            Self::Singular => {
                "singular oscillator eigenstate, H = p²/2 + q²/2 + g²/q², g² = α(α−1)/2 (--n, --alpha, --hbar)"
            }
            Self::Anyon => "anyon state e^{−q²/2} q^{1/2} H_n(q); not representable, always rejected",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BuiltinParams {
    pub n: usize,
    pub alpha: f64,
    pub q0: f64,
    pub p0: f64,
    pub dq: f64,
    pub hbar: f64,
}

impl Default for BuiltinParams {
    fn default() -> Self {
        Self {
            n: 0,
            alpha: 1.0,
            q0: 0.0,
            p0: 0.0,
            dq: 1.0,
            hbar: 1.0,
        }
    }
}

/// A wavefunction together with what is known about where it came from.
#[derive(Debug, Clone)]
pub enum System {
    Oscillator { n: usize, psi: Wavefunction },
    Packet { params: PacketParams, psi: Wavefunction },
    Singular { params: SingularParams, psi: Wavefunction },
    Custom { psi: Wavefunction },
}

impl System {
    pub fn wavefunction(&self) -> &Wavefunction {
        match self {
            Self::Oscillator { psi, .. }
            | Self::Packet { psi, .. }
            | Self::Singular { psi, .. }
            | Self::Custom { psi } => psi,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::Oscillator { n, psi } => format!("ho n={n} hbar={}", psi.hbar()),
            Self::Packet { params, .. } => format!(
                "packet q0={} p0={} dq={} hbar={}",
                params.q0, params.p0, params.dq, params.hbar
            ),
            Self::Singular { params, .. } => format!(
                "singular n={} alpha={} hbar={}",
                params.n, params.alpha, params.hbar
            ),
            Self::Custom { .. } => "custom".into(),
        }
    }
}

pub fn build(name: BuiltinName, p: &BuiltinParams) -> Result<System, CliError> {
    let rejected = |field: &str| {
        let field = field.to_owned();
        move |e| CliError::rejected(field, e)
    };
    Ok(match name {
        BuiltinName::Ho => System::Oscillator {
            n: p.n,
            psi: harmonic_oscillator_state(p.n, p.hbar).map_err(rejected("ho"))?,
        },
        BuiltinName::Packet => {
            let params = PacketParams::new(p.q0, p.p0, p.dq, p.hbar).map_err(rejected("packet"))?;
            System::Packet {
                params,
                psi: gaussian_packet(&params),
            }
        }
        BuiltinName::Singular => {
            let params = SingularParams::new(p.n, p.alpha, p.hbar).map_err(rejected("--alpha"))?;
            System::Singular {
                params,
                psi: singular_oscillator_state(&params).map_err(rejected("singular"))?,
            }
        }
        BuiltinName::Anyon => System::Custom {
            psi: anyon_state(p.n).map_err(rejected("anyon"))?,
        },
    })
}
