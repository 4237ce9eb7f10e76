//! JSON serialization of wavefunctions.
//!
//! ```json
//! {"hbar": 1.0, "a": 0.5, "terms": [{"coeff": [0.75, 0.0], "power": 0, "rate": [0.0, 0.0]}]}
//! ```
//!
//! `hbar` defaults to 1 and `rate` to zero. Numbers are written in shortest
//! round-trip form, so emit followed by parse is bit-exact.

use std::io::Read;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use wigfree_core::engine::{Term, Wavefunction};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WavefunctionSpec {
    #[serde(default = "one")]
    pub hbar: f64,
    pub a: f64,
    pub terms: Vec<TermSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: [f64; 2],
    #[serde(serialize_with = "write_power", deserialize_with = "read_power")]
    pub power: f64,
    #[serde(default)]
    pub rate: [f64; 2],
}

fn one() -> f64 {
    1.0
}

fn write_power<S: Serializer>(power: &f64, s: S) -> Result<S::Ok, S::Error> {
    if power.fract() == 0.0 && *power >= 0.0 && *power <= u32::MAX as f64 {
        s.serialize_u64(*power as u64)
    } else {
        s.serialize_f64(*power)
    }
}

fn read_power<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    f64::deserialize(d)
}

impl WavefunctionSpec {
    pub fn from_wavefunction(psi: &Wavefunction) -> Self {
        Self {
            hbar: psi.hbar(),
            a: psi.a(),
            terms: psi
                .terms()
                .iter()
                .map(|t| TermSpec {
                    coeff: [t.coeff.re, t.coeff.im],
                    power: t.power as f64,
                    rate: [t.rate.re, t.rate.im],
                })
                .collect(),
        }
    }

    /// Validates and builds the wavefunction. Errors name the offending field.
    pub fn to_wavefunction(&self) -> Result<Wavefunction, CliError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (i, t) in self.terms.iter().enumerate() {
            if t.power < 0.0 {
                return Err(CliError::input(format!(
                    "terms[{i}].power: must be a non-negative integer, got {}",
                    t.power
                )));
            }
            let term = Term::with_real_power(
                Complex64::new(t.coeff[0], t.coeff[1]),
                t.power,
                Complex64::new(t.rate[0], t.rate[1]),
            )
            .map_err(|e| CliError::rejected(format!("terms[{i}].power"), e))?;
            terms.push(term);
        }
        Wavefunction::new(self.a, self.hbar, terms)
            .map_err(|e| CliError::rejected("wavefunction".into(), e))
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::input(format!("malformed wavefunction file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Reads a file, or standard input for `-`.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = if path == Path::new("-") {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::io("reading standard input", e))?;
            s
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?
        };
        Self::from_json(&text).map_err(|e| match e {
            CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wigfree_core::Error;

    #[test]
    fn parses_minimal_file() {
        let s = WavefunctionSpec::from_json(r#"{"a": 0.5, "terms": [{"coeff": [1, 0], "power": 2}]}"#).unwrap();
        assert_eq!(s.hbar, 1.0);
        assert_eq!(s.terms[0].rate, [0.0, 0.0]);
        let psi = s.to_wavefunction().unwrap();
        assert_eq!(psi.terms()[0].power, 2);
    }

    #[test]
    fn round_trip_is_exact() {
        let psi = Wavefunction::new(
            0.1 + 0.2,
            std::f64::consts::PI,
            vec![
                Term::new(Complex64::new(1.0 / 3.0, -2.0e-300), 4, Complex64::new(0.7, 1e10)),
                Term::new(Complex64::new(f64::MIN_POSITIVE, 5.0), 0, Complex64::new(0.0, 0.0)),
            ],
        )
        .unwrap();
        let json = WavefunctionSpec::from_wavefunction(&psi).to_json();
        assert!(json.contains("\"power\": 4"));
        let back = WavefunctionSpec::from_json(&json).unwrap().to_wavefunction().unwrap();
        assert_eq!(back, psi);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let half = r#"{"a": 1, "terms": [{"coeff": [1, 0], "power": 1}, {"coeff": [1, 0], "power": 0.5}]}"#;
        let err = WavefunctionSpec::from_json(half).unwrap().to_wavefunction().unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("terms[1].power"), "{msg}");
        assert!(msg.contains("smoothness condition"), "{msg}");
        assert!(matches!(err, CliError::Rejected { source: Error::FractionalPowerUnsupported { .. }, .. }));
        assert_eq!(err.exit_code(), 2);

        let err = WavefunctionSpec::from_json(r#"{"terms": []}"#).unwrap_err();
        assert!(err.to_string().contains("missing field `a`"));
        let err = WavefunctionSpec::from_json("{\"a\": 1,\n \"terms\": [{\"coef\": [1, 0]}]}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let neg = r#"{"a": 1, "terms": [{"coeff": [1, 0], "power": -1}]}"#;
        assert!(WavefunctionSpec::from_json(neg).unwrap().to_wavefunction().is_err());
        let bad_a = r#"{"a": -1, "terms": [{"coeff": [1, 0], "power": 0}]}"#;
        let err = WavefunctionSpec::from_json(bad_a).unwrap().to_wavefunction().unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
