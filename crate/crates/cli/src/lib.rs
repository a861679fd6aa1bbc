//! Commands behind the `rotor-bch` binary: JSON in, JSON (or a text table)
//! out, with distinct exit codes for malformed input, mathematical
//! singularities and domain violations.

pub mod bench;
pub mod commands;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use rotor_bch::LorentzGenerator64;

pub use commands::{
    cmd_compose, cmd_exp, cmd_log, cmd_velocity, ComposeReport, ExpReport, LogReport, Plane,
    VelocityReport,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0}")]
    Singular(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Malformed(_) => 2,
            CliError::Singular(_) => 3,
            CliError::Domain(_) => 4,
        }
    }
}

impl From<rotor_bch::Error> for CliError {
    fn from(err: rotor_bch::Error) -> Self {
        use rotor_bch::Error as E;
        match err {
            E::PiRotation | E::SingularDenominator | E::AtanhPole | E::RodriguesSingular => {
                CliError::Singular(err.to_string())
            }
            E::Superluminal { .. } | E::NotLorentz { .. } => CliError::Domain(err.to_string()),
            other => CliError::Malformed(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Malformed(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Malformed(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Dense multivector BCH in GA(1,3).
    Ga,
    /// 2×2 complex-matrix BCH.
    Pauli,
}

/// JSON carrier for a Lorentz generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorRecord {
    pub xi: [f64; 3],
    pub theta: [f64; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl GeneratorRecord {
    pub fn generator(&self) -> Result<LorentzGenerator64> {
        if self.xi.iter().chain(&self.theta).any(|x| !x.is_finite()) {
            return Err(CliError::Malformed("non-finite generator component".into()));
        }
        Ok(LorentzGenerator64::new(self.xi, self.theta))
    }
}

impl From<LorentzGenerator64> for GeneratorRecord {
    fn from(g: LorentzGenerator64) -> Self {
        GeneratorRecord {
            xi: g.xi,
            theta: g.theta,
            label: None,
        }
    }
}

/// Input of `log`: a bare array of 16 row-major entries or `{"matrix": [...]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MatrixInput {
    Bare(Vec<f64>),
    Wrapped { matrix: Vec<f64> },
}

impl MatrixInput {
    pub fn entries(&self) -> Result<[f64; 16]> {
        let v = match self {
            MatrixInput::Bare(v) | MatrixInput::Wrapped { matrix: v } => v,
        };
        let arr: [f64; 16] = v
            .as_slice()
            .try_into()
            .map_err(|_| CliError::Malformed(format!("expected 16 matrix entries, got {}", v.len())))?;
        if arr.iter().any(|x| !x.is_finite()) {
            return Err(CliError::Malformed("non-finite matrix entry".into()));
        }
        Ok(arr)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VelocityInput {
    pub beta1: [f64; 3],
    pub beta2: [f64; 3],
}
