use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the model, the calibration routines and the runner.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("non-finite input `{0}`")]
    NonFinite(&'static str),

    #[error("value `{name}` = {value} outside domain {domain}")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("bisection did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("target {target} is not bracketed by k in [{lower}, {upper}]")]
    NotBracketed { target: f64, lower: f64, upper: f64 },

    #[error("period {period}: {source}")]
    Period {
        period: u32,
        #[source]
        source: Box<ModelError>,
    },

    #[error(
        "equilibrium identity `{identity}` violated: relative error {error:e} > {tolerance:e}"
    )]
    IdentityViolated {
        identity: &'static str,
        error: f64,
        tolerance: f64,
    },

    #[error("config: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Output { path: PathBuf, message: String },
}

impl ModelError {
    pub(crate) fn at_period(self, period: u32) -> Self {
        ModelError::Period {
            period,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, ModelError>;

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(ModelError::NonFinite(name))
    }
}
