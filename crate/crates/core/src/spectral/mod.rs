//! Two independent routes to the spectral radius of a connected graph:
//! shifted power iteration and the largest root of the exact characteristic
//! polynomial.

mod charpoly;
mod power;

pub use charpoly::{characteristic_polynomial, spectral_radius_charpoly, MAX_CHARPOLY_ORDER};
pub use power::{spectral_radius_power, PowerOptions, DEFAULT_POWER_TOL, DEFAULT_RESIDUAL_TOL, MAX_POWER_ITERATIONS};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Power,
    Charpoly,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Power => "power",
            Method::Charpoly => "charpoly",
        })
    }
}

/// Estimate of the largest adjacency eigenvalue.
///
/// For the power method `residual` is `‖Av − ρv‖∞ / ‖v‖∞` at the returned
/// vector; for the polynomial method it is the width of the final bisection
/// bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralResult<T> {
    pub rho: T,
    pub iterations: usize,
    pub residual: T,
    pub method: Method,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("power iteration did not converge after {iterations} iterations (last estimate {last_estimate}, residual {residual})")]
    NoConvergence { iterations: usize, last_estimate: f64, residual: f64 },
    #[error("characteristic polynomial route supports n <= {max}, got {n}")]
    UnsupportedSize { n: usize, max: usize },
    #[error("tolerance must be positive")]
    InvalidTolerance,
}
