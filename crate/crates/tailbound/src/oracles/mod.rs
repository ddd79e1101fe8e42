//! Analytic distribution oracles: the ground truth the bounds are checked
//! against. Each oracle supplies whatever it can in closed form — exact
//! tail probabilities, density suprema on tail sets, reference entropies —
//! plus samplers for Monte Carlo fallbacks.

pub mod continuous;
pub mod discrete;
pub mod entropy;
pub mod montecarlo;
pub mod multivariate;

pub use continuous::Oracle1D;
pub use entropy::{differential_entropy, EntropyEstimate};
pub use montecarlo::{mc_tail_estimate, McEstimate};
pub use multivariate::{BivariateUniform, MultiNormal};

use thiserror::Error;

/// Errors from oracle construction and queries.
#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("invalid parameter {name}: {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("oracle '{oracle}' does not support {operation}")]
    Capability {
        oracle: String,
        operation: &'static str,
    },

    #[error(
        "integration window misses {deficit:e} of the probability mass \
         (more than the 1e-9 allowance)"
    )]
    WindowTooSmall { deficit: f64 },
}

/// What an oracle can answer exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capabilities {
    pub exact_tail: bool,
    pub exact_sup: bool,
    pub exact_entropy: bool,
    pub sampleable: bool,
}
