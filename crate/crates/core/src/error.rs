//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by grid construction, coefficient computation and the
/// singular-integral operators.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("grid size must be even and at least 4, got {n}")]
    GridSize { n: usize },

    #[error("sampled function is not finite at node {index} (theta = {theta})")]
    NonFiniteSample { index: usize, theta: f64 },

    #[error("k_max must lie in 1..={bound} (anti-aliasing bound n/2 - 1), got {k_max}")]
    Aliasing { k_max: usize, bound: usize },

    #[error("requested {n_terms} terms but only {k_max} coefficients are available")]
    Truncation { n_terms: usize, k_max: usize },

    #[error("kernel is singular at delta = {delta} (delta = 0 mod 2 pi)")]
    KernelSingularity { delta: f64 },

    #[error("input must be zero-average (grid mean {mean:e}); call project_zero_average first")]
    NotZeroAverage { mean: f64 },

    #[error("rho must lie in [0, 1], got {rho}")]
    RhoRange { rho: f64 },

    #[error("sweep orders must be positive and strictly increasing")]
    SweepOrder,

    #[error("quadrature setup failed: {reason}")]
    Quadrature { reason: String },

    #[error("golden table parse error at line {line}: {reason}")]
    GoldenParse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
