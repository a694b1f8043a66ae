//! Numerical harmonic analysis on the unit circle: the compact Hilbert
//! transform, Fourier partial sums and remainders as Dirichlet-type
//! integrals, and finite-order convergence diagnostics.
//!
//! The pieces fit together like this:
//!
//! - [`grid`] samples real functions on midpoint-offset grids over
//!   [-pi, pi) and projects them to zero average.
//! - [`fourier`] computes coefficients by the midpoint rule, builds the
//!   complex Taylor coefficients and evaluates partial sums on the disk.
//! - [`hilbert`] maps a zero-average f to its conjugate g by a
//!   principal-value integral with the cot((theta1 - theta)/2) kernel, with
//!   two independent PV realisations.
//! - [`dirichlet`] produces partial sums from f and remainders from g by
//!   Dirichlet-type integrals, composes them into the remainder operator,
//!   and tabulates remainder decay over sweeps.
//! - [`catalog`] supplies closed-form function/conjugate pairs and a
//!   tail-sum oracle used as ground truth throughout the test suite.
//!
//! All types are immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.

pub mod catalog;
pub mod dirichlet;
mod error;
pub mod fourier;
pub mod grid;
pub mod hilbert;

pub use error::{Error, Result};
pub use fourier::{FourierCoefficients, InnerAnalyticPoint, TaylorCoefficients};
pub use grid::{wrap_angle, PeriodicGrid, SampledFunction};
pub use hilbert::{PvKind, PvStrategy};
