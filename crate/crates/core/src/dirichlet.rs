//! Dirichlet-type integral operators: partial sums, remainders and the
//! remainder kernel of the convergence condition.
//!
//! For a zero-average f with conjugate g the N-th partial sum and remainder
//! of the Fourier series are
//!
//! ```text
//! S_N(theta) = (1/2pi)    int sin((N+1/2) u) / sin(u/2) f(theta1) dtheta1
//! R_N(theta) = (1/2pi) PV int cos((N+1/2) u) / sin(u/2) g(theta1) dtheta1
//! ```
//!
//! with u = theta1 - theta. The first integrand is regular (its limit at
//! u = 0 is 2N+1); the second needs a principal value, realised here through
//! the subtraction identity PV int du / sin(u/2) = 0, which holds over the
//! full circle by odd symmetry.
//!
//! Composing the remainder integral with the compact Hilbert transform gives
//! the operator that maps f directly onto its N-th remainder; its kernel is
//! only available as a further integral over the circle and is provided in
//! both the raw two-pole form and the reduced single-difference form.

use crate::fourier::FourierCoefficients;
use crate::grid::{wrap_angle, SampledFunction, TWO_PI};
use crate::hilbert::{self, PvStrategy, NEAR_NODE};
use crate::{Error, Result};
use std::f64::consts::PI;

/// |sin(delta/2)| below this substitutes the analytic limit (2N+1)/(2pi)
/// for the Dirichlet kernel; chosen so the interpolation error of the
/// substitution stays below 1e-9 relative.
const DIRICHLET_LIMIT_GUARD: f64 = 1e-8;

/// |sin(delta/2)| below this is a genuine singularity of the conjugate
/// Dirichlet kernel.
const NEAR_SINGULAR: f64 = 1e-14;

/// Default quadrature size for the remainder-kernel integrals.
pub const DEFAULT_KERNEL_QUADRATURE: usize = 8192;

/// Default threshold for sweep verdicts.
pub const DEFAULT_SWEEP_THRESHOLD: f64 = 1e-3;

/// Dirichlet kernel (1/2pi) sin((N+1/2) delta) / sin(delta/2); even in
/// delta, with the removable singularity at delta = 0 replaced by its limit
/// (2N+1)/(2pi).
pub fn kernel(n_terms: usize, delta: f64) -> f64 {
    let u = wrap_angle(delta);
    let sin_half = (u / 2.0).sin();
    if sin_half.abs() < DIRICHLET_LIMIT_GUARD {
        (2.0 * n_terms as f64 + 1.0) / TWO_PI
    } else {
        ((n_terms as f64 + 0.5) * u).sin() / sin_half / TWO_PI
    }
}

/// Conjugate Dirichlet kernel with delta = theta - theta1:
/// -(1/2pi) cos((N+1/2) delta) / sin(delta/2). Odd in delta and genuinely
/// singular at delta = 0 mod 2pi.
pub fn conjugate_kernel(n_terms: usize, delta: f64) -> Result<f64> {
    let u = wrap_angle(delta);
    let sin_half = (u / 2.0).sin();
    if sin_half.abs() < NEAR_SINGULAR {
        return Err(Error::KernelSingularity { delta });
    }
    Ok(-((n_terms as f64 + 0.5) * u).cos() / sin_half / TWO_PI)
}

/// N-th Fourier partial sum by the Dirichlet integral. No principal value is
/// needed; the integrand is regular at theta1 = theta. Assumes a
/// zero-average input (the derivation does), but evaluates any sample set.
pub fn partial_sum(s: &SampledFunction, n_terms: usize, theta: f64) -> f64 {
    let n1 = n_terms as f64 + 0.5;
    let limit = 2.0 * n_terms as f64 + 1.0;
    let mut sum = 0.0;
    for (j, &t) in s.grid().nodes().iter().enumerate() {
        let u = wrap_angle(t - theta);
        let sin_half = (u / 2.0).sin();
        let ratio = if sin_half.abs() < DIRICHLET_LIMIT_GUARD {
            limit
        } else {
            (n1 * u).sin() / sin_half
        };
        sum += ratio * s.value(j);
    }
    sum / s.grid().len() as f64
}

/// The conjugate Dirichlet operator D_c acting on a fixed conjugate function
/// g: `apply(N, theta)` returns the N-th remainder of the series whose
/// conjugate is g.
///
/// Holds the trigonometric interpolant of g so repeated applications (sweeps
/// over N and theta) do not recompute coefficients.
#[derive(Debug, Clone)]
pub struct ConjugateRemainder {
    g: SampledFunction,
    coeffs: FourierCoefficients,
}

impl ConjugateRemainder {
    pub fn new(g: &SampledFunction) -> Result<Self> {
        g.require_zero_average()?;
        let coeffs = FourierCoefficients::from_samples(g, g.grid().len() / 2 - 1)?;
        Ok(Self {
            g: g.clone(),
            coeffs,
        })
    }

    /// PV integral of the conjugate Dirichlet kernel against g, realised by
    /// subtracting the kernel times g(theta):
    ///
    /// ```text
    /// (1/2pi) int cos((N+1/2) u) [g(theta1) - g(theta)] / sin(u/2) dtheta1
    /// ```
    ///
    /// valid because PV int cos((N+1/2) u) / sin(u/2) du = 0 over the circle
    /// by odd symmetry. The subtracted integrand is 2 pi periodic in theta1
    /// and regular at u = 0, so the midpoint sum is accurate at every
    /// evaluation point, not only on the sampling lattice. A quadrature node
    /// colliding with the evaluation point contributes the analytic limit
    /// 2 g'(theta).
    pub fn apply(&self, n_terms: usize, theta: f64) -> f64 {
        let grid = self.g.grid();
        let n1 = n_terms as f64 + 0.5;
        let g_at = match grid.node_index(theta) {
            Some(i) => self.g.value(i),
            None => self.coeffs.evaluate(theta),
        };
        let mut sum = 0.0;
        for (j, &t) in grid.nodes().iter().enumerate() {
            let u = wrap_angle(t - theta);
            let sin_half = (u / 2.0).sin();
            if sin_half.abs() < NEAR_NODE {
                sum += 2.0 * self.coeffs.evaluate_derivative(theta);
            } else {
                sum += (n1 * u).cos() * (self.g.value(j) - g_at) / sin_half;
            }
        }
        sum / grid.len() as f64
    }

    pub fn conjugate_function(&self) -> &SampledFunction {
        &self.g
    }
}

/// One-shot form of [`ConjugateRemainder`].
pub fn remainder_from_conjugate(g: &SampledFunction, n_terms: usize, theta: f64) -> Result<f64> {
    Ok(ConjugateRemainder::new(g)?.apply(n_terms, theta))
}

/// The remainder operator D_r = D_c composed with the compact Hilbert
/// transform: maps f directly onto the N-th remainder of its own Fourier
/// series. Equals identity minus the Dirichlet operator.
#[derive(Debug, Clone)]
pub struct RemainderOperator {
    dc: ConjugateRemainder,
}

impl RemainderOperator {
    pub fn new(f: &SampledFunction, strategy: &PvStrategy) -> Result<Self> {
        f.require_zero_average()?;
        let g = hilbert::transform(f, strategy)?;
        Ok(Self {
            dc: ConjugateRemainder::new(&g)?,
        })
    }

    pub fn apply(&self, n_terms: usize, theta: f64) -> f64 {
        self.dc.apply(n_terms, theta)
    }

    /// The numerically computed conjugate function of f.
    pub fn conjugate_function(&self) -> &SampledFunction {
        self.dc.conjugate_function()
    }
}

/// One-shot form of [`RemainderOperator`].
pub fn remainder(
    f: &SampledFunction,
    n_terms: usize,
    theta: f64,
    strategy: &PvStrategy,
) -> Result<f64> {
    Ok(RemainderOperator::new(f, strategy)?.apply(n_terms, theta))
}

/// Remainder kernel in its raw two-pole form,
///
/// ```text
/// K(N, theta, theta1) = (1/4pi^2) PV int cos((N+1/2)(t - theta)) cos((t - theta1)/2)
///                                        / [sin((t - theta)/2) sin((t - theta1)/2)] dt
/// ```
///
/// evaluated on a uniform grid of `quadrature_n` nodes offset so that both
/// singular points fall away from the nodes. The value depends only on
/// theta - theta1; accuracy is best when that difference is an integer
/// multiple of the quadrature step, where both poles sit exactly half a step
/// off the grid and the symmetric sums realise the principal values.
pub fn remainder_kernel_double(
    n_terms: usize,
    theta: f64,
    theta1: f64,
    quadrature_n: usize,
) -> Result<f64> {
    let delta = wrap_angle(theta - theta1);
    if (delta / 2.0).sin().abs() < 1e-12 {
        return Err(Error::KernelSingularity { delta });
    }
    let step = TWO_PI / quadrature_n as f64;
    let anchor = pv_anchor(&[theta, theta1], step)?;
    let n1 = n_terms as f64 + 0.5;
    let mut sum = 0.0;
    for m in 0..quadrature_n {
        let t = anchor + m as f64 * step;
        let u = wrap_angle(t - theta);
        let v = wrap_angle(t - theta1);
        sum += (n1 * u).cos() * (v / 2.0).cos() / ((u / 2.0).sin() * (v / 2.0).sin());
    }
    Ok(sum * step / (4.0 * PI * PI))
}

/// Remainder kernel in the reduced form that depends only on
/// delta = theta - theta1, with gamma = delta / 2:
///
/// ```text
/// K(N, delta) = (1/4pi^2) PV int [cos(N t) cos((N+1) gamma)
///                                 + cos((N+1) t) cos(N gamma)]
///                                / [cos(gamma) - cos(t)] dt
/// ```
///
/// The integrand is singular at t = +-gamma; both poles are kept half a step
/// off the quadrature grid wherever possible.
pub fn remainder_kernel(n_terms: usize, delta: f64, quadrature_n: usize) -> Result<f64> {
    let gamma = wrap_angle(delta) / 2.0;
    if gamma.sin().abs() < 1e-12 {
        return Err(Error::KernelSingularity { delta });
    }
    let step = TWO_PI / quadrature_n as f64;
    let anchor = pv_anchor(&[gamma, -gamma], step)?;
    let nf = n_terms as f64;
    let cos_n1_gamma = ((nf + 1.0) * gamma).cos();
    let cos_n_gamma = (nf * gamma).cos();
    let cos_gamma = gamma.cos();
    let mut sum = 0.0;
    for m in 0..quadrature_n {
        let t = anchor + m as f64 * step;
        let numer = (nf * t).cos() * cos_n1_gamma + ((nf + 1.0) * t).cos() * cos_n_gamma;
        sum += numer / (cos_gamma - t.cos());
    }
    Ok(sum * step / (4.0 * PI * PI))
}

/// Picks the first node anchor that keeps every pole at least 1e-12 rad away
/// from the quadrature lattice. The preferred anchor puts the first pole
/// exactly half a step off; the alternatives re-offset by quarter steps.
fn pv_anchor(poles: &[f64], step: f64) -> Result<f64> {
    let candidates = [
        poles[0] + step / 2.0,
        poles[0] + 0.75 * step,
        poles[0] + 0.25 * step,
    ];
    'outer: for &anchor in &candidates {
        for &p in poles {
            let r = (p - anchor).rem_euclid(step);
            if r.min(step - r) < 1e-12 {
                continue 'outer;
            }
        }
        return Ok(anchor);
    }
    Err(Error::Quadrature {
        reason: "could not offset the quadrature grid away from both singular points".into(),
    })
}

/// Per-point absolute remainders swept over orders and evaluation angles.
///
/// The verdict is a finite-N diagnostic only: a finite sweep can show the
/// sup-remainders trending down toward the threshold, never prove the limit.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub thetas: Vec<f64>,
    pub orders: Vec<usize>,
    /// remainders[i][t] = |R_{orders[i]}(thetas[t])|.
    pub remainders: Vec<Vec<f64>>,
    /// Row-wise maxima of `remainders`.
    pub sup_per_order: Vec<f64>,
    pub threshold: f64,
}

impl ConvergenceReport {
    pub fn with_threshold(mut self, threshold: f64) -> Self {
        self.threshold = threshold;
        self
    }

    /// True when the sup-remainders never increase across the sweep.
    pub fn is_decreasing(&self) -> bool {
        self.sup_per_order
            .windows(2)
            .all(|w| w[1] <= w[0] + 1e-12 * w[0].max(1.0))
    }

    /// True when the final sup-remainder is at or below the threshold.
    pub fn below_threshold(&self) -> bool {
        self.sup_per_order
            .last()
            .map(|&s| s <= self.threshold)
            .unwrap_or(true)
    }
}

/// Fills |R_N(theta)| for every (order, theta) pair. Orders must be positive
/// and strictly increasing. The conjugate function is computed once and
/// shared across the sweep.
pub fn convergence_sweep(
    f: &SampledFunction,
    orders: &[usize],
    thetas: &[f64],
    strategy: &PvStrategy,
) -> Result<ConvergenceReport> {
    if orders.is_empty() || orders[0] == 0 || orders.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::SweepOrder);
    }
    let op = RemainderOperator::new(f, strategy)?;
    let mut remainders = Vec::with_capacity(orders.len());
    let mut sup_per_order = Vec::with_capacity(orders.len());
    for &n_terms in orders {
        let row: Vec<f64> = thetas.iter().map(|&t| op.apply(n_terms, t).abs()).collect();
        let sup = row.iter().fold(0.0f64, |m, &v| m.max(v));
        remainders.push(row);
        sup_per_order.push(sup);
    }
    Ok(ConvergenceReport {
        thetas: thetas.to_vec(),
        orders: orders.to_vec(),
        remainders,
        sup_per_order,
        threshold: DEFAULT_SWEEP_THRESHOLD,
    })
}
