//! The compact Hilbert transform on the circle.
//!
//! For a zero-average integrable f the transform and its inverse are
//!
//! ```text
//! g(theta) = -(1/2pi) PV int cot((theta1 - theta)/2) f(theta1) dtheta1
//! f(theta) = +(1/2pi) PV int cot((theta1 - theta)/2) g(theta1) dtheta1
//! ```
//!
//! so the inverse is simply the negated transform. On the Fourier basis it
//! maps cos(k theta) -> sin(k theta) and sin(k theta) -> -cos(k theta),
//! annihilates constants, and composed with itself multiplies by -1.
//!
//! Two independent realisations of the principal value are provided:
//!
//! - `subtraction`: PV int cot((theta1-theta)/2) dtheta1 = 0 over the circle,
//!   so the transform equals the ordinary integral of
//!   cot((theta1-theta)/2) (f(theta1) - f(theta)), whose integrand is
//!   regular at theta1 = theta (the limit value there is 2 f'(theta)).
//! - `offset-grid`: the quadrature grid is placed so the evaluation point
//!   sits exactly half a step off every quadrature node; the symmetric
//!   Riemann sum then realises the principal value by cancellation.
//!
//! Both are exact (to rounding) for band-limited inputs below the Nyquist
//! degree, which is what the identity tests in this crate lean on. Values of
//! f away from the sample nodes come from trigonometric interpolation
//! through the coefficients.

use crate::fourier::FourierCoefficients;
use crate::grid::{wrap_angle, SampledFunction};
use crate::{Error, Result};
use std::f64::consts::PI;

/// |sin(delta/2)| below this is treated as the kernel singularity.
const NEAR_SINGULAR: f64 = 1e-14;

/// Quadrature nodes with |sin(u/2)| below this contribute their analytic
/// limit instead of the raw integrand; wider than `NEAR_SINGULAR` so the
/// subtracted difference never runs into catastrophic cancellation.
pub(crate) const NEAR_NODE: f64 = 1e-8;

/// How the Cauchy principal value is realised numerically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PvKind {
    /// Singularity removed with the identity PV int cot((t1-t)/2) dt1 = 0.
    Subtraction,
    /// Quadrature grid shifted half a step so the pole falls between nodes.
    OffsetGrid,
}

/// Principal-value strategy plus its near-singularity guard half-width
/// (radians). The guard is consulted only by offset-grid diagnostics and
/// must stay below half the grid step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PvStrategy {
    pub kind: PvKind,
    pub epsilon: f64,
}

impl PvStrategy {
    pub fn subtraction() -> Self {
        Self {
            kind: PvKind::Subtraction,
            epsilon: 1e-9,
        }
    }

    pub fn offset_grid() -> Self {
        Self {
            kind: PvKind::OffsetGrid,
            epsilon: 1e-9,
        }
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }
}

impl Default for PvStrategy {
    fn default() -> Self {
        Self::subtraction()
    }
}

/// Kernel of the transform: K(delta) = (1/2pi) cot(delta/2) with
/// delta = theta - theta1.
pub fn kernel(delta: f64) -> Result<f64> {
    let half = wrap_angle(delta) / 2.0;
    let s = half.sin();
    if s.abs() < NEAR_SINGULAR {
        return Err(Error::KernelSingularity { delta });
    }
    Ok(half.cos() / s / (2.0 * PI))
}

/// Transform of `s` evaluated at `theta`. Requires a zero-average input.
pub fn transform_at(s: &SampledFunction, theta: f64, strategy: &PvStrategy) -> Result<f64> {
    s.require_zero_average()?;
    pv_quadrature(s, theta, strategy)
}

/// Inverse transform at a point: H^{-1} = -H.
pub fn inverse_at(s: &SampledFunction, theta: f64, strategy: &PvStrategy) -> Result<f64> {
    Ok(-transform_at(s, theta, strategy)?)
}

/// The raw principal-value quadrature without the zero-average gate.
///
/// `transform_at` delegates here after validating its input; the ungated
/// entry point exists so the annihilation of constants can be checked
/// directly against the quadrature.
pub fn pv_quadrature(s: &SampledFunction, theta: f64, strategy: &PvStrategy) -> Result<f64> {
    let fc = interpolant(s)?;
    match strategy.kind {
        PvKind::Subtraction => Ok(subtraction_sum(s, &fc, theta)),
        PvKind::OffsetGrid => offset_sum(s, Some(&fc), theta, strategy.epsilon),
    }
}

/// Transform applied at every grid node. The output is projected to zero
/// average (the conjugate function is zero-average) and flagged accordingly.
pub fn transform(s: &SampledFunction, strategy: &PvStrategy) -> Result<SampledFunction> {
    s.require_zero_average()?;
    let fc = interpolant(s)?;
    let n = s.grid().len();
    let mut out = Vec::with_capacity(n);
    match strategy.kind {
        PvKind::Subtraction => {
            for j in 0..n {
                out.push(subtraction_sum(s, &fc, s.grid().node(j)));
            }
        }
        PvKind::OffsetGrid => {
            check_guard(s.grid().step(), strategy.epsilon)?;
            // Every node evaluation uses the same shifted lattice (the offset
            // points), so interpolate f there once.
            let f_offset: Vec<f64> = s
                .grid()
                .offset_points()
                .iter()
                .map(|&t| fc.evaluate(t))
                .collect();
            let weights = offset_weights(n);
            for j in 0..n {
                // Quadrature node m sits at offset point (j + m + 1) mod n.
                let mut sum = 0.0;
                for (m, w) in weights.iter().enumerate() {
                    sum += w * f_offset[(j + m + 1) % n];
                }
                out.push(-sum / n as f64);
            }
        }
    }
    let raw = SampledFunction::from_values(s.grid(), out)?;
    Ok(raw.project_zero_average())
}

/// Coefficient-path transform: swaps the roles of the coefficient arrays,
/// alpha'_k = -beta_k and beta'_k = alpha_k. Identical contract to
/// [`FourierCoefficients::conjugate`], exposed as the transform-level entry
/// point so the spectral and quadrature routes can be compared directly.
pub fn spectral(fc: &FourierCoefficients) -> FourierCoefficients {
    fc.conjugate()
}

fn interpolant(s: &SampledFunction) -> Result<FourierCoefficients> {
    FourierCoefficients::from_samples(s, s.grid().len() / 2 - 1)
}

fn check_guard(step: f64, epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon < step / 2.0 {
        Ok(())
    } else {
        Err(Error::Quadrature {
            reason: format!(
                "offset-grid guard epsilon = {epsilon} must lie in (0, step/2) = (0, {})",
                step / 2.0
            ),
        })
    }
}

/// cot weights for the shifted lattice: w_m = cot((2m+1) pi / (2n)).
fn offset_weights(n: usize) -> Vec<f64> {
    (0..n)
        .map(|m| {
            let half = (m as f64 + 0.5) * PI / n as f64;
            half.cos() / half.sin()
        })
        .collect()
}

/// Subtraction-identity quadrature; usable at any evaluation point.
pub(crate) fn subtraction_sum(s: &SampledFunction, fc: &FourierCoefficients, theta: f64) -> f64 {
    let f_at = match s.grid().node_index(theta) {
        Some(i) => s.value(i),
        None => fc.evaluate(theta),
    };
    let mut sum = 0.0;
    for (j, &t) in s.grid().nodes().iter().enumerate() {
        let u = wrap_angle(t - theta);
        let half = u / 2.0;
        let sin_half = half.sin();
        if sin_half.abs() < NEAR_NODE {
            // Removable singularity: the integrand tends to 2 f'(theta).
            sum += 2.0 * fc.evaluate_derivative(theta);
        } else {
            sum += half.cos() / sin_half * (s.value(j) - f_at);
        }
    }
    -sum / s.grid().len() as f64
}

/// Offset-grid quadrature: nodes at theta + (m + 1/2) step, so the pole at
/// theta sits exactly between neighbouring nodes. When theta lies on the
/// offset lattice the quadrature nodes coincide with the sample nodes and no
/// interpolation is involved.
fn offset_sum(
    s: &SampledFunction,
    fc: Option<&FourierCoefficients>,
    theta: f64,
    epsilon: f64,
) -> Result<f64> {
    let grid = s.grid();
    let n = grid.len();
    let step = grid.step();
    check_guard(step, epsilon)?;
    let weights = offset_weights(n);
    let on_offset_lattice = grid.offset_index(theta);
    let mut sum = 0.0;
    match on_offset_lattice {
        Some(l) => {
            // theta = -pi + l*step, so theta + (m + 1/2) step is node l + m.
            for (m, w) in weights.iter().enumerate() {
                sum += w * s.value((l + m) % n);
            }
        }
        None => {
            let fc = match fc {
                Some(fc) => fc,
                None => unreachable!("offset_sum callers supply an interpolant"),
            };
            for (m, w) in weights.iter().enumerate() {
                let phi = wrap_angle(theta + (m as f64 + 0.5) * step);
                let value = match grid.node_index(phi) {
                    Some(idx) => s.value(idx),
                    None => fc.evaluate(phi),
                };
                sum += w * value;
            }
        }
    }
    Ok(-sum / n as f64)
}
