//! Uniform midpoint grids on the circle and real functions sampled on them.
//!
//! Nodes sit at theta_j = -pi + (j + 1/2) * (2 pi / n), so the grid is
//! symmetric under theta -> -theta and never contains 0 or +-pi. Evaluation
//! points half a step off the nodes ("offset points") therefore fall exactly
//! between quadrature nodes, which is what the principal-value quadratures in
//! the rest of the crate rely on.

use crate::{Error, Result};
use std::f64::consts::PI;

pub(crate) const TWO_PI: f64 = 2.0 * PI;

/// Tolerance used when deciding whether an angle coincides with a grid node
/// or an offset point.
pub(crate) const LATTICE_SNAP: f64 = 1e-12;

/// Wraps an angle to the symmetric branch (-pi, pi]. Angles already on the
/// branch pass through bit-identical, which keeps kernel parities exact.
pub fn wrap_angle(theta: f64) -> f64 {
    if theta > -PI && theta <= PI {
        return theta;
    }
    let mut t = theta.rem_euclid(TWO_PI);
    if t > PI {
        t -= TWO_PI;
    }
    t
}

/// Uniform midpoint-offset sampling grid on [-pi, pi).
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicGrid {
    n: usize,
    step: f64,
    nodes: Vec<f64>,
}

impl PeriodicGrid {
    /// Builds a grid with `n` nodes. `n` must be even and at least 4.
    pub fn new(n: usize) -> Result<Self> {
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::GridSize { n });
        }
        let step = TWO_PI / n as f64;
        let nodes = (0..n).map(|j| -PI + (j as f64 + 0.5) * step).collect();
        Ok(Self { n, step, nodes })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Angular spacing 2 pi / n.
    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn node(&self, j: usize) -> f64 {
        self.nodes[j]
    }

    /// Points half a step off the nodes: -pi + l * step for l = 0..n.
    /// Kernel singularities land exactly between nodes when transforms are
    /// evaluated here.
    pub fn offset_points(&self) -> Vec<f64> {
        (0..self.n).map(|l| -PI + l as f64 * self.step).collect()
    }

    /// Index of the node that `theta` coincides with, if any.
    pub fn node_index(&self, theta: f64) -> Option<usize> {
        let t = wrap_angle(theta);
        let pos = (t + PI) / self.step - 0.5;
        let j = pos.round();
        if (pos - j).abs() * self.step < LATTICE_SNAP {
            let idx = (j as i64).rem_euclid(self.n as i64) as usize;
            Some(idx)
        } else {
            None
        }
    }

    /// Index l of the offset point -pi + l * step that `theta` coincides
    /// with, if any.
    pub fn offset_index(&self, theta: f64) -> Option<usize> {
        let t = wrap_angle(theta);
        let pos = (t + PI) / self.step;
        let l = pos.round();
        if (pos - l).abs() * self.step < LATTICE_SNAP {
            let idx = (l as i64).rem_euclid(self.n as i64) as usize;
            Some(idx)
        } else {
            None
        }
    }
}

/// Real values of a function at the nodes of a [`PeriodicGrid`].
///
/// The `zero_average` flag records that the grid mean has been removed; the
/// transform operators require it because their derivations assume a
/// zero-average input.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: PeriodicGrid,
    values: Vec<f64>,
    zero_average: bool,
}

impl SampledFunction {
    /// Samples `f` at every grid node. Fails if any value is non-finite.
    pub fn sample<F: Fn(f64) -> f64>(grid: &PeriodicGrid, f: F) -> Result<Self> {
        let values: Vec<f64> = grid.nodes().iter().map(|&t| f(t)).collect();
        Self::from_values(grid, values)
    }

    /// Wraps precomputed node values. Fails on length mismatch or
    /// non-finite entries.
    pub fn from_values(grid: &PeriodicGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Quadrature {
                reason: format!(
                    "value count {} does not match grid size {}",
                    values.len(),
                    grid.len()
                ),
            });
        }
        for (index, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteSample {
                    index,
                    theta: grid.node(index),
                });
            }
        }
        Ok(Self {
            grid: grid.clone(),
            values,
            zero_average: false,
        })
    }

    pub fn grid(&self) -> &PeriodicGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, j: usize) -> f64 {
        self.values[j]
    }

    pub fn is_zero_average(&self) -> bool {
        self.zero_average
    }

    pub fn grid_mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Subtracts the grid mean and marks the result as zero-average.
    /// Idempotent up to one rounding of the residual mean.
    pub fn project_zero_average(&self) -> SampledFunction {
        let mean = self.grid_mean();
        SampledFunction {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v - mean).collect(),
            zero_average: true,
        }
    }

    pub(crate) fn require_zero_average(&self) -> Result<()> {
        if self.zero_average {
            Ok(())
        } else {
            Err(Error::NotZeroAverage {
                mean: self.grid_mean(),
            })
        }
    }
}
