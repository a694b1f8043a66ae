//! Closed-form test functions with known coefficients and known conjugates.
//!
//! Every entry carries the analytic coefficient formulas of f alongside the
//! closed form of its conjugate g, so operator output can be checked against
//! values that never touch the quadrature code. The tail-sum oracle turns
//! the coefficient formulas into reference remainders by direct summation.
//!
//! Catalogued pairs:
//!
//! - pure modes: f = cos(k theta) with g = sin(k theta), and f = sin(k theta)
//!   with g = -cos(k theta), for k = 1..16
//! - square wave f = sgn(theta), beta_k = 4/(pi k) for odd k,
//!   g = (2/pi) ln |tan(theta/2)|
//! - sawtooth f = theta, beta_k = 2 (-1)^{k+1} / k, g = -2 ln(2 cos(theta/2))
//! - seeded random band-limited trig polynomials
//!
//! The conjugates of the jump entries are log-singular at theta = 0 and
//! +-pi; pointwise comparisons there are meaningless and tests keep a guard
//! band around those angles.

use crate::fourier::FourierCoefficients;
use crate::grid::{PeriodicGrid, SampledFunction};
use crate::{Error, Result};
use std::f64::consts::PI;
use std::sync::Arc;

type AngleFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type CoefFn = Arc<dyn Fn(usize) -> f64 + Send + Sync>;

/// Character of the catalogued f on the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothness {
    Analytic,
    Jump,
    LogSingular,
}

/// A test function with analytic coefficients and, where a closed form
/// exists, its conjugate.
#[derive(Clone)]
pub struct CatalogEntry {
    name: String,
    f: AngleFn,
    conjugate: Option<AngleFn>,
    alpha: CoefFn,
    beta: CoefFn,
    smoothness: Smoothness,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("smoothness", &self.smoothness)
            .finish()
    }
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn smoothness(&self) -> Smoothness {
        self.smoothness
    }

    pub fn eval(&self, theta: f64) -> f64 {
        (self.f)(theta)
    }

    /// Closed form of the conjugate, where known.
    pub fn eval_conjugate(&self, theta: f64) -> Option<f64> {
        self.conjugate.as_ref().map(|g| g(theta))
    }

    /// Analytic alpha_k, k >= 1.
    pub fn alpha(&self, k: usize) -> f64 {
        (self.alpha)(k)
    }

    /// Analytic beta_k, k >= 1.
    pub fn beta(&self, k: usize) -> f64 {
        (self.beta)(k)
    }

    /// Coefficient set built from the analytic formulas.
    pub fn coefficients(&self, k_max: usize) -> Result<FourierCoefficients> {
        let alpha = (1..=k_max).map(|k| self.alpha(k)).collect();
        let beta = (1..=k_max).map(|k| self.beta(k)).collect();
        FourierCoefficients::from_parts(0.0, alpha, beta)
    }

    /// Partial sum of f from the analytic coefficients.
    pub fn partial_sum(&self, n_terms: usize, theta: f64) -> f64 {
        let mut sum = 0.0;
        for k in 1..=n_terms {
            let (s, c) = (k as f64 * theta).sin_cos();
            sum += self.alpha(k) * c + self.beta(k) * s;
        }
        sum
    }

    /// Partial sum of the conjugate series
    /// sum_k alpha_k sin(k theta) - beta_k cos(k theta).
    pub fn conjugate_partial_sum(&self, n_terms: usize, theta: f64) -> f64 {
        let mut sum = 0.0;
        for k in 1..=n_terms {
            let (s, c) = (k as f64 * theta).sin_cos();
            sum += self.alpha(k) * s - self.beta(k) * c;
        }
        sum
    }

    /// Brute-force remainder oracle: sum_{k = n_terms+1}^{terms} of the
    /// analytic series at `theta`. Accuracy is set by the coefficient decay;
    /// `terms` must be at least 10 * n_terms.
    pub fn tail_sum(&self, n_terms: usize, theta: f64, terms: usize) -> f64 {
        assert!(
            terms >= 10 * n_terms,
            "tail oracle needs terms >= 10 * n_terms"
        );
        let mut sum = 0.0;
        for k in (n_terms + 1)..=terms {
            let (s, c) = (k as f64 * theta).sin_cos();
            sum += self.alpha(k) * c + self.beta(k) * s;
        }
        sum
    }

    /// Samples f on a grid and projects the result to zero average.
    pub fn sample_on(&self, grid: &PeriodicGrid) -> Result<SampledFunction> {
        Ok(SampledFunction::sample(grid, |t| (self.f)(t))?.project_zero_average())
    }
}

/// All named catalog entries.
pub fn entries() -> Vec<CatalogEntry> {
    let mut list = Vec::with_capacity(35);
    for k in 1..=16usize {
        list.push(pure_cos(k));
        list.push(pure_sin(k));
    }
    list.push(square_wave());
    list.push(sawtooth());
    list.push(random_band_limited(0, 16));
    list
}

/// Looks up an entry by name (`cos3`, `sin12`, `square`, `sawtooth`,
/// `random`).
pub fn find(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

fn pure_cos(k: usize) -> CatalogEntry {
    let kf = k as f64;
    CatalogEntry {
        name: format!("cos{k}"),
        f: Arc::new(move |t| (kf * t).cos()),
        conjugate: Some(Arc::new(move |t| (kf * t).sin())),
        alpha: Arc::new(move |j| if j == k { 1.0 } else { 0.0 }),
        beta: Arc::new(|_| 0.0),
        smoothness: Smoothness::Analytic,
    }
}

fn pure_sin(k: usize) -> CatalogEntry {
    let kf = k as f64;
    CatalogEntry {
        name: format!("sin{k}"),
        f: Arc::new(move |t| (kf * t).sin()),
        conjugate: Some(Arc::new(move |t| -(kf * t).cos())),
        alpha: Arc::new(|_| 0.0),
        beta: Arc::new(move |j| if j == k { 1.0 } else { 0.0 }),
        smoothness: Smoothness::Analytic,
    }
}

/// f = sgn(theta) on (-pi, pi); the conjugate has log singularities at 0 and
/// +-pi, none of which a midpoint grid ever samples.
fn square_wave() -> CatalogEntry {
    CatalogEntry {
        name: "square".into(),
        f: Arc::new(|t| {
            if t > 0.0 {
                1.0
            } else if t < 0.0 {
                -1.0
            } else {
                0.0
            }
        }),
        conjugate: Some(Arc::new(|t| 2.0 / PI * (t / 2.0).tan().abs().ln())),
        alpha: Arc::new(|_| 0.0),
        beta: Arc::new(|k| {
            if k % 2 == 1 {
                4.0 / (PI * k as f64)
            } else {
                0.0
            }
        }),
        smoothness: Smoothness::Jump,
    }
}

/// f = theta on (-pi, pi); jumps at +-pi, conjugate log-singular there.
fn sawtooth() -> CatalogEntry {
    CatalogEntry {
        name: "sawtooth".into(),
        f: Arc::new(|t| t),
        conjugate: Some(Arc::new(|t| -2.0 * (2.0 * (t / 2.0).cos()).ln())),
        alpha: Arc::new(|_| 0.0),
        beta: Arc::new(|k| {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            2.0 * sign / k as f64
        }),
        smoothness: Smoothness::Jump,
    }
}

/// Band-limited trig polynomial with coefficients drawn from a seeded
/// splitmix64 stream, uniform in [-1, 1). Fully deterministic: the same
/// (seed, degree) always produces the same entry.
pub fn random_band_limited(seed: u64, degree: usize) -> CatalogEntry {
    assert!(degree >= 1, "degree must be at least 1");
    let mut state = seed;
    let mut alpha = Vec::with_capacity(degree);
    let mut beta = Vec::with_capacity(degree);
    for _ in 0..degree {
        alpha.push(unit_interval(&mut state) * 2.0 - 1.0);
        beta.push(unit_interval(&mut state) * 2.0 - 1.0);
    }
    let alpha = Arc::new(alpha);
    let beta = Arc::new(beta);
    let (a_f, b_f) = (alpha.clone(), beta.clone());
    let (a_g, b_g) = (alpha.clone(), beta.clone());
    let a_coef = alpha.clone();
    let b_coef = beta.clone();
    CatalogEntry {
        name: "random".into(),
        f: Arc::new(move |t| {
            let mut sum = 0.0;
            for k in 1..=a_f.len() {
                let (s, c) = (k as f64 * t).sin_cos();
                sum += a_f[k - 1] * c + b_f[k - 1] * s;
            }
            sum
        }),
        conjugate: Some(Arc::new(move |t| {
            let mut sum = 0.0;
            for k in 1..=a_g.len() {
                let (s, c) = (k as f64 * t).sin_cos();
                sum += a_g[k - 1] * s - b_g[k - 1] * c;
            }
            sum
        })),
        alpha: Arc::new(move |k| {
            if k <= a_coef.len() {
                a_coef[k - 1]
            } else {
                0.0
            }
        }),
        beta: Arc::new(move |k| {
            if k <= b_coef.len() {
                b_coef[k - 1]
            } else {
                0.0
            }
        }),
        smoothness: Smoothness::Analytic,
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn unit_interval(state: &mut u64) -> f64 {
    (splitmix64(state) >> 11) as f64 / (1u64 << 53) as f64
}

/// One frozen reference value: `|tail of name's series past n_terms| at
/// theta`, produced by `tail_sum` with the stated term count.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenRow {
    pub name: String,
    pub n_terms: usize,
    pub theta: f64,
    pub value: f64,
    pub terms: usize,
    pub version: u32,
}

/// Parses the plain-text golden table: whitespace-separated columns
/// `name n_terms theta value terms version`, `#` comments allowed.
pub fn parse_golden(contents: &str) -> Result<Vec<GoldenRow>> {
    let mut rows = Vec::new();
    for (idx, raw) in contents.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 6 {
            return Err(Error::GoldenParse {
                line,
                reason: format!("expected 6 columns, found {}", fields.len()),
            });
        }
        let parse_err = |what: &str| Error::GoldenParse {
            line,
            reason: format!("could not parse {what}"),
        };
        rows.push(GoldenRow {
            name: fields[0].to_string(),
            n_terms: fields[1].parse().map_err(|_| parse_err("n_terms"))?,
            theta: fields[2].parse().map_err(|_| parse_err("theta"))?,
            value: fields[3].parse().map_err(|_| parse_err("value"))?,
            terms: fields[4].parse().map_err(|_| parse_err("terms"))?,
            version: fields[5].parse().map_err(|_| parse_err("version"))?,
        });
    }
    Ok(rows)
}
