//! Fourier coefficients, complex Taylor coefficients and partial sums.
//!
//! Coefficients follow the usual normalisation
//!
//! - alpha_k = (1/pi) integral cos(k theta) f(theta) dtheta
//! - beta_k  = (1/pi) integral sin(k theta) f(theta) dtheta
//!
//! computed by the midpoint rule on the sampling grid. On a uniform grid the
//! midpoint rule is exact for trigonometric polynomials below the Nyquist
//! degree, so coefficients of band-limited inputs are recovered to rounding.
//!
//! The complex Taylor coefficients c_0 = alpha_0 / 2, c_k = alpha_k - i beta_k
//! seed the power series of the associated function on the unit disk, whose
//! real part restricted to the boundary is the sampled function and whose
//! imaginary part is its conjugate.

use crate::grid::SampledFunction;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Real Fourier coefficients alpha_1..alpha_kmax, beta_1..beta_kmax, plus the
/// retained mean term alpha_0.
///
/// alpha_0 is carried (not assumed zero) so a missing zero-average projection
/// shows up in the data instead of being masked.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficients {
    alpha0: f64,
    alpha: Vec<f64>,
    beta: Vec<f64>,
}

impl FourierCoefficients {
    /// Midpoint-rule coefficients of a sampled function up to `k_max`.
    ///
    /// `k_max` must not exceed n/2 - 1; beyond that the grid aliases mode k
    /// onto mode n - k and the result would be silently wrong.
    pub fn from_samples(s: &SampledFunction, k_max: usize) -> Result<Self> {
        let n = s.grid().len();
        let bound = n / 2 - 1;
        if k_max < 1 || k_max > bound {
            return Err(Error::Aliasing { k_max, bound });
        }
        let step = s.grid().step();
        let scale = step / PI; // = 2/n
        let alpha0 = scale * s.values().iter().sum::<f64>();
        let mut alpha = Vec::with_capacity(k_max);
        let mut beta = Vec::with_capacity(k_max);
        for k in 1..=k_max {
            let kf = k as f64;
            let mut sa = 0.0;
            let mut sb = 0.0;
            for (j, &t) in s.grid().nodes().iter().enumerate() {
                let (sin_kt, cos_kt) = (kf * t).sin_cos();
                sa += cos_kt * s.value(j);
                sb += sin_kt * s.value(j);
            }
            alpha.push(scale * sa);
            beta.push(scale * sb);
        }
        Ok(Self {
            alpha0,
            alpha,
            beta,
        })
    }

    /// Builds a coefficient set directly, e.g. from closed-form values.
    pub fn from_parts(alpha0: f64, alpha: Vec<f64>, beta: Vec<f64>) -> Result<Self> {
        if alpha.is_empty() || alpha.len() != beta.len() {
            return Err(Error::Quadrature {
                reason: "coefficient arrays must be non-empty and equally long".into(),
            });
        }
        if !alpha0.is_finite()
            || alpha.iter().any(|v| !v.is_finite())
            || beta.iter().any(|v| !v.is_finite())
        {
            return Err(Error::Quadrature {
                reason: "coefficients must be finite".into(),
            });
        }
        Ok(Self {
            alpha0,
            alpha,
            beta,
        })
    }

    pub fn k_max(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha0(&self) -> f64 {
        self.alpha0
    }

    /// alpha_k for 1 <= k <= k_max.
    pub fn alpha(&self, k: usize) -> f64 {
        self.alpha[k - 1]
    }

    /// beta_k for 1 <= k <= k_max.
    pub fn beta(&self, k: usize) -> f64 {
        self.beta[k - 1]
    }

    /// Slice of alpha_1..alpha_kmax (index k-1 holds alpha_k).
    pub fn alphas(&self) -> &[f64] {
        &self.alpha
    }

    pub fn betas(&self) -> &[f64] {
        &self.beta
    }

    /// Partial sum of the first `n_terms` harmonics:
    /// sum_{k=1..n_terms} alpha_k cos(k theta) + beta_k sin(k theta).
    ///
    /// The mean term alpha_0 is deliberately excluded; the operators in this
    /// crate live on the zero-average subspace.
    pub fn partial_sum(&self, n_terms: usize, theta: f64) -> Result<f64> {
        if n_terms > self.k_max() {
            return Err(Error::Truncation {
                n_terms,
                k_max: self.k_max(),
            });
        }
        let mut sum = 0.0;
        for k in 1..=n_terms {
            let (s, c) = (k as f64 * theta).sin_cos();
            sum += self.alpha(k) * c + self.beta(k) * s;
        }
        Ok(sum)
    }

    /// Full series evaluation including the mean term alpha_0 / 2. Used as
    /// the trigonometric interpolant through the coefficients.
    pub fn evaluate(&self, theta: f64) -> f64 {
        let mut sum = self.alpha0 / 2.0;
        for k in 1..=self.k_max() {
            let (s, c) = (k as f64 * theta).sin_cos();
            sum += self.alpha(k) * c + self.beta(k) * s;
        }
        sum
    }

    /// Derivative of the interpolant:
    /// sum_k k (beta_k cos(k theta) - alpha_k sin(k theta)).
    pub fn evaluate_derivative(&self, theta: f64) -> f64 {
        let mut sum = 0.0;
        for k in 1..=self.k_max() {
            let kf = k as f64;
            let (s, c) = (kf * theta).sin_cos();
            sum += kf * (self.beta(k) * c - self.alpha(k) * s);
        }
        sum
    }

    /// Coefficients of the conjugate series
    /// sum_k alpha_k sin(k theta) - beta_k cos(k theta):
    /// alpha'_k = -beta_k, beta'_k = alpha_k, alpha'_0 = 0.
    ///
    /// Applying this twice negates every coefficient exactly.
    pub fn conjugate(&self) -> FourierCoefficients {
        FourierCoefficients {
            alpha0: 0.0,
            alpha: self.beta.iter().map(|b| -b).collect(),
            beta: self.alpha.clone(),
        }
    }
}

/// Complex Taylor coefficients c_0..c_kmax with c_0 = alpha_0 / 2 and
/// c_k = alpha_k - i beta_k, stored as separate real and imaginary parts.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorCoefficients {
    re: Vec<f64>,
    im: Vec<f64>,
}

impl TaylorCoefficients {
    pub fn from_fourier(fc: &FourierCoefficients) -> Self {
        let k_max = fc.k_max();
        let mut re = Vec::with_capacity(k_max + 1);
        let mut im = Vec::with_capacity(k_max + 1);
        re.push(fc.alpha0() / 2.0);
        im.push(0.0);
        for k in 1..=k_max {
            re.push(fc.alpha(k));
            im.push(-fc.beta(k));
        }
        Self { re, im }
    }

    pub fn k_max(&self) -> usize {
        self.re.len() - 1
    }

    /// Real part of c_k for 0 <= k <= k_max.
    pub fn re(&self, k: usize) -> f64 {
        self.re[k]
    }

    /// Imaginary part of c_k for 0 <= k <= k_max.
    pub fn im(&self, k: usize) -> f64 {
        self.im[k]
    }

    /// Partial sum of the power series at z = rho e^{i theta}, split into
    /// real and imaginary parts:
    /// u + i v = sum_{k=0..n_terms} c_k rho^k e^{i k theta}.
    pub fn eval_disk(&self, rho: f64, theta: f64, n_terms: usize) -> Result<InnerAnalyticPoint> {
        if !(0.0..=1.0).contains(&rho) {
            return Err(Error::RhoRange { rho });
        }
        if n_terms > self.k_max() {
            return Err(Error::Truncation {
                n_terms,
                k_max: self.k_max(),
            });
        }
        let mut u = 0.0;
        let mut v = 0.0;
        let mut rho_pow = 1.0;
        for k in 0..=n_terms {
            let (s, c) = (k as f64 * theta).sin_cos();
            u += rho_pow * (self.re[k] * c - self.im[k] * s);
            v += rho_pow * (self.re[k] * s + self.im[k] * c);
            rho_pow *= rho;
        }
        Ok(InnerAnalyticPoint { rho, theta, u, v })
    }
}

/// Value of a power-series partial sum at a point of the closed unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InnerAnalyticPoint {
    pub rho: f64,
    pub theta: f64,
    /// Real part; restricted to rho = 1 this is the partial sum of f.
    pub u: f64,
    /// Imaginary part; restricted to rho = 1 this is the partial sum of the
    /// conjugate function.
    pub v: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::PeriodicGrid;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn coeffs_of<F: Fn(f64) -> f64>(n: usize, k_max: usize, f: F) -> FourierCoefficients {
        let g = PeriodicGrid::new(n).unwrap();
        let s = SampledFunction::sample(&g, f).unwrap();
        FourierCoefficients::from_samples(&s, k_max).unwrap()
    }

    #[test]
    fn pure_cosine_mode_is_recovered() {
        let fc = coeffs_of(64, 8, |t| (3.0 * t).cos());
        for k in 1..=8 {
            let expect = if k == 3 { 1.0 } else { 0.0 };
            assert!((fc.alpha(k) - expect).abs() <= 1e-12, "alpha_{k}");
            assert!(fc.beta(k).abs() <= 1e-12, "beta_{k}");
        }
        assert!(fc.alpha0().abs() <= 1e-12);
    }

    #[test]
    fn sine_mixture_is_recovered() {
        let fc = coeffs_of(64, 8, |t| t.sin() + 2.0 * (5.0 * t).sin());
        assert!((fc.beta(1) - 1.0).abs() <= 1e-12);
        assert!((fc.beta(5) - 2.0).abs() <= 1e-12);
        for k in 1..=8 {
            assert!(fc.alpha(k).abs() <= 1e-12);
            if k != 1 && k != 5 {
                assert!(fc.beta(k).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn square_wave_fundamental_close_to_four_over_pi() {
        let fc = coeffs_of(4096, 32, |t| if t > 0.0 { 1.0 } else { -1.0 });
        assert!((fc.beta(1) - 4.0 / PI).abs() <= 1e-6);
    }

    #[test]
    fn aliasing_bound_is_enforced() {
        let g = PeriodicGrid::new(16).unwrap();
        let s = SampledFunction::sample(&g, f64::cos).unwrap();
        assert!(FourierCoefficients::from_samples(&s, 7).is_ok());
        assert!(matches!(
            FourierCoefficients::from_samples(&s, 8),
            Err(Error::Aliasing { k_max: 8, bound: 7 })
        ));
        assert!(matches!(
            FourierCoefficients::from_samples(&s, 0),
            Err(Error::Aliasing { .. })
        ));
    }

    #[test]
    fn taylor_coefficients_from_definitions() {
        let fc = FourierCoefficients::from_parts(0.0, vec![1.0, 0.0], vec![0.0, 0.0]).unwrap();
        let tc = TaylorCoefficients::from_fourier(&fc);
        assert_eq!((tc.re(1), tc.im(1)), (1.0, 0.0));

        let fc = FourierCoefficients::from_parts(0.0, vec![0.0], vec![1.0]).unwrap();
        let tc = TaylorCoefficients::from_fourier(&fc);
        assert_eq!((tc.re(1), tc.im(1)), (0.0, -1.0));

        let fc = FourierCoefficients::from_parts(0.0, vec![0.0, 3.0], vec![0.0, 4.0]).unwrap();
        let tc = TaylorCoefficients::from_fourier(&fc);
        assert_eq!((tc.re(2), tc.im(2)), (3.0, -4.0));
        assert!((tc.re(2).hypot(tc.im(2)) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn taylor_constant_term_is_half_alpha0() {
        let fc = FourierCoefficients::from_parts(0.5, vec![1.0], vec![2.0]).unwrap();
        let tc = TaylorCoefficients::from_fourier(&fc);
        assert_eq!(tc.re(0), 0.25);
        assert_eq!(tc.im(0), 0.0);
    }

    #[test]
    fn disk_partial_sums_single_terms() {
        let fc = FourierCoefficients::from_parts(0.0, vec![1.0], vec![0.0]).unwrap();
        let tc = TaylorCoefficients::from_fourier(&fc);
        let p = tc.eval_disk(1.0, 0.0, 1).unwrap();
        assert!((p.u - 1.0).abs() < 1e-15 && p.v.abs() < 1e-15);

        let fc = FourierCoefficients::from_parts(0.0, vec![0.0], vec![1.0]).unwrap();
        let tc = TaylorCoefficients::from_fourier(&fc);
        let p = tc.eval_disk(1.0, FRAC_PI_2, 1).unwrap();
        assert!((p.u - 1.0).abs() < 1e-15 && p.v.abs() < 1e-15);

        let fc = FourierCoefficients::from_parts(0.0, vec![1.0], vec![0.0]).unwrap();
        let tc = TaylorCoefficients::from_fourier(&fc);
        let p = tc.eval_disk(0.5, 0.0, 1).unwrap();
        assert!((p.u - 0.5).abs() < 1e-15 && p.v.abs() < 1e-15);
    }

    #[test]
    fn disk_eval_rejects_bad_inputs() {
        let fc = FourierCoefficients::from_parts(0.0, vec![1.0], vec![0.0]).unwrap();
        let tc = TaylorCoefficients::from_fourier(&fc);
        assert!(matches!(
            tc.eval_disk(1.5, 0.0, 1),
            Err(Error::RhoRange { .. })
        ));
        assert!(matches!(
            tc.eval_disk(0.5, 0.0, 2),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn partial_sum_examples() {
        let fc = coeffs_of(64, 8, f64::sin);
        assert!((fc.partial_sum(1, FRAC_PI_2).unwrap() - 1.0).abs() < 1e-12);

        // Sine-only coefficient sets vanish at theta = 0 for every order.
        let fc = FourierCoefficients::from_parts(0.0, vec![0.0; 6], vec![0.3; 6]).unwrap();
        for n_terms in 0..=6 {
            assert_eq!(fc.partial_sum(n_terms, 0.0).unwrap(), 0.0);
        }

        assert!(matches!(
            fc.partial_sum(7, 0.0),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn conjugation_swaps_cos_into_sin() {
        // cos(theta) -> sin(theta)
        let fc = FourierCoefficients::from_parts(0.0, vec![1.0], vec![0.0]).unwrap();
        let conj = fc.conjugate();
        assert_eq!((conj.alpha(1), conj.beta(1)), (0.0, 1.0));
        assert_eq!(conj.alpha0(), 0.0);

        // sin(theta) -> -cos(theta)
        let fc = FourierCoefficients::from_parts(0.0, vec![0.0], vec![1.0]).unwrap();
        let conj = fc.conjugate();
        assert_eq!((conj.alpha(1), conj.beta(1)), (-1.0, 0.0));
    }

    #[test]
    fn round_trip_reproduces_trig_polynomials_at_nodes() {
        let n = 64;
        let deg = n / 2 - 1;
        let f = |t: f64| {
            let mut acc = 0.0;
            for k in 1..=deg {
                let kf = k as f64;
                acc += ((kf * 0.7).sin() / kf) * (kf * t).cos()
                    + ((kf * 1.3).cos() / kf) * (kf * t).sin();
            }
            acc
        };
        let g = PeriodicGrid::new(n).unwrap();
        let s = SampledFunction::sample(&g, f).unwrap();
        let fc = FourierCoefficients::from_samples(&s, deg).unwrap();
        for &t in g.nodes() {
            assert!((fc.partial_sum(deg, t).unwrap() - f(t)).abs() <= 1e-10);
        }
    }

    #[test]
    fn parseval_at_desk_scale() {
        let n = 128;
        let f = |t: f64| 0.7 * (2.0 * t).cos() - 1.1 * (5.0 * t).sin() + 0.2 * (13.0 * t).cos();
        let g = PeriodicGrid::new(n).unwrap();
        let s = SampledFunction::sample(&g, f).unwrap();
        let fc = FourierCoefficients::from_samples(&s, n / 2 - 1).unwrap();
        let mean_sq = s.values().iter().map(|v| v * v).sum::<f64>() / n as f64;
        let energy: f64 = (1..=fc.k_max())
            .map(|k| fc.alpha(k).powi(2) + fc.beta(k).powi(2))
            .sum::<f64>()
            / 2.0;
        assert!((mean_sq - energy).abs() <= 1e-8);
    }

    #[test]
    fn disk_boundary_matches_partial_sum_series() {
        let fc = coeffs_of(64, 20, |t| (2.0 * t).cos() + 0.5 * (7.0 * t).sin());
        let tc = TaylorCoefficients::from_fourier(&fc);
        for n_terms in [1, 5, 12, 20] {
            for &theta in &[-2.2, -0.4, 0.0, 0.9, 3.0] {
                let p = tc.eval_disk(1.0, theta, n_terms).unwrap();
                let series = fc.partial_sum(n_terms, theta).unwrap();
                assert!((p.u - series).abs() <= 1e-12);
            }
        }
    }

    proptest! {
        #[test]
        fn double_conjugation_negates_exactly(
            alpha in proptest::collection::vec(-10.0f64..10.0, 1..12),
            beta_seed in proptest::collection::vec(-10.0f64..10.0, 12),
        ) {
            let beta: Vec<f64> = beta_seed.iter().take(alpha.len()).copied().collect();
            let fc = FourierCoefficients::from_parts(0.0, alpha.clone(), beta.clone()).unwrap();
            let twice = fc.conjugate().conjugate();
            for k in 1..=fc.k_max() {
                prop_assert_eq!(twice.alpha(k), -fc.alpha(k));
                prop_assert_eq!(twice.beta(k), -fc.beta(k));
            }
        }
    }
}
