//! Acceptance suite: one test per criterion, each printing a pass line with
//! the observed worst error. Run with `-- --nocapture` to see the lines.
//!
//! Reference values come from closed forms and from the catalog's tail-sum
//! oracle (direct summation of analytic coefficients), never from the
//! quadrature paths under test.

use fourier_circle::catalog;
use fourier_circle::dirichlet::{self, RemainderOperator};
use fourier_circle::hilbert::{self, PvStrategy};
use fourier_circle::{FourierCoefficients, PeriodicGrid, SampledFunction};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

fn strategies() -> [PvStrategy; 2] {
    [PvStrategy::subtraction(), PvStrategy::offset_grid()]
}

fn seeded_functions(n: usize, count: u64) -> Vec<(catalog::CatalogEntry, SampledFunction)> {
    let grid = PeriodicGrid::new(n).unwrap();
    (0..count)
        .map(|seed| {
            let degree = 8 * (seed % 4 + 1) as usize; // 8, 16, 24, 32
            let entry = catalog::random_band_limited(seed, degree);
            let s = entry.sample_on(&grid).unwrap();
            (entry, s)
        })
        .collect()
}

/// Criterion 1: H_c maps cos(k theta) to sin(k theta) and sin(k theta) to
/// -cos(k theta) within 1e-6 over the whole grid, k = 1..16, n = 1024, for
/// both PV strategies.
#[test]
fn criterion_01_basis_action() {
    let n = 1024;
    let grid = PeriodicGrid::new(n).unwrap();
    let mut worst = 0.0f64;
    for k in 1..=16usize {
        let kf = k as f64;
        let cos_k = SampledFunction::sample(&grid, |t| (kf * t).cos())
            .unwrap()
            .project_zero_average();
        let sin_k = SampledFunction::sample(&grid, |t| (kf * t).sin())
            .unwrap()
            .project_zero_average();
        for strategy in strategies() {
            let hc = hilbert::transform(&cos_k, &strategy).unwrap();
            let hs = hilbert::transform(&sin_k, &strategy).unwrap();
            for (j, &t) in grid.nodes().iter().enumerate() {
                worst = worst.max((hc.value(j) - (kf * t).sin()).abs());
                worst = worst.max((hs.value(j) + (kf * t).cos()).abs());
            }
        }
    }
    assert!(
        worst <= 1e-6,
        "criterion 1 FAIL: basis action error {worst:e}"
    );
    println!("criterion 1 PASS: basis action, max error {worst:.3e} (tol 1e-6)");
}

/// Criterion 2: the raw PV quadrature annihilates constants to 1e-10 at 32
/// offset points, n = 1024.
#[test]
fn criterion_02_constant_annihilation() {
    let grid = PeriodicGrid::new(1024).unwrap();
    let ones = SampledFunction::sample(&grid, |_| 1.0).unwrap();
    let mut worst = 0.0f64;
    for strategy in strategies() {
        for &theta in grid.offset_points().iter().take(32) {
            let v = hilbert::pv_quadrature(&ones, theta, &strategy).unwrap();
            worst = worst.max(v.abs());
        }
    }
    assert!(
        worst <= 1e-10,
        "criterion 2 FAIL: constant residue {worst:e}"
    );
    println!("criterion 2 PASS: constant annihilation, max residue {worst:.3e} (tol 1e-10)");
}

/// Criterion 3: anti-involution H_c[H_c[f]] = -f and inverse round trip
/// H_c^{-1}[H_c[f]] = f within 2e-5 for 20 seeded band-limited functions of
/// degree <= 32 at n = 1024.
#[test]
fn criterion_03_involution_and_inverse() {
    let strategy = PvStrategy::subtraction();
    let mut worst_inv = 0.0f64;
    let mut worst_round = 0.0f64;
    for (_, s) in seeded_functions(1024, 20) {
        let g = hilbert::transform(&s, &strategy).unwrap();
        let twice = hilbert::transform(&g, &strategy).unwrap();
        for j in 0..s.grid().len() {
            worst_inv = worst_inv.max((twice.value(j) + s.value(j)).abs());
            // H^{-1} = -H applied to g recovers f.
            worst_round = worst_round.max((-twice.value(j) - s.value(j)).abs());
        }
        // Spot-check the pointwise inverse entry point as well.
        for &theta in s.grid().offset_points().iter().step_by(257) {
            let back = hilbert::inverse_at(&g, theta, &strategy).unwrap();
            let fc = FourierCoefficients::from_samples(&s, s.grid().len() / 2 - 1).unwrap();
            worst_round = worst_round.max((back - fc.evaluate(theta)).abs());
        }
    }
    assert!(
        worst_inv <= 2e-5,
        "criterion 3 FAIL: involution error {worst_inv:e}"
    );
    assert!(
        worst_round <= 2e-5,
        "criterion 3 FAIL: inverse error {worst_round:e}"
    );
    println!(
        "criterion 3 PASS: anti-involution {worst_inv:.3e}, inverse round trip {worst_round:.3e} (tol 2e-5)"
    );
}

/// Criterion 4: Dirichlet-integral partial sums match coefficient-path
/// partial sums within 1e-8 for band-limited inputs, every order up to 32.
#[test]
fn criterion_04_partial_sum_equivalence() {
    let n = 256;
    let mut worst = 0.0f64;
    for (_, s) in seeded_functions(n, 5) {
        let fc = FourierCoefficients::from_samples(&s, n / 2 - 1).unwrap();
        let mut thetas = s.grid().offset_points();
        thetas.extend_from_slice(&[0.123, -2.97, 1.0]);
        for n_terms in 1..=32usize {
            for &theta in &thetas {
                let integral = dirichlet::partial_sum(&s, n_terms, theta);
                let series = fc.partial_sum(n_terms, theta).unwrap();
                worst = worst.max((integral - series).abs());
            }
        }
    }
    assert!(worst <= 1e-8, "criterion 4 FAIL: partial-sum gap {worst:e}");
    println!("criterion 4 PASS: Dirichlet partial sums, max gap {worst:.3e} (tol 1e-8)");
}

/// Criterion 5: D_s[N,f] + D_r[N,f] = f within 1e-4 at every offset point
/// for N in {1,2,3,8}, and the sum is N-independent within a 2e-4 spread.
#[test]
fn criterion_05_remainder_identity() {
    let n = 1024;
    let orders = [1usize, 2, 3, 8];
    let strategy = PvStrategy::subtraction();
    let mut worst_identity = 0.0f64;
    let mut worst_spread = 0.0f64;
    for (entry, s) in seeded_functions(n, 20) {
        let op = RemainderOperator::new(&s, &strategy).unwrap();
        for &theta in &s.grid().offset_points() {
            let f_exact = entry.eval(theta);
            let mut sums = [0.0f64; 4];
            for (i, &n_terms) in orders.iter().enumerate() {
                let total = dirichlet::partial_sum(&s, n_terms, theta) + op.apply(n_terms, theta);
                sums[i] = total;
                worst_identity = worst_identity.max((total - f_exact).abs());
            }
            let hi = sums.iter().fold(f64::MIN, |m, &v| m.max(v));
            let lo = sums.iter().fold(f64::MAX, |m, &v| m.min(v));
            worst_spread = worst_spread.max(hi - lo);
        }
    }
    assert!(
        worst_identity <= 1e-4,
        "criterion 5 FAIL: identity error {worst_identity:e}"
    );
    assert!(
        worst_spread <= 2e-4,
        "criterion 5 FAIL: order spread {worst_spread:e}"
    );
    println!(
        "criterion 5 PASS: partial sum + remainder identity {worst_identity:.3e} (tol 1e-4), order spread {worst_spread:.3e} (tol 2e-4)"
    );
}

/// Criterion 6: the remainder of g equals H_c applied to the remainder of f
/// within 1e-4 for N in {1, 4}.
#[test]
fn criterion_06_conjugate_remainder_mapping() {
    let n = 1024;
    let strategy = PvStrategy::subtraction();
    let grid = PeriodicGrid::new(n).unwrap();
    let mut worst = 0.0f64;
    for (_, s) in seeded_functions(n, 6) {
        let op_f = RemainderOperator::new(&s, &strategy).unwrap();
        let op_g = RemainderOperator::new(op_f.conjugate_function(), &strategy).unwrap();
        for n_terms in [1usize, 4] {
            let r_f: Vec<f64> = grid
                .nodes()
                .iter()
                .map(|&t| op_f.apply(n_terms, t))
                .collect();
            let r_f = SampledFunction::from_values(&grid, r_f)
                .unwrap()
                .project_zero_average();
            let h_r_f = hilbert::transform(&r_f, &strategy).unwrap();
            for (j, &t) in grid.nodes().iter().enumerate().step_by(13) {
                let r_g = op_g.apply(n_terms, t);
                worst = worst.max((r_g - h_r_f.value(j)).abs());
            }
        }
    }
    assert!(worst <= 1e-4, "criterion 6 FAIL: mapping error {worst:e}");
    println!("criterion 6 PASS: conjugate-remainder mapping, max error {worst:.3e} (tol 1e-4)");
}

/// Criterion 7: the double and reduced forms of the remainder kernel agree
/// within 1e-6 on the 16-point (N, delta) grid at quadrature_n = 8192.
#[test]
fn criterion_07_kernel_cross_form() {
    let q = 8192;
    let mut worst = 0.0f64;
    for &n_terms in &[1usize, 2, 4, 8] {
        for &delta in &[FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4, PI] {
            let double = dirichlet::remainder_kernel_double(n_terms, delta, 0.0, q).unwrap();
            let reduced = dirichlet::remainder_kernel(n_terms, delta, q).unwrap();
            worst = worst.max((double - reduced).abs());
        }
    }
    assert!(worst <= 1e-6, "criterion 7 FAIL: cross-form gap {worst:e}");
    println!("criterion 7 PASS: remainder-kernel cross-form, max gap {worst:.3e} (tol 1e-6)");
}

/// Criterion 8: sawtooth remainders at theta = pi/2, n = 4096, match the
/// frozen tail-sum golden values within 5e-3 and decay like 2.5/N.
#[test]
fn criterion_08_sawtooth_remainder_decay() {
    let golden = catalog::parse_golden(include_str!("../golden/tail_sums.txt")).unwrap();
    let grid = PeriodicGrid::new(4096).unwrap();
    let sawtooth = catalog::find("sawtooth").unwrap();
    let s = sawtooth.sample_on(&grid).unwrap();
    let op = RemainderOperator::new(&s, &PvStrategy::subtraction()).unwrap();
    let mut worst = 0.0f64;
    for n_terms in [8usize, 16, 32, 64] {
        let row = golden
            .iter()
            .find(|r| r.name == "sawtooth" && r.n_terms == n_terms)
            .expect("golden row");
        let r = op.apply(n_terms, FRAC_PI_2);
        let err = (r - row.value).abs();
        worst = worst.max(err);
        assert!(
            err <= 5e-3,
            "criterion 8 FAIL: N={n_terms}, remainder {r} vs golden {} (err {err:e})",
            row.value
        );
        assert!(
            r.abs() <= 2.5 / n_terms as f64,
            "criterion 8 FAIL: N={n_terms}, |R| = {} above 2.5/N",
            r.abs()
        );
    }
    println!("criterion 8 PASS: sawtooth remainder decay, max golden gap {worst:.3e} (tol 5e-3)");
}

/// Criterion 9: kernel parities to 1e-15 and shift invariance of the double
/// remainder kernel to 1e-8.
#[test]
fn criterion_09_parity_and_shift_invariance() {
    let mut worst_parity = 0.0f64;
    let mut delta = 0.05;
    while delta < 3.1 {
        let scale = (1.0f64).max(hilbert::kernel(delta).unwrap().abs());
        worst_parity = worst_parity.max(
            (hilbert::kernel(-delta).unwrap() + hilbert::kernel(delta).unwrap()).abs() / scale,
        );
        for n_terms in [1usize, 3, 9] {
            let d_plus = dirichlet::kernel(n_terms, delta);
            let d_minus = dirichlet::kernel(n_terms, -delta);
            worst_parity = worst_parity.max((d_plus - d_minus).abs() / d_plus.abs().max(1.0));
            let c_plus = dirichlet::conjugate_kernel(n_terms, delta).unwrap();
            let c_minus = dirichlet::conjugate_kernel(n_terms, -delta).unwrap();
            worst_parity = worst_parity.max((c_plus + c_minus).abs() / c_plus.abs().max(1.0));
        }
        delta += 0.07;
    }
    assert!(
        worst_parity <= 1e-15,
        "criterion 9 FAIL: parity residue {worst_parity:e}"
    );

    let mut worst_shift = 0.0f64;
    for &(theta, theta1) in &[(0.9, 0.9 - FRAC_PI_2), (0.2, 0.2 - FRAC_PI_4)] {
        let base = dirichlet::remainder_kernel_double(2, theta, theta1, 2048).unwrap();
        for &shift in &[0.3, -1.1] {
            let moved =
                dirichlet::remainder_kernel_double(2, theta + shift, theta1 + shift, 2048).unwrap();
            worst_shift = worst_shift.max((base - moved).abs());
        }
    }
    assert!(
        worst_shift <= 1e-8,
        "criterion 9 FAIL: shift invariance residue {worst_shift:e}"
    );
    println!(
        "criterion 9 PASS: kernel parity {worst_parity:.3e} (tol 1e-15), shift invariance {worst_shift:.3e} (tol 1e-8)"
    );
}
