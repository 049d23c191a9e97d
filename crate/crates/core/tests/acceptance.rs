//! Acceptance checks. Each check prints one line; the process fails if any
//! check fails.

use std::f64::consts::PI;
use std::process::ExitCode;

use inner_analytic::chains::{chain_element, log_derivative, log_primitive, ChainIndex};
use inner_analytic::corpus;
use inner_analytic::dirichlet::{laplace_residual, poisson_integral, solve, BoundaryCondition, LaplaceGrid};
use inner_analytic::fourier::{coefficients, extended_coefficients, PrimitiveStack};
use inner_analytic::inner::{fourier_conjugate, make_series, recover_real, CoefficientSequence, InnerFunction, RadiusSchedule};
use inner_analytic::point::{CirclePoint, DiskPoint};
use inner_analytic::singular::{
    delta_coeffs, delta_parity_parts, eulerian_table, pair, w_delta_n, GeneralizedFunction, TestFunction,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// The delta inner function written out directly, for use as an oracle.
fn delta_oracle(theta1: f64, z: Complex64) -> Complex64 {
    let z1 = Complex64::from_polar(1.0, theta1);
    Complex64::new(1.0 / (2.0 * PI), 0.0) - z / (z - z1) / PI
}

fn random_series(rng: &mut ChaCha8Rng, order: usize) -> CoefficientSequence {
    let coeffs = (0..order).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    CoefficientSequence::new(Complex64::default(), coeffs).unwrap()
}

fn eulerian_triangle() -> Outcome {
    let expected: [&[u128]; 6] = [&[1], &[1, 1], &[1, 4, 1], &[1, 11, 11, 1], &[1, 26, 66, 26, 1], &[1, 57, 302, 302, 57, 1]];
    let table = eulerian_table(5).unwrap();
    let ok = (0..=5).all(|n| table.row(n) == Some(expected[n]));
    outcome(ok, format!("row 5 = {:?}", table.row(5).unwrap()))
}

fn delta_coefficient_law() -> Outcome {
    // Taylor coefficients of the closed form by a discrete Cauchy integral on
    // |chi| = 3/4 with 1024 nodes, compared with k^n / pi after removing i^n.
    let table = eulerian_table(8).unwrap();
    let (r, m) = (0.75f64, 1024usize);
    let mut worst = 0.0f64;
    for n in 0..=5u32 {
        let samples: Vec<Complex64> = (0..m)
            .map(|j| {
                let t = 2.0 * PI * j as f64 / m as f64;
                w_delta_n(n, CirclePoint::new(0.0), DiskPoint::new(r, t).unwrap(), &table).unwrap()
            })
            .collect();
        let i_n = Complex64::new(0.0, 1.0).powu(n);
        for k in 1..=32usize {
            let sum: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(j, w)| w * Complex64::from_polar(1.0, -2.0 * PI * (j * k) as f64 / m as f64))
                .sum();
            let c = sum / (m as f64 * r.powi(k as i32)) / i_n;
            let target = (k as f64).powi(n as i32) / PI;
            worst = worst.max((c - target).norm() / target);
        }
    }
    outcome(worst <= 1e-9, format!("max relative error {worst:.2e} for n <= 5, k <= 32"))
}

fn sifting() -> Outcome {
    let g = TestFunction::Sampler(inner_analytic::RealSampler::new(|t: f64| (2.0 * t).cos()));
    let t1 = PI / 3.0;
    // g(t1), -g'(t1), +g''(t1) for g = cos 2t
    let targets = [(2.0 * t1).cos(), 2.0 * (2.0 * t1).sin(), -4.0 * (2.0 * t1).cos()];
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, target) in targets.iter().enumerate() {
        let f = GeneralizedFunction::delta(n as u32, CirclePoint::new(t1)).unwrap();
        match pair(&g, &f, 1 << 16, &RadiusSchedule::default()) {
            Ok(v) => {
                ok &= (v.value - target).abs() <= 1e-3;
                parts.push(format!("n={n}: {:.9} (target {:.9})", v.value, target));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("n={n}: {e}"));
            }
        }
    }
    outcome(ok, parts.join(", "))
}

fn normalization() -> Outcome {
    let m = 1024;
    let mut worst = 0.0f64;
    for t1 in [0.0, 1.0, -2.5] {
        let w = InnerFunction::delta(0, CirclePoint::new(t1)).unwrap();
        let integral: f64 = (0..m)
            .map(|j| w.eval(DiskPoint::new(0.5, -PI + 2.0 * PI * j as f64 / m as f64).unwrap()).re)
            .sum::<f64>()
            * 2.0
            * PI
            / m as f64;
        worst = worst.max((integral - 1.0).abs());
    }
    outcome(worst <= 1e-12, format!("max |integral - 1| = {worst:.2e} at rho = 0.5"))
}

fn fc_of_delta() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    let mut count = 0;
    while count < 20 {
        let (t, t1) = (rng.gen_range(-PI..PI), rng.gen_range(-PI..PI));
        let d = t - t1;
        if d.sin().abs() <= 0.1 {
            continue;
        }
        count += 1;
        let w = InnerFunction::delta(0, CirclePoint::new(t1)).unwrap();
        let exact = (1.0 + d.cos()) / (2.0 * d.sin()) / PI;
        match fourier_conjugate(&w, CirclePoint::new(t), &RadiusSchedule::default()) {
            Ok(v) => worst = worst.max((v.value - exact).abs()),
            Err(e) => return outcome(false, format!("theta = {t}: {e}")),
        }
    }
    outcome(worst <= 1e-6, format!("max error {worst:.2e} at 20 angles"))
}

fn chain_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst_trip = 0.0f64;
    for _ in 0..100 {
        let order = rng.gen_range(1..=64);
        let seq = random_series(&mut rng, order);
        let back = log_primitive(&log_derivative(&make_series(seq.clone())).unwrap()).unwrap().coefficient_view().unwrap();
        for k in 1..=order {
            let c = seq.get(k);
            worst_trip = worst_trip.max((back.get(k) - c).norm() / (c.norm() * f64::EPSILON));
        }
    }
    let mut worst_chain = 0.0f64;
    for t1 in [0.0, 0.8, -2.0] {
        let theta1 = CirclePoint::new(t1);
        let closed = InnerFunction::delta(0, theta1).unwrap();
        let series = make_series(delta_coeffs(0, theta1, 32));
        for n in 0..=5u32 {
            let oracle = |k: usize| {
                let k = k as f64;
                Complex64::new(0.0, k).powu(n) / PI * Complex64::from_polar(1.0, -k * t1)
            };
            let lib = delta_coeffs(n, theta1, 32);
            for w in [&closed, &series] {
                let c = chain_element(w, ChainIndex(n as i64)).unwrap().coefficients(32);
                for k in 1..=32 {
                    let scale = oracle(k).norm();
                    worst_chain = worst_chain.max((c.get(k) - lib.get(k)).norm() / scale);
                    worst_chain = worst_chain.max((c.get(k) - oracle(k)).norm() / scale);
                }
            }
        }
    }
    outcome(
        worst_trip <= 2.0 && worst_chain <= 1e-9,
        format!("round trip within {worst_trip:.1} eps on 100 sequences; chain vs delta coefficients {worst_chain:.2e}"),
    )
}

fn extended() -> Outcome {
    let stack = PrimitiveStack::new(corpus::sampler("logsine").unwrap(), 1);
    let c = extended_coefficients(&stack, 16, 1 << 12).unwrap();
    let worst = (1..=16).map(|k| c.alpha(k).abs().max((c.beta(k) - 1.0 / PI).abs())).fold(0.0, f64::max);
    outcome(worst <= 1e-6, format!("max deviation from (0, 1/pi) = {worst:.2e} for k <= 16"))
}

fn dirichlet_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let names = ["exp_cos", "poisson_half", "mixed", "inv_sin", "exp_sin2"];
    let mut worst = 0.0f64;
    for name in names {
        let f = corpus::sampler(name).unwrap();
        let field = solve(&BoundaryCondition::regular(f.clone()), 256, 1 << 12).unwrap();
        for _ in 0..50 {
            let p = DiskPoint::new(0.9 * rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI)).unwrap();
            worst = worst.max((field.value(p) - poisson_integral(&f, p, 1 << 12).unwrap()).abs());
        }
    }
    outcome(worst <= 1e-8, format!("max |solve - Poisson| = {worst:.2e} over 5 x 50 points"))
}

fn harmonicity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let grid = LaplaceGrid { rho_max: 0.8, n_rho: 16, n_theta: 32 };
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let coeffs = (0..64)
            .map(|_| Complex64::from_polar(rng.gen::<f64>(), rng.gen_range(-PI..PI)))
            .collect();
        let w = make_series(CoefficientSequence::new(Complex64::default(), coeffs).unwrap());
        let field = inner_analytic::HarmonicField { w, mean: 0.0 };
        worst = worst.max(laplace_residual(&field, grid).unwrap());
    }
    let fault = laplace_residual(&|r: f64, _t: f64| r * r, grid).unwrap();
    outcome(worst <= 1e-4 && fault > 1.0, format!("max residual {worst:.2e}; rho^2 fault residual {fault:.3}"))
}

fn parity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let w = make_series(random_series(&mut rng, 40));
    let (w1, w2) = w.parity_split();
    let mut recon = 0.0f64;
    for _ in 0..100 {
        let p = DiskPoint::new(rng.gen::<f64>().sqrt() * 0.99, rng.gen_range(-PI..PI)).unwrap();
        recon = recon.max((w1.eval(p) + w2.eval(p) - w.eval(p)).norm());
    }
    let mut segment = 0.0f64;
    for j in 1..100 {
        let x = -1.0 + 2.0 * j as f64 / 100.0;
        let p = DiskPoint::from_z(Complex64::new(x, 0.0)).unwrap();
        segment = segment.max(w1.eval(p).im.abs()).max(w2.eval(p).re.abs());
    }
    let t1 = 0.9;
    let (e, o) = delta_parity_parts(CirclePoint::new(t1));
    let mut closed = 0.0f64;
    for _ in 0..20 {
        let p = DiskPoint::new(rng.gen::<f64>() * 0.95, rng.gen_range(-PI..PI)).unwrap();
        let (a, b) = (delta_oracle(t1, p.z()), delta_oracle(-t1, p.z()));
        closed = closed.max((e.eval(p) - (a + b) / 2.0).norm()).max((o.eval(p) - (a - b) / 2.0).norm());
    }
    outcome(
        recon <= 1e-12 && segment <= 1e-12 && closed <= 1e-12,
        format!("reconstruction {recon:.1e}; real-segment parity {segment:.1e}; delta parts {closed:.1e}"),
    )
}

fn boundary_recovery() -> Outcome {
    let square = corpus::sampler("square").unwrap();
    let n = 1 << 16;
    let c = coefficients(&square, n / 4, n).unwrap();
    let w = InnerFunction::series_with_singularities(c, square.singular_points().to_vec());
    let mut worst = 0.0f64;
    for j in 0..40 {
        // 20 angles in (0.1, pi - 0.1) and their negatives
        let t = 0.1 + (PI - 0.2) * (j % 20) as f64 / 19.0;
        let t = if j < 20 { t } else { -t };
        match recover_real(&w, CirclePoint::new(t), &RadiusSchedule::default()) {
            Ok(v) => worst = worst.max((v.value - t.signum()).abs()),
            Err(e) => return outcome(false, format!("theta = {t}: {e}")),
        }
    }
    outcome(worst <= 1e-3, format!("max error {worst:.2e} at 40 angles >= 0.1 from the jumps"))
}

type Check = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let checks: [Check; 11] = [
        ("Eulerian triangle", eulerian_triangle),
        ("delta coefficient law", delta_coefficient_law),
        ("sifting convergence", sifting),
        ("normalization at finite radius", normalization),
        ("Fourier conjugate of the delta", fc_of_delta),
        ("chain round trip", chain_round_trip),
        ("extended coefficients", extended),
        ("Dirichlet oracle equivalence", dirichlet_oracle),
        ("harmonicity", harmonicity),
        ("parity", parity),
        ("boundary recovery", boundary_recovery),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let r = check();
        println!("[{}] {:>2} {name}: {}", if r.pass { "PASS" } else { "FAIL" }, i + 1, r.detail);
        failed += usize::from(!r.pass);
    }
    println!("{} of {} acceptance checks passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
