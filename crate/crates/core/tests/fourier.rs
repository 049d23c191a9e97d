use std::f64::consts::PI;

use inner_analytic::corpus;
use inner_analytic::fourier::{
    coefficients, extended_coefficients, shift_coefficients, zero_average, PrimitiveStack, RealSampler,
};
use inner_analytic::inner::{make_series, recover_real, InnerFunction, RadiusSchedule};
use inner_analytic::point::CirclePoint;
use serde::Deserialize;

#[derive(Deserialize)]
struct Fixture {
    name: String,
    singular: Vec<f64>,
    mean: f64,
    alpha: Vec<f64>,
    beta: Vec<f64>,
}

fn fixtures() -> Vec<Fixture> {
    serde_json::from_str(include_str!("fixtures/samplers.json")).unwrap()
}

#[test]
fn corpus_matches_closed_form_coefficients() {
    for fx in fixtures() {
        let f = corpus::sampler(&fx.name).unwrap();
        let declared: Vec<f64> = f.singular_points().iter().map(|p| p.theta()).collect();
        assert_eq!(declared, fx.singular, "{}", fx.name);
        let c = coefficients(&f, 8, 1 << 14).unwrap();
        // jumps and kinks converge at second order, smooth data spectrally
        let tol = if fx.singular.is_empty() { 1e-13 } else { 1e-6 };
        assert!((c.c0().re - fx.mean).abs() < tol, "{} mean", fx.name);
        for k in 1..=8 {
            assert!((c.alpha(k) - fx.alpha[k - 1]).abs() < tol, "{} alpha_{k}", fx.name);
            assert!((c.beta(k) - fx.beta[k - 1]).abs() < tol, "{} beta_{k}", fx.name);
        }
    }
}

#[test]
fn doubling_nodes_is_stable_for_smooth_data() {
    for name in corpus::SMOOTH {
        let f = corpus::sampler(name).unwrap();
        let a = coefficients(&f, 64, 1 << 10).unwrap();
        let b = coefficients(&f, 64, 1 << 11).unwrap();
        for k in 0..=64 {
            assert!((a.get(k) - b.get(k)).norm() < 1e-12, "{name} k={k}");
        }
    }
}

#[test]
fn coefficients_are_bounded_by_the_l1_norm() {
    for name in corpus::NAMES {
        let f = corpus::sampler(name).unwrap();
        let n = 1 << 12;
        let c = coefficients(&f, 256, n).unwrap();
        let l1: f64 = (0..n).map(|j| f.eval(-PI + 2.0 * PI * (j as f64 + 0.5) / n as f64).abs()).sum::<f64>() * 2.0 * PI
            / n as f64;
        let max = c.coeffs().iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(max <= l1 / PI * (1.0 + 1e-6), "{name}: {max} > {}", l1 / PI);
    }
}

#[test]
fn series_of_coefficients_recovers_the_corpus() {
    for name in ["cos", "square", "triangle", "exp_cos", "mixed", "inv_sin"] {
        let f = corpus::sampler(name).unwrap();
        let n = 1 << 14;
        let c = coefficients(&f, n / 4, n).unwrap();
        let w = InnerFunction::series_with_singularities(c, f.singular_points().to_vec());
        for j in 0..24 {
            let t = -PI + 2.0 * PI * (j as f64 + 0.5) / 24.0;
            if f.singular_points().iter().any(|s| s.distance(CirclePoint::new(t)) < 0.2) {
                continue;
            }
            let v = recover_real(&w, CirclePoint::new(t), &RadiusSchedule::default()).unwrap();
            assert!((v.value - f.eval(t)).abs() < 1e-4, "{name} at {t}: {} vs {}", v.value, f.eval(t));
        }
    }
}

/// Zero-average smooth functions with closed-form first primitives.
fn primitive_pairs() -> Vec<(&'static str, RealSampler, RealSampler)> {
    vec![
        ("cos", RealSampler::new(f64::cos), RealSampler::new(f64::sin)),
        (
            "mixed",
            corpus::sampler("mixed").unwrap(),
            RealSampler::new(|t: f64| t.sin() - (3.0 * t).cos() / 6.0),
        ),
        (
            "poisson_half - 1",
            corpus::sampler("poisson_half").unwrap().shifted(-1.0),
            RealSampler::new(|t: f64| 2.0 * (0.5 * t.sin()).atan2(1.0 - 0.5 * t.cos())),
        ),
        (
            "sin 2t cos t",
            RealSampler::new(|t: f64| (2.0 * t).sin() * t.cos()),
            RealSampler::new(|t: f64| -((3.0 * t).cos() / 3.0 + t.cos()) / 2.0),
        ),
        (
            "exp(cos t) sin t",
            RealSampler::new(|t: f64| t.cos().exp() * t.sin()),
            zero_average(&RealSampler::new(|t: f64| -t.cos().exp()), 1 << 10).unwrap(),
        ),
    ]
}

#[test]
fn extended_coefficients_of_primitives() {
    for (name, f, prim) in primitive_pairs() {
        let direct = coefficients(&f, 32, 1 << 10).unwrap();
        let ext = extended_coefficients(&PrimitiveStack::new(prim.clone(), 1), 32, 1 << 10).unwrap();
        let shifted = shift_coefficients(&coefficients(&prim, 32, 1 << 10).unwrap(), 1);
        for k in 1..=32 {
            assert!((ext.get(k) - direct.get(k)).norm() < 1e-8, "{name} k={k}");
            assert!((ext.get(k) - shifted.get(k)).norm() < 1e-8, "{name} k={k}");
        }
    }
}

#[test]
fn second_primitive_route() {
    // f = cos t + 0.5 sin 3t has second primitive -cos t - sin(3t)/18
    let prim2 = RealSampler::new(|t: f64| -t.cos() - (3.0 * t).sin() / 18.0);
    let ext = extended_coefficients(&PrimitiveStack::new(prim2.clone(), 2), 16, 256).unwrap();
    let direct = coefficients(&corpus::sampler("mixed").unwrap(), 16, 256).unwrap();
    let shifted = shift_coefficients(&coefficients(&prim2, 16, 256).unwrap(), 2);
    for k in 1..=16 {
        assert!((ext.get(k) - direct.get(k)).norm() < 1e-12);
        assert!((ext.get(k) - shifted.get(k)).norm() < 1e-12);
    }
}

#[test]
fn extended_coefficients_of_the_delta() {
    // The log-sine function is the primitive of the Fourier conjugate of the
    // delta; one step of the extended rule gives the delta's (0, 1/pi).
    let ext = extended_coefficients(&PrimitiveStack::new(corpus::sampler("logsine").unwrap(), 1), 16, 1 << 14).unwrap();
    let delta = make_series(inner_analytic::delta_coeffs(0, CirclePoint::new(0.0), 16).scaled(num_complex::Complex64::new(0.0, -1.0)));
    for k in 1..=16 {
        assert!((ext.alpha(k)).abs() < 1e-9);
        assert!((ext.beta(k) - 1.0 / PI).abs() < 1e-9);
        // the same numbers as the coefficients of -i w_delta
        assert!((ext.get(k) - delta.coefficients(16).get(k)).norm() < 1e-9);
    }
}

#[test]
fn zero_average_leaves_tiny_mean() {
    for name in corpus::NAMES {
        let f = zero_average(&corpus::sampler(name).unwrap(), 1 << 12).unwrap();
        assert!(coefficients(&f, 4, 1 << 12).unwrap().c0().norm() < 1e-12, "{name}");
    }
}
