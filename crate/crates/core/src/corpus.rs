//! Named boundary functions used by the CLI, the examples and the tests.

use std::f64::consts::PI;

use crate::fourier::RealSampler;
use crate::point::CirclePoint;

/// Every name accepted by [`sampler`].
pub const NAMES: &[&str] = &["cos", "square", "triangle", "logsine", "exp_cos", "poisson_half", "mixed", "inv_sin", "exp_sin2"];

/// Names of the smooth members.
pub const SMOOTH: &[&str] = &["cos", "exp_cos", "poisson_half", "mixed", "inv_sin", "exp_sin2"];

fn jumps() -> [CirclePoint; 2] {
    [CirclePoint::new(0.0), CirclePoint::new(-PI)]
}

/// The named function on `[-pi, pi)`:
///
/// | name | `f(t)` | singular angles |
/// |---|---|---|
/// | `cos` | `cos t` | |
/// | `square` | `sign t` | `0, -pi` |
/// | `triangle` | `abs(t)` | `0, -pi` |
/// | `logsine` | `ln(2 abs(sin(t/2))) / pi` | `0` |
/// | `exp_cos` | `exp(cos t)` | |
/// | `poisson_half` | `0.75 / (1.25 - cos t)` | |
/// | `mixed` | `cos t + 0.5 sin 3t` | |
/// | `inv_sin` | `1 / (2 + sin t)` | |
/// | `exp_sin2` | `exp(sin 2t)` | |
pub fn sampler(name: &str) -> Option<RealSampler> {
    Some(match name {
        "cos" => RealSampler::new(f64::cos),
        "square" => RealSampler::new(|t: f64| if t == 0.0 { 0.0 } else { t.signum() }).with_singular_points(jumps()),
        "triangle" => RealSampler::new(f64::abs).with_singular_points(jumps()),
        "logsine" => RealSampler::new(|t: f64| (2.0 * (t / 2.0).sin().abs()).ln() / PI)
            .with_singular_points([CirclePoint::new(0.0)]),
        "exp_cos" => RealSampler::new(|t: f64| t.cos().exp()),
        "poisson_half" => RealSampler::new(|t: f64| 0.75 / (1.25 - t.cos())),
        "mixed" => RealSampler::new(|t: f64| t.cos() + 0.5 * (3.0 * t).sin()),
        "inv_sin" => RealSampler::new(|t: f64| 1.0 / (2.0 + t.sin())),
        "exp_sin2" => RealSampler::new(|t: f64| (2.0 * t).sin().exp()),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_names_resolve() {
        for n in NAMES {
            let s = sampler(n).unwrap();
            assert!(s.eval(0.4).is_finite());
        }
        assert!(SMOOTH.iter().all(|n| NAMES.contains(n)));
        assert!(sampler("nope").is_none());
    }
}
