//! Pairing delta derivatives with smooth test functions.
use inner_analytic::fourier::RealSampler;
use inner_analytic::inner::RadiusSchedule;
use inner_analytic::point::CirclePoint;
use inner_analytic::singular::{pair, GeneralizedFunction, TestFunction};

fn main() -> Result<(), inner_analytic::Error> {
    let g = TestFunction::Sampler(RealSampler::new(|t: f64| (2.0 * t).cos()));
    let t1 = std::f64::consts::PI / 3.0;
    for n in 0..3 {
        let d = GeneralizedFunction::delta(n, CirclePoint::new(t1))?;
        let v = pair(&g, &d, 1 << 16, &RadiusSchedule::default())?;
        println!("<delta^({n}), cos 2t> at pi/3 = {:+.9} (+/- {:.1e})", v.value, v.error);
    }
    Ok(())
}
