//! Coefficients of boundary samplers, smooth and with jumps.
use inner_analytic::corpus;
use inner_analytic::fourier::{coefficients, extended_coefficients, PrimitiveStack};

fn main() -> Result<(), inner_analytic::Error> {
    for name in ["exp_cos", "square", "triangle"] {
        let c = coefficients(&corpus::sampler(name).unwrap(), 6, 1 << 12)?;
        println!("{name}: mean {:.6}", c.c0().re);
        for k in 1..=6 {
            println!("  k={k} alpha={:+.8} beta={:+.8}", c.alpha(k), c.beta(k));
        }
    }
    // the log-sine function only has an integrable singularity; one step of the
    // extended rule recovers the coefficients of its derivative
    let ext = extended_coefficients(&PrimitiveStack::new(corpus::sampler("logsine").unwrap(), 1), 4, 1 << 14)?;
    for k in 1..=4 {
        println!("extended k={k}: alpha={:+.3e} beta={:.9}", ext.alpha(k), ext.beta(k));
    }
    Ok(())
}
