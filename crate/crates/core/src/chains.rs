//! Logarithmic derivatives and primitives, and the chains they generate.
//!
//! On coefficients the logarithmic derivative `z dw/dz` is `c_k -> k c_k`
//! and the logarithmic primitive is `c_k -> c_k / k`. On the circle they act
//! as `-i d/dtheta` and its inverse, so `d/dtheta = i z d/dz`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::inner::{CoefficientSequence, InnerFunction};
use crate::point::{CirclePoint, DiskPoint};
use crate::singular::delta::{parity_as_combination, MAX_DELTA_ORDER};

/// Order used when a closed form has to be replaced by a cut series.
pub const FALLBACK_ORDER: usize = 1024;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Position in a chain: positive for derivatives, negative for primitives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainIndex(pub i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainClass {
    CInfinity,
    Singular,
}

fn as_series(w: &InnerFunction, order: usize) -> InnerFunction {
    InnerFunction::series_with_singularities(w.coefficients(order).truncated(), w.singular_angles())
}

/// `z dw/dz`. The constant term is dropped.
pub fn log_derivative(w: &InnerFunction) -> Result<InnerFunction> {
    Ok(match w {
        InnerFunction::Series { coeffs, singular } => InnerFunction::series_with_singularities(
            coeffs.map_indexed(Complex64::default(), |k, c| c * k as f64),
            singular.clone(),
        ),
        InnerFunction::DeltaForm { order, theta1 } => {
            if *order < MAX_DELTA_ORDER {
                InnerFunction::delta(order + 1, *theta1)?.scale(-I)
            } else {
                log_derivative(&as_series(w, FALLBACK_ORDER))?
            }
        }
        InnerFunction::DeltaParity { part, theta1 } => log_derivative(&parity_as_combination(*part, *theta1))?,
        InnerFunction::Scaled { factor, inner } => log_derivative(inner)?.scale(*factor),
        InnerFunction::Conjugate(inner) => log_derivative(inner)?.conjugate(),
        InnerFunction::Combination(terms) => InnerFunction::Combination(
            terms.iter().map(|(c, f)| Ok((*c, log_derivative(f)?))).collect::<Result<_>>()?,
        ),
    })
}

/// Primitive of a function whose constant term may be discarded.
fn primitive_dropping_constant(w: &InnerFunction) -> Result<InnerFunction> {
    Ok(match w {
        InnerFunction::Series { coeffs, singular } => InnerFunction::series_with_singularities(
            coeffs.map_indexed(Complex64::default(), |k, c| c / k as f64),
            singular.clone(),
        ),
        InnerFunction::DeltaForm { order, theta1 } => {
            if *order >= 1 {
                InnerFunction::delta(order - 1, *theta1)?.without_constant().scale(I)
            } else {
                primitive_dropping_constant(&as_series(w, FALLBACK_ORDER))?
            }
        }
        InnerFunction::DeltaParity { part, theta1 } => {
            primitive_dropping_constant(&parity_as_combination(*part, *theta1))?
        }
        InnerFunction::Scaled { factor, inner } => primitive_dropping_constant(inner)?.scale(*factor),
        InnerFunction::Conjugate(inner) => primitive_dropping_constant(inner)?.conjugate(),
        InnerFunction::Combination(terms) => InnerFunction::Combination(
            terms.iter().map(|(c, f)| Ok((*c, primitive_dropping_constant(f)?))).collect::<Result<_>>()?,
        ),
    })
}

/// `int_0^z w(z') / z' dz'`, defined when `w(0) = 0`.
///
/// The primitive of the delta function itself has no closed form here; it
/// is returned as a series cut at [`FALLBACK_ORDER`].
pub fn log_primitive(w: &InnerFunction) -> Result<InnerFunction> {
    let c0 = w.constant();
    if c0.norm() > 1e-14 {
        return Err(Error::NonZeroConstant { c0 });
    }
    primitive_dropping_constant(w)
}

/// `dw/dtheta = i z dw/dz`.
pub fn theta_derivative(w: &InnerFunction) -> Result<InnerFunction> {
    Ok(log_derivative(w)?.scale(I))
}

/// The inverse of [`theta_derivative`] on functions with `w(0) = 0`.
pub fn theta_primitive(w: &InnerFunction) -> Result<InnerFunction> {
    Ok(log_primitive(w)?.scale(-I))
}

/// `int_{theta0}^{theta} w(rho e^{i t}) dt = -i [W(z) - W(z0)]` with `W` the
/// logarithmic primitive.
pub fn theta_integral(w: &InnerFunction, theta0: CirclePoint, theta: CirclePoint, rho: f64) -> Result<Complex64> {
    let prim = log_primitive(w)?;
    let a = DiskPoint::new(rho, theta0.theta())?;
    let b = DiskPoint::new(rho, theta.theta())?;
    Ok(-I * (prim.eval(b) - prim.eval(a)))
}

/// The element `m` steps along the chain through `w`.
pub fn chain_element(w: &InnerFunction, m: ChainIndex) -> Result<InnerFunction> {
    let mut out = w.clone();
    for _ in 0..m.0.unsigned_abs() {
        out = if m.0 > 0 { theta_derivative(&out)? } else { theta_primitive(&out)? };
    }
    Ok(out)
}

/// Decides from the coefficient tail whether the chain through the sequence
/// holds smooth functions.
///
/// Coefficients below `1e-14` of the largest are treated as zero. The chain
/// is `CInfinity` when fewer than 8 of the last `K/2` coefficients are
/// non-zero, or when they decay faster than `k^-12` (twice the `k^-6`
/// threshold in log space). This is a heuristic on a finite sequence.
pub fn classify_chain(coeffs: &CoefficientSequence) -> Result<ChainClass> {
    let order = coeffs.order();
    if order < 64 {
        return Err(Error::InvalidArgument(format!("chain classification needs K >= 64, got {order}")));
    }
    let max = coeffs.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return Ok(ChainClass::CInfinity);
    }
    let floor = 1e-14 * max;
    let tail: Vec<(f64, f64)> = (order / 2 + 1..=order)
        .filter_map(|k| {
            let m = coeffs.get(k).norm();
            (m > floor).then(|| ((k as f64).ln(), m.ln()))
        })
        .collect();
    if tail.len() < 8 {
        return Ok(ChainClass::CInfinity);
    }
    let n = tail.len() as f64;
    let (mx, my) = (tail.iter().map(|p| p.0).sum::<f64>() / n, tail.iter().map(|p| p.1).sum::<f64>() / n);
    let sxy: f64 = tail.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = tail.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    Ok(if slope < -12.0 { ChainClass::CInfinity } else { ChainClass::Singular })
}
