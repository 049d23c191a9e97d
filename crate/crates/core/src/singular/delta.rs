//! Closed forms for the delta function and its derivatives.
//!
//! The delta function at `theta1` is the boundary real part of
//! `w(z) = 1/(2 pi) - (1/pi) z / (z - z1)`, `z1 = exp(i theta1)`. Its `n`-th
//! derivative corresponds to
//!
//! ```text
//! w_n(chi) = -(1 / (pi i^n)) chi P_{n-1}(chi) / (chi - 1)^{n+1},   chi = z / z1,
//! ```
//!
//! whose Taylor coefficients in `chi` are `i^n k^n / pi`. The factor `i^n`
//! makes the real part on the circle the `n`-th theta-derivative of the delta.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::eulerian::{delta_polynomial, eulerian_table, EulerianTable};
use crate::error::{Error, Result};
use crate::inner::{CoefficientSequence, InnerFunction};
use crate::point::{CirclePoint, DiskPoint};

/// Highest derivative order with a built-in closed form.
pub const MAX_DELTA_ORDER: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

fn table() -> &'static EulerianTable {
    static TABLE: OnceLock<EulerianTable> = OnceLock::new();
    TABLE.get_or_init(|| eulerian_table(MAX_DELTA_ORDER as usize - 1).expect("rows below 34 fit in u128"))
}

pub(crate) fn check_order(n: u32) -> Result<()> {
    if n > MAX_DELTA_ORDER {
        Err(Error::OrderOutOfRange { n: n as usize, max: MAX_DELTA_ORDER as usize })
    } else {
        Ok(())
    }
}

/// `i^n`, exactly.
pub(crate) fn i_pow(n: u32) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn rational_form(n: u32, theta1: CirclePoint, z: Complex64, table: &EulerianTable) -> Result<Complex64> {
    let z1 = theta1.unit();
    if n == 0 {
        return Ok(Complex64::new(1.0 / (2.0 * PI), 0.0) - z / (z - z1) / PI);
    }
    let p = delta_polynomial(n as usize - 1, table)?;
    let chi = z * z1.conj();
    let prefactor = -i_pow(n).inv() / PI;
    Ok(prefactor * chi * p.eval(chi) / (chi - 1.0).powu(n + 1))
}

pub(crate) fn delta_form_value(n: u32, theta1: CirclePoint, z: Complex64) -> Complex64 {
    rational_form(n, theta1, z, table()).expect("order checked at construction")
}

/// The inner function of the `n`-th delta derivative at `theta1`, evaluated
/// at `p` with the polynomial taken from `table`.
pub fn w_delta_n(n: u32, theta1: CirclePoint, p: DiskPoint, table: &EulerianTable) -> Result<Complex64> {
    rational_form(n, theta1, p.z(), table)
}

/// Taylor coefficients `c_k = i^n (k^n / pi) exp(-i k theta1)`, `k <= order`,
/// with `c0 = 1/(2 pi)` for `n = 0`.
pub fn delta_coeffs(n: u32, theta1: CirclePoint, order: usize) -> CoefficientSequence {
    let phase = i_pow(n);
    let t = theta1.theta();
    let c0 = if n == 0 { Complex64::new(1.0 / (2.0 * PI), 0.0) } else { Complex64::default() };
    CoefficientSequence::from_rule(order, c0, |k| {
        let kf = k as f64;
        phase * Complex64::from_polar(kf.powi(n as i32) / PI, -kf * t)
    })
    .expect("delta coefficients are finite")
}

pub(crate) fn parity_value(part: Parity, theta1: CirclePoint, z: Complex64) -> Complex64 {
    let z1 = theta1.unit();
    let z1c = z1.conj();
    let denom = (z - z1) * (z - z1c);
    match part {
        Parity::Even => Complex64::new(1.0 / (2.0 * PI), 0.0) - z / (2.0 * PI) * (2.0 * z - (z1 + z1c)) / denom,
        Parity::Odd => -z / (2.0 * PI) * (z1 - z1c) / denom,
    }
}

/// The parity part written as half the sum or difference of the delta at
/// `theta1` and its reflection at `-theta1`.
pub(crate) fn parity_as_combination(part: Parity, theta1: CirclePoint) -> InnerFunction {
    let sign = match part {
        Parity::Even => 1.0,
        Parity::Odd => -1.0,
    };
    InnerFunction::Combination(vec![
        (0.5, InnerFunction::DeltaForm { order: 0, theta1 }),
        (0.5 * sign, InnerFunction::DeltaForm { order: 0, theta1: theta1.reflected() }),
    ])
}

/// Inner functions of the even and odd parts of the delta function at
/// `theta1`, with poles at `z1` and `conj(z1)`.
pub fn delta_parity_parts(theta1: CirclePoint) -> (InnerFunction, InnerFunction) {
    (
        InnerFunction::DeltaParity { part: Parity::Even, theta1 },
        InnerFunction::DeltaParity { part: Parity::Odd, theta1 },
    )
}

/// The Fourier conjugate of the delta function,
/// `(1/pi) (1 + cos d) / (2 sin d)` with `d = theta - theta1`.
///
/// Written as `cot(d/2) / (2 pi)`, so `d = pi` gives zero. Only `d = 0` is
/// singular.
pub fn fc_delta(theta: CirclePoint, theta1: CirclePoint) -> Result<f64> {
    let half = crate::point::normalize_angle(theta.theta() - theta1.theta()) / 2.0;
    if half.sin().abs() < 1e-12 {
        return Err(Error::NearSingularity { theta: theta.theta(), singular: theta1.theta(), window: 1e-12 });
    }
    Ok(half.cos() / half.sin() / (2.0 * PI))
}
