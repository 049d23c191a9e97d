//! Radial limits `rho -> 1` by Richardson extrapolation.

use num_complex::Complex64;

use super::function::InnerFunction;
use crate::error::{Error, Result};
use crate::point::{CirclePoint, DiskPoint};

/// Refusal radius around singular angles for boundary recovery.
pub const EXCLUSION_WINDOW: f64 = 1e-3;

/// Truncation tolerance used to clip the schedule for cut series.
pub const TRUNCATION_TOLERANCE: f64 = 1e-12;

/// Radii `rho_j = 1 - 2^-j` for `j = j_min..=j_max`, optionally capped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusSchedule {
    pub j_min: u32,
    pub j_max: u32,
    /// Radii above this are dropped.
    pub rho_cap: f64,
}

impl Default for RadiusSchedule {
    fn default() -> Self {
        RadiusSchedule { j_min: 4, j_max: 24, rho_cap: 1.0 }
    }
}

impl RadiusSchedule {
    pub fn new(j_min: u32, j_max: u32) -> Result<Self> {
        if j_min == 0 || j_max < j_min + 1 || j_max > 50 {
            return Err(Error::InvalidArgument(format!("bad radius schedule j = {j_min}..={j_max}")));
        }
        Ok(RadiusSchedule { j_min, j_max, rho_cap: 1.0 })
    }

    /// The same schedule with radii above `rho_max` removed.
    pub fn clipped(self, rho_max: f64) -> Self {
        RadiusSchedule { rho_cap: self.rho_cap.min(rho_max), ..self }
    }

    /// Step sizes `h_j = 1 - rho_j`, largest first.
    pub fn steps(&self) -> Vec<f64> {
        (self.j_min..=self.j_max)
            .map(|j| 0.5f64.powi(j as i32))
            .filter(|h| 1.0 - h <= self.rho_cap)
            .collect()
    }

    pub fn radii(&self) -> Vec<f64> {
        self.steps().into_iter().map(|h| 1.0 - h).collect()
    }

    /// Radii of the unclipped schedule.
    pub fn all_radii(&self) -> Vec<f64> {
        RadiusSchedule { rho_cap: 1.0, ..*self }.radii()
    }
}

/// A limit value and the extrapolation increment used as its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Limit {
    pub value: f64,
    pub error: f64,
}

/// Extrapolates `values[i]`, sampled at steps `h_i = h_0 2^-i`, to `h = 0`.
///
/// Builds the Richardson table and returns the entry of its last row whose
/// increment over the previous order is smallest. Reports
/// [`Error::NonConvergence`] when the samples themselves stop settling or
/// when no increment improves on the first one.
pub fn richardson(values: &[f64]) -> Result<Limit> {
    if values.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "radial extrapolation needs at least 2 schedule points, got {}",
            values.len()
        )));
    }
    if let Some(v) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFinite(format!("radial sample {v}")));
    }
    let raw: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let raw_scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if raw.len() >= 2 && raw[raw.len() - 1] >= raw[0] && raw[raw.len() - 1] > 1e-10 * raw_scale {
        return Err(Error::NonConvergence { increments: raw });
    }
    let mut row: Vec<f64> = values.to_vec();
    let mut last_row_estimates = vec![*values.last().unwrap()];
    let mut factor = 1.0;
    for _ in 1..values.len() {
        factor *= 2.0;
        row = row.windows(2).map(|w| w[1] + (w[1] - w[0]) / (factor - 1.0)).collect();
        last_row_estimates.push(*row.last().unwrap());
    }
    let increments: Vec<f64> = last_row_estimates.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let (best, &err) = increments
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("at least one increment");
    let value = last_row_estimates[best + 1];
    let scale = value.abs().max(1.0);
    let stalled = increments.len() >= 2 && increments[1..].iter().all(|&d| d >= increments[0]);
    if (stalled || increments.len() < 2) && err > 1e-6 * scale {
        return Err(Error::NonConvergence { increments });
    }
    if err > 1e-2 * scale {
        return Err(Error::NonConvergence { increments });
    }
    Ok(Limit { value, error: err })
}

fn check_window(w: &InnerFunction, theta: CirclePoint) -> Result<()> {
    for s in w.singular_angles() {
        if theta.distance(s) < EXCLUSION_WINDOW {
            return Err(Error::NearSingularity { theta: theta.theta(), singular: s.theta(), window: EXCLUSION_WINDOW });
        }
    }
    Ok(())
}

fn radial_limit(
    w: &InnerFunction,
    theta: CirclePoint,
    schedule: &RadiusSchedule,
    part: impl Fn(Complex64) -> f64,
) -> Result<Limit> {
    check_window(w, theta)?;
    let rho_max = w.max_reliable_radius(TRUNCATION_TOLERANCE, &schedule.all_radii());
    let radii = schedule.clipped(rho_max).radii();
    if radii.len() < 3 {
        return Err(Error::InvalidArgument(format!(
            "truncation leaves {} usable schedule radii (rho <= {rho_max:.6}); raise the series order",
            radii.len()
        )));
    }
    let values: Vec<f64> =
        radii.iter().map(|&r| DiskPoint::new(r, theta.theta()).map(|p| part(w.eval(p)))).collect::<Result<_>>()?;
    richardson(&values)
}

/// The boundary function `f(theta) = lim Re w(rho e^{i theta})`.
///
/// Truncated series are only sampled at radii where their tail bound is
/// below [`TRUNCATION_TOLERANCE`].
pub fn recover_real(w: &InnerFunction, theta: CirclePoint, schedule: &RadiusSchedule) -> Result<Limit> {
    radial_limit(w, theta, schedule, |v| v.re)
}

/// The Fourier conjugate `lim Im w(rho e^{i theta})`.
pub fn fourier_conjugate(w: &InnerFunction, theta: CirclePoint, schedule: &RadiusSchedule) -> Result<Limit> {
    radial_limit(w, theta, schedule, |v| v.im)
}
