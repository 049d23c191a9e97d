//! Pairings `int g(theta) f(theta) dtheta` of smooth test functions with
//! generalized functions made of a regular part and finitely many delta
//! derivatives.
//!
//! Delta terms are integrated at radii `rho < 1` against the real part of
//! their closed form and the result is extrapolated to `rho = 1`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::{check_grid, sample_grid, RealSampler};
use crate::inner::{recover_real, richardson, InnerFunction, Limit, RadiusSchedule};
use crate::point::CirclePoint;

/// `weight * delta^(n)(theta - theta1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaTerm {
    pub n: u32,
    pub theta1: CirclePoint,
    pub weight: f64,
}

impl DeltaTerm {
    pub fn new(n: u32, theta1: CirclePoint, weight: f64) -> Self {
        DeltaTerm { n, theta1, weight }
    }

    /// `weight * w_n` as an inner function.
    pub fn to_inner(&self) -> Result<InnerFunction> {
        Ok(self.weight * InnerFunction::delta(self.n, self.theta1)?)
    }
}

/// A regular function plus a finite sum of delta derivatives.
#[derive(Debug, Clone, Default)]
pub struct GeneralizedFunction {
    regular: Option<RealSampler>,
    deltas: Vec<DeltaTerm>,
}

/// Sums the weights of terms with equal order and center; drops zero weights.
pub(crate) fn merge_deltas(terms: &[DeltaTerm]) -> Vec<DeltaTerm> {
    let mut out: Vec<DeltaTerm> = Vec::new();
    for t in terms {
        match out.iter_mut().find(|o| o.n == t.n && o.theta1.distance(t.theta1) < 1e-14) {
            Some(o) => o.weight += t.weight,
            None => out.push(*t),
        }
    }
    out.retain(|t| t.weight != 0.0);
    out
}

impl GeneralizedFunction {
    pub fn new(regular: Option<RealSampler>, deltas: Vec<DeltaTerm>) -> Result<Self> {
        for d in &deltas {
            crate::singular::delta::check_order(d.n)?;
            if !d.weight.is_finite() {
                return Err(Error::NonFinite(format!("delta weight {}", d.weight)));
            }
        }
        Ok(GeneralizedFunction { regular, deltas: merge_deltas(&deltas) })
    }

    /// `delta^(n)(theta - theta1)`.
    pub fn delta(n: u32, theta1: CirclePoint) -> Result<Self> {
        Self::new(None, vec![DeltaTerm::new(n, theta1, 1.0)])
    }

    pub fn regular(&self) -> Option<&RealSampler> {
        self.regular.as_ref()
    }

    pub fn deltas(&self) -> &[DeltaTerm] {
        &self.deltas
    }

    /// The delta part as a combination of closed forms.
    pub fn delta_part(&self) -> Result<InnerFunction> {
        let terms = self.deltas.iter().map(|d| Ok((d.weight, InnerFunction::delta(d.n, d.theta1)?))).collect::<Result<_>>()?;
        crate::inner::combine(terms)
    }
}

/// A smooth function paired against a generalized function.
#[derive(Debug, Clone)]
pub enum TestFunction {
    Sampler(RealSampler),
    /// Evaluated on the circle through [`recover_real`].
    Inner(InnerFunction),
}

impl TestFunction {
    fn sampler(&self) -> RealSampler {
        match self {
            TestFunction::Sampler(s) => s.clone(),
            TestFunction::Inner(w) => {
                let w = w.clone();
                RealSampler::new(move |t| {
                    recover_real(&w, CirclePoint::new(t), &RadiusSchedule::default()).map_or(f64::NAN, |l| l.value)
                })
            }
        }
    }
}

/// Largest radius at which a grid of `n_nodes` resolves a delta peak of
/// width `1 - rho` with 32 cells.
pub fn pairing_radius_cap(n_nodes: usize) -> f64 {
    1.0 - 32.0 * 2.0 * PI / n_nodes as f64
}

/// `int g f dtheta` over the circle.
///
/// The regular part of `target` is integrated directly on `n_nodes` points.
/// For the delta part the integral of `g Re w(rho e^{i theta})` is computed
/// at every schedule radius up to [`pairing_radius_cap`] and extrapolated to
/// `rho = 1`. The reported error is the extrapolation increment.
pub fn pair(g: &TestFunction, target: &GeneralizedFunction, n_nodes: usize, schedule: &RadiusSchedule) -> Result<Limit> {
    check_grid(n_nodes)?;
    let gs = g.sampler();
    let mut regular = 0.0;
    if let Some(reg) = &target.regular {
        let (r, gg) = (reg.clone(), gs.clone());
        let product = RealSampler::new(move |t| r.eval(t) * gg.eval(t)).with_singular_points(reg.singular_points().iter().copied());
        regular = 2.0 * PI * sample_grid(&product, n_nodes)?.mean();
    }
    if target.deltas.is_empty() {
        return Ok(Limit { value: regular, error: 0.0 });
    }
    let w = target.delta_part()?;
    let grid = sample_grid(&gs, n_nodes)?;
    let radii = schedule.clipped(pairing_radius_cap(n_nodes)).radii();
    if radii.len() < 3 {
        return Err(Error::InvalidArgument(format!(
            "grid of {n_nodes} nodes leaves {} schedule radii for the pairing",
            radii.len()
        )));
    }
    let units: Vec<Complex64> = (0..n_nodes).map(|j| Complex64::from_polar(1.0, grid.theta(j))).collect();
    let values: Vec<f64> = radii
        .iter()
        .map(|&rho| grid.h * grid.values.iter().zip(&units).map(|(gv, u)| gv * w.eval_z(u * rho).re).sum::<f64>())
        .collect();
    let lim = richardson(&values)?;
    Ok(Limit { value: lim.value + regular, error: lim.error })
}
