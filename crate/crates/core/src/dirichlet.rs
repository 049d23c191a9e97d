//! Dirichlet problem on the unit disk.
//!
//! The solution is the real part of the inner function whose coefficients
//! come from the boundary data, plus the boundary mean. A Poisson-kernel
//! quadrature serves as an independent check.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::{coefficients, extended_coefficients, sample_grid, PrimitiveStack, RealSampler};
use crate::inner::InnerFunction;
use crate::point::DiskPoint;
use crate::singular::pairing::{merge_deltas, DeltaTerm};

/// Boundary data: an integrable part, a part known through a primitive, and
/// delta terms with explicit weights, plus an additive constant.
#[derive(Debug, Clone, Default)]
pub struct BoundaryCondition {
    pub regular: Option<RealSampler>,
    pub deltas: Vec<DeltaTerm>,
    pub extended: Option<PrimitiveStack>,
    pub mean: f64,
}

impl BoundaryCondition {
    pub fn regular(f: RealSampler) -> Self {
        BoundaryCondition { regular: Some(f), ..Default::default() }
    }
}

/// A harmonic function `mean + Re w` on the disk.
#[derive(Debug, Clone)]
pub struct HarmonicField {
    pub w: InnerFunction,
    pub mean: f64,
}

impl HarmonicField {
    pub fn value(&self, p: DiskPoint) -> f64 {
        if p.rho() > 0.95 {
            let bound = self.w.truncation_bound(p.rho());
            if bound > 1e-8 {
                log::warn!("field at rho = {} carries truncation error up to {bound:.3e}", p.rho());
            }
        }
        self.mean + self.w.eval(p).re
    }
}

/// Builds the field from the coefficients of every part of `bc`.
///
/// `order` coefficients are taken from quadrature on `n` nodes. Constant
/// terms, including the `1/(2 pi)` of each delta, go into `mean`, so the
/// inner function vanishes at the origin.
pub fn solve(bc: &BoundaryCondition, order: usize, n: usize) -> Result<HarmonicField> {
    let mut mean = bc.mean;
    let mut terms: Vec<(f64, InnerFunction)> = Vec::new();
    if let Some(f) = &bc.regular {
        let c = coefficients(f, order, n)?;
        mean += c.c0().re;
        terms.push((1.0, InnerFunction::series_with_singularities(c.with_c0(Complex64::default()), f.singular_points().to_vec())));
    }
    if let Some(stack) = &bc.extended {
        let c = extended_coefficients(stack, order, n)?;
        mean += c.c0().re;
        let singular = stack.base.singular_points().to_vec();
        terms.push((1.0, InnerFunction::series_with_singularities(c.with_c0(Complex64::default()), singular)));
    }
    for d in merge_deltas(&bc.deltas) {
        let w = InnerFunction::delta(d.n, d.theta1)?;
        mean += d.weight * w.constant().re;
        terms.push((d.weight, w.without_constant()));
    }
    if !mean.is_finite() {
        return Err(Error::NonFinite(format!("boundary mean {mean}")));
    }
    Ok(HarmonicField { w: crate::inner::combine(terms)?, mean })
}

/// Trapezoid evaluation of the Poisson integral
/// `(1/2 pi) int f(t) (1 - rho^2) / (1 - 2 rho cos(theta - t) + rho^2) dt`.
pub fn poisson_integral(f: &RealSampler, p: DiskPoint, n: usize) -> Result<f64> {
    if p.rho() > 0.95 {
        return Err(Error::InvalidArgument(format!("Poisson quadrature needs rho <= 0.95, got {}", p.rho())));
    }
    let (rho, theta) = (p.rho(), p.theta());
    let grid = sample_grid(f, n)?;
    let kernel = |t: f64| (1.0 - rho * rho) / (1.0 - 2.0 * rho * (theta - t).cos() + rho * rho);
    Ok(grid.integrate_with(kernel) / (2.0 * PI))
}

/// The harmonic conjugate by two routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conjugate {
    /// `Im w(z)`.
    pub series: f64,
    /// `int_0^z (f_x dy - f_y dx)` along the segment from the origin.
    pub line_integral: f64,
}

const LINE_STEPS: usize = 4096;
const GRADIENT_STEP: f64 = 1e-5;

pub fn harmonic_conjugate(field: &HarmonicField, p: DiskPoint) -> Result<Conjugate> {
    let series = field.w.eval(p).im;
    let z = p.z();
    let value = |x: f64, y: f64| field.mean + field.w.eval_z(Complex64::new(x, y)).re;
    let integrand = |s: f64| {
        let (x, y) = (s * z.re, s * z.im);
        let h = GRADIENT_STEP;
        let fx = (value(x + h, y) - value(x - h, y)) / (2.0 * h);
        let fy = (value(x, y + h) - value(x, y - h)) / (2.0 * h);
        fx * z.im - fy * z.re
    };
    if p.rho() + GRADIENT_STEP >= 1.0 {
        return Err(Error::OutsideDisk { rho: p.rho() + GRADIENT_STEP });
    }
    let ds = 1.0 / LINE_STEPS as f64;
    let mut sum = integrand(0.0) + integrand(1.0);
    for j in 1..LINE_STEPS {
        sum += if j % 2 == 1 { 4.0 } else { 2.0 } * integrand(j as f64 * ds);
    }
    Ok(Conjugate { series, line_integral: sum * ds / 3.0 })
}

/// A real function of polar coordinates.
pub trait PolarField {
    fn value_at(&self, rho: f64, theta: f64) -> f64;
}

impl PolarField for HarmonicField {
    fn value_at(&self, rho: f64, theta: f64) -> f64 {
        self.mean + self.w.eval_z(Complex64::from_polar(rho, theta)).re
    }
}

impl<F: Fn(f64, f64) -> f64> PolarField for F {
    fn value_at(&self, rho: f64, theta: f64) -> f64 {
        self(rho, theta)
    }
}

/// Polar grid `rho_i = rho_max i / n_rho` (`i = 1..=n_rho`),
/// `theta_j = -pi + 2 pi j / n_theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceGrid {
    pub rho_max: f64,
    pub n_rho: usize,
    pub n_theta: usize,
}

const LAPLACE_STEP: f64 = 1e-3;

/// Five-point fourth-order first and second derivatives.
fn derivatives(f: impl Fn(f64) -> f64, x: f64, h: f64) -> (f64, f64) {
    let (m2, m1, c, p1, p2) = (f(x - 2.0 * h), f(x - h), f(x), f(x + h), f(x + 2.0 * h));
    let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    let d2 = (-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h);
    (d1, d2)
}

/// Largest `|f_rr + f_r / rho + f_tt / rho^2|` over the grid, with
/// fourth-order differences of step `1e-3`. Grid radii below `2e-3` are
/// skipped.
pub fn laplace_residual(field: &impl PolarField, grid: LaplaceGrid) -> Result<f64> {
    if !(grid.rho_max > 0.0 && grid.rho_max <= 0.9) || grid.n_rho == 0 || grid.n_theta == 0 {
        return Err(Error::InvalidArgument(format!("bad Laplace grid {grid:?}; need 0 < rho_max <= 0.9")));
    }
    let h = LAPLACE_STEP;
    let mut worst = 0.0f64;
    for i in 1..=grid.n_rho {
        let rho = grid.rho_max * i as f64 / grid.n_rho as f64;
        if rho <= 2.0 * h {
            continue;
        }
        for j in 0..grid.n_theta {
            let theta = -PI + 2.0 * PI * j as f64 / grid.n_theta as f64;
            let (fr, frr) = derivatives(|r| field.value_at(r, theta), rho, h);
            let (_, ftt) = derivatives(|t| field.value_at(rho, t), theta, h);
            let lap = frr + fr / rho + ftt / (rho * rho);
            worst = worst.max(lap.abs());
        }
    }
    Ok(worst)
}
