//! Fourier coefficients of functions on the circle.
//!
//! Integrals over `[-pi, pi)` use the periodic trapezoid rule on a uniform
//! grid, evaluated with an FFT. The grid is aligned with the first declared
//! singular point. A node that falls on a declared singular point is not
//! sampled; it receives an effective value from one-sided fits
//! `f ~ s ln|x| + r + r1 x` through the three neighbouring nodes on each
//! side, using the logarithmic end correction `s ln(h / 2 pi) + r`. This keeps
//! jump discontinuities at second order and removes the `h ln h` error of
//! logarithmic singularities.

use std::f64::consts::PI;
use std::fmt;
use std::io::Write;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::inner::CoefficientSequence;
use crate::io::fmt_sci;
use crate::point::{normalize_angle, CirclePoint};

/// A real function on the circle with a finite list of singular angles.
#[derive(Clone)]
pub struct RealSampler {
    func: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    singular: Vec<CirclePoint>,
    offset: f64,
    mean_removed: bool,
}

impl fmt::Debug for RealSampler {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RealSampler")
            .field("singular", &self.singular)
            .field("offset", &self.offset)
            .field("mean_removed", &self.mean_removed)
            .finish_non_exhaustive()
    }
}

impl RealSampler {
    /// Wraps `func`, which is called with angles normalized to `[-pi, pi)`.
    pub fn new(func: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        RealSampler { func: Arc::new(func), singular: Vec::new(), offset: 0.0, mean_removed: false }
    }

    pub fn with_singular_points(mut self, points: impl IntoIterator<Item = CirclePoint>) -> Self {
        self.singular.extend(points);
        self
    }

    pub fn singular_points(&self) -> &[CirclePoint] {
        &self.singular
    }

    pub fn mean_removed(&self) -> bool {
        self.mean_removed
    }

    pub fn eval(&self, theta: f64) -> f64 {
        (self.func)(normalize_angle(theta)) + self.offset
    }

    /// `f + c`.
    pub fn shifted(&self, c: f64) -> Self {
        RealSampler { offset: self.offset + c, ..self.clone() }
    }

    /// Pointwise product with a smooth function; keeps the singular angles.
    pub fn multiplied(&self, g: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        let base = self.clone();
        RealSampler::new(move |t| base.eval(t) * g(t)).with_singular_points(self.singular.iter().copied())
    }
}

/// The `n`-th zero-average primitive `f^{-n}` of a possibly non-integrable
/// function `f`.
#[derive(Debug, Clone)]
pub struct PrimitiveStack {
    pub base: RealSampler,
    pub order: u32,
}

impl PrimitiveStack {
    pub fn new(base: RealSampler, order: u32) -> Self {
        PrimitiveStack { base, order }
    }
}

/// Samples of a function on the periodic grid `theta_j = theta0 + j h`.
#[derive(Debug, Clone)]
pub(crate) struct GridSamples {
    pub theta0: f64,
    pub h: f64,
    pub values: Vec<f64>,
}

impl GridSamples {
    pub fn theta(&self, j: usize) -> f64 {
        self.theta0 + j as f64 * self.h
    }

    /// Trapezoid rule for `int f(theta) g(theta) dtheta` over the circle.
    pub fn integrate_with(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.values.iter().enumerate().map(|(j, v)| v * g(self.theta(j))).sum::<f64>() * self.h
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }
}

pub(crate) fn check_grid(n: usize) -> Result<()> {
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::InvalidArgument(format!("grid size N = {n} must be a power of two >= 8")));
    }
    Ok(())
}

/// Effective value for a grid node at a singular point, from the samples at
/// distances `h, 2h, 3h` on one side.
fn one_sided_node_value(y: [f64; 3]) -> f64 {
    let s = (y[2] - 2.0 * y[1] + y[0]) / (3.0f64 / 4.0).ln();
    let u = y[1] - y[0] - s * 2f64.ln();
    let r = y[0] - u;
    r - s * (2.0 * PI).ln()
}

pub(crate) fn sample_grid(f: &RealSampler, n: usize) -> Result<GridSamples> {
    check_grid(n)?;
    let h = 2.0 * PI / n as f64;
    let theta0 = f.singular.first().map_or(-PI, |s| s.theta());
    let on_node = |theta: f64| f.singular.iter().any(|s| s.distance(CirclePoint::new(theta)) < 1e-6 * h);
    let mut values = vec![0.0; n];
    let mut singular_nodes = Vec::new();
    for (j, v) in values.iter_mut().enumerate() {
        let theta = theta0 + j as f64 * h;
        if on_node(theta) {
            singular_nodes.push(j);
            continue;
        }
        let x = f.eval(theta);
        if !x.is_finite() {
            return Err(Error::NonFinite(format!("sampler value {x} at theta = {}", normalize_angle(theta))));
        }
        *v = x;
    }
    let is_singular = |j: usize| singular_nodes.contains(&j);
    let mut effective = Vec::with_capacity(singular_nodes.len());
    for &j in &singular_nodes {
        let mut sides = Vec::new();
        for dir in [1isize, -1] {
            let idx: Vec<usize> = (1..=3).map(|m| (j as isize + dir * m).rem_euclid(n as isize) as usize).collect();
            if idx.iter().any(|&i| is_singular(i)) {
                continue;
            }
            sides.push(one_sided_node_value([values[idx[0]], values[idx[1]], values[idx[2]]]));
        }
        let v = if sides.is_empty() { 0.0 } else { sides.iter().sum::<f64>() / sides.len() as f64 };
        effective.push((j, v));
    }
    for (j, v) in effective {
        values[j] = v;
    }
    Ok(GridSamples { theta0, h, values })
}

/// Standard coefficients `c_k = alpha_k - i beta_k`, `k = 1..=order`, and the
/// mean `c0`, by the trapezoid rule on `n` nodes.
///
/// `n` must be a power of two with `n >= 4 order`.
pub fn coefficients(f: &RealSampler, order: usize, n: usize) -> Result<CoefficientSequence> {
    check_grid(n)?;
    if n < 4 * order {
        return Err(Error::InvalidArgument(format!("grid size N = {n} must be at least 4K = {}", 4 * order)));
    }
    let grid = sample_grid(f, n)?;
    let mut buf: Vec<Complex64> = grid.values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let scale = 2.0 / n as f64;
    let c0 = Complex64::new(buf[0].re / n as f64, 0.0);
    let coeffs = (1..=order)
        .map(|k| buf[k] * scale * Complex64::from_polar(1.0, -(k as f64) * grid.theta0))
        .collect();
    Ok(CoefficientSequence::new(c0, coeffs)?.truncated())
}

/// `f` minus its trapezoid mean.
pub fn zero_average(f: &RealSampler, n: usize) -> Result<RealSampler> {
    let mean = sample_grid(f, n)?.mean();
    let mut out = f.shifted(-mean);
    out.mean_removed = true;
    Ok(out)
}

/// Coefficients of a function known through its `n`-th zero-average
/// primitive. With `a_k, b_k` the cosine and sine coefficients of the
/// primitive and `n = 2j` or `n = 2j + 1`:
///
/// ```text
/// n even:  alpha_k = (-1)^j k^n a_k,   beta_k = (-1)^j k^n b_k
/// n odd:   alpha_k = (-1)^j k^n b_k,   beta_k = (-1)^(j+1) k^n a_k
/// ```
///
/// Order zero is the plain [`coefficients`] of the base.
pub fn extended_coefficients(stack: &PrimitiveStack, order: usize, n: usize) -> Result<CoefficientSequence> {
    let prim = coefficients(&stack.base, order, n)?;
    if stack.order == 0 {
        return Ok(prim);
    }
    let p = stack.order;
    let j = p / 2;
    let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    let alpha_beta = |k: usize| -> (f64, f64) {
        let (a, b) = (prim.alpha(k), prim.beta(k));
        let kp = (k as f64).powi(p as i32);
        if p.is_multiple_of(2) {
            (sign * kp * a, sign * kp * b)
        } else {
            (sign * kp * b, -sign * kp * a)
        }
    };
    Ok(prim.map_indexed(Complex64::default(), |k, _| {
        let (a, b) = alpha_beta(k);
        Complex64::new(a, -b)
    }))
}

/// Coefficients of the `n`-th derivative from those of the primitive, by
/// applying `(alpha_k, beta_k) -> (k beta_k, -k alpha_k)` `n` times.
pub fn shift_coefficients(prim: &CoefficientSequence, n: u32) -> CoefficientSequence {
    let mut seq = prim.clone().with_c0(Complex64::default());
    for _ in 0..n {
        seq = seq.map_indexed(Complex64::default(), |k, c| {
            let (a, b) = (c.re, -c.im);
            let k = k as f64;
            Complex64::new(k * b, k * a)
        });
    }
    seq
}

/// Writes `k,alpha,beta` rows (header included) for `k = 1..=K`.
pub fn write_coefficients_csv(seq: &CoefficientSequence, mut out: impl Write) -> Result<()> {
    writeln!(out, "k,alpha,beta")?;
    for k in 1..=seq.order() {
        writeln!(out, "{},{},{}", k, fmt_sci(seq.alpha(k)), fmt_sci(seq.beta(k)))?;
    }
    Ok(())
}
