//! Taylor-Fourier coefficient sequences.
//!
//! A sequence holds the constant term `c0` and the coefficients `c_k`,
//! `k = 1..=K`, of the power series `w(z) = c0 + sum c_k z^k`. Each `c_k`
//! splits as `c_k = alpha_k - i beta_k`, where `alpha_k` and `beta_k` are the
//! cosine and sine Fourier coefficients of the boundary function.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether a finite list is the whole sequence or a truncation of an
/// infinite one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tail {
    /// Every coefficient beyond `K` is zero.
    Exact,
    /// The list was cut at `K`; later coefficients are unknown but assumed to
    /// follow the trend of the last ones.
    Truncated,
}

/// Outcome of the growth check on a coefficient sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    /// `|c_k| / k^p -> 0` for the contained `p`.
    Admissible(u32),
    /// The tail grows faster than any fitted power.
    NotAdmissible,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequence {
    c0: Complex64,
    coeffs: Vec<Complex64>,
    tail: Tail,
}

fn check_finite(c: Complex64, what: impl FnOnce() -> String) -> Result<()> {
    if c.re.is_finite() && c.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what()))
    }
}

impl CoefficientSequence {
    /// Builds an exact (finite) sequence; `coeffs[0]` is `c_1`.
    pub fn new(c0: Complex64, coeffs: Vec<Complex64>) -> Result<Self> {
        check_finite(c0, || "constant term c0".into())?;
        for (i, c) in coeffs.iter().enumerate() {
            check_finite(*c, || format!("coefficient c_{}", i + 1))?;
        }
        Ok(CoefficientSequence { c0, coeffs, tail: Tail::Exact })
    }

    /// Samples a closed-form rule `k -> c_k` for `k = 1..=order`. The result
    /// is marked as truncated.
    pub fn from_rule(order: usize, c0: Complex64, rule: impl Fn(usize) -> Complex64) -> Result<Self> {
        let coeffs = (1..=order).map(rule).collect();
        Ok(CoefficientSequence::new(c0, coeffs)?.truncated())
    }

    /// Builds `c_k = alpha_k - i beta_k`.
    pub fn from_alpha_beta(c0: f64, alpha: &[f64], beta: &[f64]) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::InvalidArgument(format!(
                "alpha and beta lengths differ ({} vs {})",
                alpha.len(),
                beta.len()
            )));
        }
        let coeffs = alpha.iter().zip(beta).map(|(&a, &b)| Complex64::new(a, -b)).collect();
        CoefficientSequence::new(Complex64::new(c0, 0.0), coeffs)
    }

    pub fn zero(order: usize) -> Self {
        CoefficientSequence { c0: Complex64::new(0.0, 0.0), coeffs: vec![Complex64::new(0.0, 0.0); order], tail: Tail::Exact }
    }

    /// Only a constant term.
    pub fn constant(c0: Complex64) -> Self {
        CoefficientSequence { c0, coeffs: Vec::new(), tail: Tail::Exact }
    }

    /// Marks the sequence as a truncation of an infinite one.
    pub fn truncated(mut self) -> Self {
        self.tail = Tail::Truncated;
        self
    }

    pub fn with_tail(mut self, tail: Tail) -> Self {
        self.tail = tail;
        self
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    /// Truncation order `K`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn c0(&self) -> Complex64 {
        self.c0
    }

    pub fn with_c0(mut self, c0: Complex64) -> Self {
        self.c0 = c0;
        self
    }

    /// `c_1 ..= c_K`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `c_k`, with `c_0` the constant term and zero beyond `K`.
    pub fn get(&self, k: usize) -> Complex64 {
        match k {
            0 => self.c0,
            _ => self.coeffs.get(k - 1).copied().unwrap_or_default(),
        }
    }

    pub fn alpha(&self, k: usize) -> f64 {
        self.get(k).re
    }

    pub fn beta(&self, k: usize) -> f64 {
        -self.get(k).im
    }

    /// Applies `f(k, c_k)` to every `k >= 1`; the constant term is replaced.
    pub fn map_indexed(&self, c0: Complex64, f: impl Fn(usize, Complex64) -> Complex64) -> Self {
        CoefficientSequence {
            c0,
            coeffs: self.coeffs.iter().enumerate().map(|(i, &c)| f(i + 1, c)).collect(),
            tail: self.tail,
        }
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        self.map_indexed(self.c0 * factor, |_, c| c * factor)
    }

    pub fn conj(&self) -> Self {
        self.map_indexed(self.c0.conj(), |_, c| c.conj())
    }

    /// Resizes to `order` coefficients, padding with zeros.
    pub fn resized(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order, Complex64::default());
        let tail = if order < self.order() { Tail::Truncated } else { self.tail };
        CoefficientSequence { c0: self.c0, coeffs, tail }
    }

    /// `sum_i weight_i * seq_i`, cut at the shortest input.
    pub fn weighted_sum(terms: &[(f64, &CoefficientSequence)]) -> Self {
        let order = terms.iter().map(|(_, s)| s.order()).min().unwrap_or(0);
        let mut out = CoefficientSequence::zero(order);
        for (w, s) in terms {
            out.c0 += s.c0 * *w;
            for (o, c) in out.coeffs.iter_mut().zip(&s.coeffs) {
                *o += c * *w;
            }
            if s.tail == Tail::Truncated || s.order() > order {
                out.tail = Tail::Truncated;
            }
        }
        out
    }

    /// Horner evaluation of the polynomial at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc * z + self.c0
    }

    /// Coefficient-wise comparison: absolute tolerance for `|c_k| <= 1`,
    /// relative beyond. Orders must match.
    pub fn approx_eq(&self, other: &CoefficientSequence, tol: f64) -> bool {
        if self.order() != other.order() {
            return false;
        }
        (0..=self.order()).all(|k| {
            let (a, b) = (self.get(k), other.get(k));
            let scale = a.norm().max(b.norm()).max(1.0);
            (a - b).norm() <= tol * scale
        })
    }

    /// Least-squares slope of `ln|c_k|` against `ln k` over `k in range`,
    /// skipping zero coefficients. `None` with fewer than two usable points.
    ///
    /// Entries below `1e-10` of the largest magnitude in the range are treated
    /// as roundoff and skipped, so vanishing harmonics do not bend the fit.
    pub(crate) fn log_log_slope(&self, range: std::ops::RangeInclusive<usize>) -> Option<f64> {
        let ks: Vec<usize> = range.filter(|&k| k >= 1 && k <= self.order()).collect();
        let floor = 1e-10 * ks.iter().map(|&k| self.get(k).norm()).fold(0.0, f64::max);
        let pts: Vec<(f64, f64)> = ks
            .into_iter()
            .filter_map(|k| {
                let m = self.get(k).norm();
                (m > floor).then(|| ((k as f64).ln(), m.ln()))
            })
            .collect();
        if pts.len() < 2 {
            return None;
        }
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        (sxx > 0.0).then(|| sxy / sxx)
    }

    /// Smallest integer `p` with `|c_k| / k^p -> 0`, estimated from the
    /// log-log slope `s` of the upper half of the sequence as
    /// `max(1, floor(s) + 1)`.
    ///
    /// The sequence is flagged `NotAdmissible` when the slope over the last
    /// quarter exceeds the slope over the preceding quarter by more than a
    /// quarter of its magnitude (at least 0.25), i.e. the local power keeps
    /// widening, which is the signature of exponential growth.
    pub fn growth_class(&self) -> Result<Growth> {
        let k = self.order();
        if k < 16 {
            return Err(Error::InvalidArgument(format!("growth_class needs K >= 16, got {k}")));
        }
        let Some(slope) = self.log_log_slope(k / 2..=k) else {
            return Ok(Growth::Admissible(1));
        };
        let q = k / 4;
        if let (Some(prev), Some(last)) =
            (self.log_log_slope(k / 2..=k / 2 + q), self.log_log_slope(k - q..=k))
        {
            if last > 0.0 && last - prev > 0.25 * prev.abs().max(1.0) {
                return Ok(Growth::NotAdmissible);
            }
        }
        // Slopes within 0.05 of an integer count as that integer; quadrature
        // damps the top harmonics slightly, so a k^1 sequence fits as ~0.99.
        let snapped = if (slope - slope.round()).abs() < 0.05 { slope.round() } else { slope };
        let p = (snapped.floor() + 1.0).max(1.0);
        Ok(Growth::Admissible(p as u32))
    }

    /// Slope of the tail used by the truncation model; non-negative.
    fn tail_power(&self) -> f64 {
        let k = self.order();
        if k < 16 {
            return 0.0;
        }
        self.log_log_slope(k / 2..=k).unwrap_or(0.0).max(0.0)
    }

    /// Estimate of `|sum_{k>K} c_k z^k|` at `|z| = rho`.
    ///
    /// Zero for exact sequences. For truncated ones the tail magnitude is
    /// modelled as `m (k/K)^p`, with `m` the largest of the last few `|c_k|`
    /// and `p` the non-negative fitted tail slope, and summed in closed form
    /// after bounding `(k/K)^p` by `exp(p (k - K) / K)`.
    pub fn tail_bound(&self, rho: f64) -> f64 {
        if self.tail == Tail::Exact {
            return 0.0;
        }
        let k = self.order();
        if rho >= 1.0 || k == 0 {
            return f64::INFINITY;
        }
        let m = self.coeffs[k.saturating_sub(16)..].iter().map(|c| c.norm()).fold(0.0, f64::max);
        if m == 0.0 || rho == 0.0 {
            return 0.0;
        }
        // ((K + j) / K)^p <= exp(p j / K) turns the tail into a geometric sum
        let q = rho * (self.tail_power() / k as f64).exp();
        if q >= 1.0 {
            return f64::INFINITY;
        }
        m * rho.powf(k as f64) * q / (1.0 - q)
    }

    pub fn to_json(&self) -> CoefficientJson {
        CoefficientJson {
            c0: [self.c0.re, self.c0.im],
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
            order: self.order(),
            truncated: self.tail == Tail::Truncated,
        }
    }

    pub fn from_json(json: &CoefficientJson) -> Result<Self> {
        if json.order != json.coeffs.len() {
            return Err(Error::Parse(format!(
                "K = {} does not match the {} listed coefficients",
                json.order,
                json.coeffs.len()
            )));
        }
        let seq = CoefficientSequence::new(
            Complex64::new(json.c0[0], json.c0[1]),
            json.coeffs.iter().map(|c| Complex64::new(c[0], c[1])).collect(),
        )?;
        Ok(if json.truncated { seq.truncated() } else { seq })
    }
}

/// Wire form: `{"c0":[re,im],"coeffs":[[re,im],...],"K":int}`.
///
/// The optional `truncated` flag records that the list was cut from an
/// infinite sequence; it defaults to `false`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientJson {
    #[serde(default)]
    pub c0: [f64; 2],
    pub coeffs: Vec<[f64; 2]>,
    #[serde(rename = "K")]
    pub order: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
}
