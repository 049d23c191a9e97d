//! Number formatting, tabular output and JSON inputs.

use std::io::Write;
use std::path::Path;

use serde::Deserialize;

use crate::dirichlet::BoundaryCondition;
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::fourier::RealSampler;
use crate::inner::{CoefficientJson, CoefficientSequence};
use crate::point::{normalize_angle, CirclePoint};
use crate::singular::DeltaTerm;

/// `x` in the style of C's `%.12e`: twelve fraction digits and a signed,
/// at least two-digit exponent.
pub fn fmt_sci(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
}

impl Cell {
    fn render(self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => fmt_sci(x),
        }
    }
}

/// Named columns of rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_csv(&self, mut out: impl Write) -> Result<()> {
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.render()).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }

    /// An array of records, one per line. Numbers keep the `%.12e` text,
    /// which is valid JSON.
    pub fn write_json(&self, mut out: impl Write) -> Result<()> {
        writeln!(out, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            let fields: Vec<String> =
                self.columns.iter().zip(row).map(|(name, c)| format!("\"{name}\":{}", json_number(*c))).collect();
            let sep = if i + 1 < self.rows.len() { "," } else { "" };
            writeln!(out, "  {{{}}}{sep}", fields.join(","))?;
        }
        writeln!(out, "]")?;
        Ok(())
    }
}

fn json_number(c: Cell) -> String {
    match c {
        Cell::Float(x) if !x.is_finite() => "null".into(),
        c => c.render(),
    }
}

pub fn read_coefficients(path: &Path) -> Result<CoefficientSequence> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let json: CoefficientJson = serde_json::from_str(&text)?;
    CoefficientSequence::from_json(&json)
}

pub fn write_coefficients_json(seq: &CoefficientSequence, mut out: impl Write) -> Result<()> {
    serde_json::to_writer(&mut out, &seq.to_json())?;
    writeln!(out)?;
    Ok(())
}

/// Boundary data as read from JSON.
///
/// `samples` is a table of `[theta, value]` pairs, interpolated linearly and
/// periodically; `expr` is an expression in `t`. At most one may be given.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryJson {
    #[serde(default)]
    pub samples: Option<Vec<[f64; 2]>>,
    #[serde(default)]
    pub expr: Option<String>,
    #[serde(default)]
    pub singular: Vec<f64>,
    #[serde(default)]
    pub deltas: Vec<DeltaTerm>,
    #[serde(default)]
    pub mean: f64,
}

/// Periodic piecewise-linear interpolant through `(theta, value)` pairs.
pub fn interpolate_samples(samples: &[[f64; 2]]) -> Result<RealSampler> {
    if samples.len() < 2 {
        return Err(Error::InvalidArgument("boundary samples need at least two points".into()));
    }
    if samples.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("boundary sample".into()));
    }
    let mut pts: Vec<(f64, f64)> = samples.iter().map(|[t, v]| (normalize_angle(*t), *v)).collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    pts.dedup_by(|a, b| a.0 == b.0);
    if pts.len() < 2 {
        return Err(Error::InvalidArgument("boundary samples need two distinct angles".into()));
    }
    Ok(RealSampler::new(move |t| {
        let i = pts.partition_point(|p| p.0 <= t);
        let (a, b) = if i == 0 {
            let last = pts[pts.len() - 1];
            ((last.0 - 2.0 * std::f64::consts::PI, last.1), pts[0])
        } else if i == pts.len() {
            let first = pts[0];
            (pts[i - 1], (first.0 + 2.0 * std::f64::consts::PI, first.1))
        } else {
            (pts[i - 1], pts[i])
        };
        a.1 + (b.1 - a.1) * (t - a.0) / (b.0 - a.0)
    }))
}

impl BoundaryJson {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn into_condition(self) -> Result<BoundaryCondition> {
        let regular = match (self.samples, self.expr) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidArgument("boundary JSON gives both \"samples\" and \"expr\"".into()))
            }
            (Some(s), None) => Some(interpolate_samples(&s)?),
            (None, Some(e)) => Some(Expr::parse(&e)?.into_sampler()),
            (None, None) => None,
        };
        let regular = regular.map(|r| r.with_singular_points(self.singular.iter().map(|&t| CirclePoint::new(t))));
        Ok(BoundaryCondition { regular, deltas: self.deltas, extended: None, mean: self.mean })
    }
}
