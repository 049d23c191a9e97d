//! Integer coefficients `A_{n,i}` of the numerator polynomials `P_n`.
//!
//! `A_{0,0} = 1` and `A_{n,i} = (i+1) A_{n-1,i} + (n-i+1) A_{n-1,i-1}`, with
//! entries outside `0 <= i <= n` taken as zero. Row `n` sums to `(n+1)!`.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianTable {
    rows: Vec<Vec<u128>>,
}

/// Builds rows `0..=n_max`. Fails with [`Error::Overflow`] once an entry no
/// longer fits in 128 bits (first at `n = 34`).
pub fn eulerian_table(n_max: usize) -> Result<EulerianTable> {
    let mut rows: Vec<Vec<u128>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![1]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let at = |i: isize| -> u128 {
            if i < 0 || i as usize >= prev.len() { 0 } else { prev[i as usize] }
        };
        let mut row = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let a = (i as u128 + 1).checked_mul(at(i as isize));
            let b = ((n - i) as u128 + 1).checked_mul(at(i as isize - 1));
            let v = a.zip(b).and_then(|(a, b)| a.checked_add(b)).ok_or(Error::Overflow { row: n })?;
            row.push(v);
        }
        rows.push(row);
    }
    Ok(EulerianTable { rows })
}

impl EulerianTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&[u128]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// `A_{n,i}`, zero outside the triangle.
    pub fn get(&self, n: usize, i: usize) -> u128 {
        self.rows.get(n).and_then(|r| r.get(i)).copied().unwrap_or(0)
    }

    /// The triangle as right-aligned integer columns, one row per line.
    pub fn format_triangle(&self) -> String {
        let width = self.rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// `P_n(chi) = sum_i A_{n,i} chi^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaPolynomial {
    coeffs: Vec<f64>,
}

impl DeltaPolynomial {
    /// Coefficients `[A_{n,0}, ..., A_{n,n}]`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, chi: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::default(), |acc, &a| acc * chi + a)
    }
}

/// `P_n` read from `table`.
pub fn delta_polynomial(n: usize, table: &EulerianTable) -> Result<DeltaPolynomial> {
    let row = table.row(n).ok_or(Error::OrderOutOfRange { n, max: table.n_max() })?;
    Ok(DeltaPolynomial { coeffs: row.iter().map(|&a| a as f64).collect() })
}
