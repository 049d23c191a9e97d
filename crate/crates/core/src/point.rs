//! Points on the unit circle and inside the open unit disk.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduces an angle to the half-open interval [-pi, pi).
pub fn normalize_angle(theta: f64) -> f64 {
    let mut r = (theta + PI).rem_euclid(TAU);
    if r >= TAU {
        r -= TAU;
    }
    r - PI
}

/// An angle on the unit circle, stored normalized to [-pi, pi).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(from = "f64", into = "f64")]
pub struct CirclePoint(f64);

impl CirclePoint {
    pub fn new(theta: f64) -> Self {
        CirclePoint(normalize_angle(theta))
    }

    pub fn theta(self) -> f64 {
        self.0
    }

    /// The unit complex number exp(i theta).
    pub fn unit(self) -> Complex64 {
        Complex64::from_polar(1.0, self.0)
    }

    /// Mirror image theta -> -theta.
    pub fn reflected(self) -> Self {
        CirclePoint::new(-self.0)
    }

    pub fn shifted(self, by: f64) -> Self {
        CirclePoint::new(self.0 + by)
    }

    /// Shortest angular distance to `other`, in [0, pi].
    pub fn distance(self, other: CirclePoint) -> f64 {
        normalize_angle(self.0 - other.0).abs()
    }
}

impl From<f64> for CirclePoint {
    fn from(theta: f64) -> Self {
        CirclePoint::new(theta)
    }
}

impl From<CirclePoint> for f64 {
    fn from(p: CirclePoint) -> Self {
        p.0
    }
}

/// A point z = rho exp(i theta) of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    rho: f64,
    theta: f64,
}

impl DiskPoint {
    pub fn new(rho: f64, theta: f64) -> Result<Self> {
        if !rho.is_finite() || !theta.is_finite() {
            return Err(Error::NonFinite(format!("disk point ({rho}, {theta})")));
        }
        if !(0.0..1.0).contains(&rho) {
            return Err(Error::OutsideDisk { rho });
        }
        Ok(DiskPoint { rho, theta })
    }

    pub fn from_z(z: Complex64) -> Result<Self> {
        let (rho, theta) = z.to_polar();
        DiskPoint::new(rho, theta)
    }

    pub fn origin() -> Self {
        DiskPoint { rho: 0.0, theta: 0.0 }
    }

    pub fn rho(self) -> f64 {
        self.rho
    }

    pub fn theta(self) -> f64 {
        self.theta
    }

    pub fn z(self) -> Complex64 {
        Complex64::from_polar(self.rho, self.theta)
    }
}
