use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed, bounded interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::Parameter(format!("interval endpoints must be finite, got [{lo}, {hi}]")));
        }
        if lo >= hi {
            return Err(Error::Parameter(format!("interval needs lo < hi, got [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    /// The rod `[-π, π]`.
    pub fn rod() -> Self {
        Self { lo: -PI, hi: PI }
    }

    /// The half rod `[0, π]` used by the Neumann problem.
    pub fn half_rod() -> Self {
        Self { lo: 0.0, hi: PI }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Rounding slack used for membership tests.
    pub(crate) fn slack(&self) -> f64 {
        1e-12 * (1.0 + self.lo.abs().max(self.hi.abs()))
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo - self.slack() && x <= self.hi + self.slack()
    }

    /// Clamps `x` into the interval after checking membership.
    pub fn check(&self, x: f64) -> Result<f64> {
        if x.is_nan() || !self.contains(x) {
            return Err(Error::Domain(format!("{x} lies outside [{}, {}]", self.lo, self.hi)));
        }
        Ok(x.clamp(self.lo, self.hi))
    }

    /// Checks `[a, b] ⊆ self`, returning the clamped endpoints.
    pub fn check_sub(&self, a: f64, b: f64) -> Result<(f64, f64)> {
        let a = self.check(a)?;
        let b = self.check(b)?;
        if a > b {
            return Err(Error::Domain(format!("integration bounds reversed: [{a}, {b}]")));
        }
        Ok((a, b))
    }

    /// Agreement of endpoints up to rounding.
    pub fn same_as(&self, other: &Interval) -> bool {
        let tol = self.slack().max(other.slack());
        (self.lo - other.lo).abs() <= tol && (self.hi - other.hi).abs() <= tol
    }

    /// `n ≥ 2` uniformly spaced points including both endpoints exactly.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        assert!(n >= 2, "grid needs at least two points");
        let h = self.len() / (n - 1) as f64;
        (0..n)
            .map(|i| if i + 1 == n { self.hi } else { self.lo + h * i as f64 })
            .collect()
    }
}

impl TryFrom<[f64; 2]> for Interval {
    type Error = Error;

    fn try_from(v: [f64; 2]) -> Result<Self> {
        Interval::new(v[0], v[1])
    }
}

impl From<Interval> for [f64; 2] {
    fn from(i: Interval) -> Self {
        [i.lo, i.hi]
    }
}
