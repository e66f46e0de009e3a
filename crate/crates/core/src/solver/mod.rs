//! Exact solves of `−u'' = f` on the rod under Robin, Neumann and Dirichlet
//! boundary conditions.
//!
//! Every solve checks its own boundary residuals before returning; a solution
//! that fails the audit is reported as [`Error::Internal`].

mod fourier;
mod green;
mod neumann;
mod oracle;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::piecewise::{PiecewisePoly, StepFunction};
use crate::tolerances::BC_RESIDUAL;

pub use fourier::{kernel_fourier_check, FOURIER_POINTS};
pub use green::{dirichlet_green, dirichlet_solve, robin_green, robin_solve};
pub use neumann::{neumann_convolution_solve, neumann_kernel, neumann_solve};
pub use oracle::direct_integration_oracle;

/// Robin coefficient `α > 0` and the derived `c_α = α / (1 + απ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct RobinParam {
    alpha: f64,
    c_alpha: f64,
}

impl RobinParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::Parameter(format!("Robin parameter must be positive and finite, got {alpha}")));
        }
        Ok(Self { alpha, c_alpha: alpha / (1.0 + alpha * PI) })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `c_α = α / (1 + απ)`, always in `(0, 1/π)`.
    pub fn c_alpha(&self) -> f64 {
        self.c_alpha
    }
}

impl TryFrom<f64> for RobinParam {
    type Error = Error;

    fn try_from(alpha: f64) -> Result<Self> {
        RobinParam::new(alpha)
    }
}

impl From<RobinParam> for f64 {
    fn from(p: RobinParam) -> f64 {
        p.alpha
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryCondition {
    /// `−u'(lo) + αu(lo) = u'(hi) + αu(hi) = 0`.
    Robin(RobinParam),
    /// `u'(lo) = u'(hi) = 0`, data with `∫f = 0`, zero-mean solution.
    Neumann,
    /// `u(lo) = u(hi) = 0`.
    Dirichlet,
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryCondition::Robin(p) => write!(f, "robin:{}", p.alpha()),
            BoundaryCondition::Neumann => f.write_str("neumann"),
            BoundaryCondition::Dirichlet => f.write_str("dirichlet"),
        }
    }
}

impl FromStr for BoundaryCondition {
    type Err = Error;

    /// Parses `robin:<alpha>`, `neumann` or `dirichlet`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some(("robin", a)) => {
                let alpha: f64 =
                    a.parse().map_err(|_| Error::Parameter(format!("cannot parse Robin parameter {a:?}")))?;
                Ok(BoundaryCondition::Robin(RobinParam::new(alpha)?))
            }
            None if s == "neumann" => Ok(BoundaryCondition::Neumann),
            None if s == "dirichlet" => Ok(BoundaryCondition::Dirichlet),
            _ => Err(Error::Parameter(format!(
                "unknown boundary condition {s:?}; expected robin:<alpha>, neumann or dirichlet"
            ))),
        }
    }
}

/// Absolute residuals of the boundary conditions (plus `|∫u|` for Neumann).
pub fn boundary_residuals(u: &PiecewisePoly, bc: BoundaryCondition) -> Vec<f64> {
    let d = u.domain();
    let (lo, hi) = (d.lo(), d.hi());
    let val = |x| u.eval(x).expect("endpoint lies in the domain");
    let der = |x| u.derivative(x).expect("endpoint lies in the domain");
    match bc {
        BoundaryCondition::Robin(p) => vec![
            (-der(lo) + p.alpha() * val(lo)).abs(),
            (der(hi) + p.alpha() * val(hi)).abs(),
        ],
        BoundaryCondition::Neumann => vec![der(lo).abs(), der(hi).abs(), u.integral().abs()],
        BoundaryCondition::Dirichlet => vec![val(lo).abs(), val(hi).abs()],
    }
}

/// Fails with [`Error::Internal`] when a residual exceeds `1e-10·(1 + ‖f‖₁)`.
pub(crate) fn certify(u: PiecewisePoly, f: &StepFunction, bc: BoundaryCondition) -> Result<PiecewisePoly> {
    let limit = BC_RESIDUAL * (1.0 + f.l1_norm());
    let worst = boundary_residuals(&u, bc).into_iter().fold(0.0, f64::max);
    if worst.is_nan() || worst > limit {
        return Err(Error::Internal(format!(
            "{bc} solve left a boundary residual {worst:e} above {limit:e}"
        )));
    }
    Ok(u)
}

/// Rejects Neumann data with `|∫f| > 1e-10`.
pub(crate) fn check_compatible(f: &StepFunction) -> Result<()> {
    let integral = f.integral();
    if integral.abs() > crate::tolerances::NEUMANN_COMPATIBILITY {
        return Err(Error::Compatibility { integral });
    }
    Ok(())
}

/// Dispatches to the closed-form solver for `bc`.
pub fn solve(f: &StepFunction, bc: BoundaryCondition) -> Result<PiecewisePoly> {
    match bc {
        BoundaryCondition::Robin(p) => robin_solve(f, p),
        BoundaryCondition::Neumann => neumann_solve(f),
        BoundaryCondition::Dirichlet => dirichlet_solve(f),
    }
}
