use std::f64::consts::PI;

use super::{certify, BoundaryCondition, RobinParam};
use crate::error::{Error, Result};
use crate::piecewise::{cumulative_moments, Interval, PiecewisePoly, StepFunction};

/// `G(x, y) = −(c/2)·x·y − |x − y|/2 + 1/(2c)` on the rod.
fn green_with(c: f64, x: f64, y: f64) -> Result<f64> {
    let rod = Interval::rod();
    let (x, y) = (rod.check(x)?, rod.check(y)?);
    Ok(-0.5 * c * (x * y) - 0.5 * (x - y).abs() + 0.5 / c)
}

/// Robin Green's function on `[-π, π]`.
pub fn robin_green(x: f64, y: f64, alpha: RobinParam) -> Result<f64> {
    green_with(alpha.c_alpha(), x, y)
}

/// Dirichlet Green's function `−xy/(2π) − |x − y|/2 + π/2`: the `α → ∞` limit.
pub fn dirichlet_green(x: f64, y: f64) -> Result<f64> {
    green_with(1.0 / PI, x, y)
}

/// `u(x) = ∫ G(x, y) f(y) dy` in closed form through the cumulative moments:
///
/// `u(x) = −(c/2)·x·F1 − ½[x(2M0(x) − F0) − (2M1(x) − F1)] + F0/(2c)`
///
/// with `F0 = M0(π)`, `F1 = M1(π)`.
fn green_solve(f: &StepFunction, c: f64) -> Result<PiecewisePoly> {
    if !f.domain().same_as(&Interval::rod()) {
        return Err(Error::Domain(format!(
            "Green's-function solves live on [-π, π], got [{}, {}]",
            f.domain().lo(),
            f.domain().hi()
        )));
    }
    let (m0, m1) = cumulative_moments(f);
    let (f0, f1) = (f.integral(), f.moment(1));
    let coeffs = m0
        .coeffs()
        .iter()
        .zip(m1.coeffs())
        .map(|(&[a0, a1, _], &[b0, _, b2])| {
            [
                0.5 * (2.0 * b0 - f1) + 0.5 * f0 / c,
                -0.5 * (2.0 * a0 - f0) - 0.5 * c * f1,
                -(a1 - b2),
            ]
        })
        .collect();
    PiecewisePoly::new(m0.breakpoints().to_vec(), coeffs)
}

/// Exact Robin solution on the rod.
pub fn robin_solve(f: &StepFunction, alpha: RobinParam) -> Result<PiecewisePoly> {
    let u = green_solve(f, alpha.c_alpha())?;
    certify(u, f, BoundaryCondition::Robin(alpha))
}

/// Exact Dirichlet solution on the rod.
pub fn dirichlet_solve(f: &StepFunction) -> Result<PiecewisePoly> {
    let u = green_solve(f, 1.0 / PI)?;
    certify(u, f, BoundaryCondition::Dirichlet)
}
