use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::piecewise::{Interval, PiecewisePoly, StepFunction};
use crate::solver::{robin_solve, RobinParam};
use crate::tolerances::SOLVER_AGREEMENT;

/// Explicit solutions for the sources `χ[−π, 0]` (`u`) and `χ[−π/2, π/2]`
/// (`v`) under the Robin condition, built from their closed forms.
pub fn example_solutions(alpha: RobinParam) -> Result<(PiecewisePoly, PiecewisePoly)> {
    let c = alpha.c_alpha();
    let pi2 = PI * PI;
    // u = −u₁ + (π/2 + π²c/4) x + π/(2c) + π²/4
    let u1 = PiecewisePoly::new(
        vec![-PI, 0.0, PI],
        vec![[pi2 / 2.0, PI, 0.5], [pi2 / 2.0, PI, 0.0]],
    )?;
    let u = u1.scale(-1.0).add_affine(PI / (2.0 * c) + pi2 / 4.0, FRAC_PI_2 + pi2 * c / 4.0);
    // v = −v₁ + (π/2) x + π/(2c)
    let v1 = PiecewisePoly::new(
        vec![-PI, -FRAC_PI_2, FRAC_PI_2, PI],
        vec![[0.0, 0.0, 0.0], [pi2 / 8.0, FRAC_PI_2, 0.5], [0.0, PI, 0.0]],
    )?;
    let v = v1.scale(-1.0).add_affine(PI / (2.0 * c), FRAC_PI_2);
    Ok((u, v))
}

/// Key quantities of the two explicit solutions, cross-checked against the
/// solver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExampleSummary {
    pub alpha: f64,
    pub osc_u: f64,
    pub osc_v: f64,
    /// `3π²/8`.
    pub osc_v_closed: f64,
    /// `u(−π/2) − u(π)`.
    pub drop_u: f64,
    /// `π²(5 + 2απ) / (8(1 + απ))`.
    pub drop_u_closed: f64,
    /// Sup distances between the explicit forms and the solver output.
    pub solver_distance_u: f64,
    pub solver_distance_v: f64,
}

pub fn example_summary(alpha: RobinParam) -> Result<ExampleSummary> {
    let (u, v) = example_solutions(alpha)?;
    let rod = Interval::rod();
    let su = robin_solve(&StepFunction::indicator(rod, -PI, 0.0)?, alpha)?;
    let sv = robin_solve(&StepFunction::indicator(rod, -FRAC_PI_2, FRAC_PI_2)?, alpha)?;
    let (du, dv) = (u.sup_distance(&su)?, v.sup_distance(&sv)?);
    let scale = 1.0 + su.lp_norm(f64::INFINITY)?;
    if du > SOLVER_AGREEMENT * scale || dv > SOLVER_AGREEMENT * scale {
        return Err(Error::Internal(format!(
            "explicit example solutions disagree with the solver: {du:e}, {dv:e}"
        )));
    }
    let ap = alpha.alpha() * PI;
    Ok(ExampleSummary {
        alpha: alpha.alpha(),
        osc_u: u.extrema().osc(),
        osc_v: v.extrema().osc(),
        osc_v_closed: 3.0 * PI * PI / 8.0,
        drop_u: u.eval(-FRAC_PI_2)? - u.eval(PI)?,
        drop_u_closed: PI * PI * (5.0 + 2.0 * ap) / (8.0 * (1.0 + ap)),
        solver_distance_u: du,
        solver_distance_v: dv,
    })
}
