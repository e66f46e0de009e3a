use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::report::{ComparisonReport, ExtremaMargins, Theorem, Tolerances};
use crate::error::{Error, Result};
use crate::piecewise::{PiecewisePoly, StepFunction};
use crate::rearrange::{
    convex_means_check, decreasing_rearrangement, poly_star_curve, star_margin,
    symmetric_decreasing_rearrangement, symmetric_value, ConvexFamily, StarMethod,
};
use crate::solver::{dirichlet_solve, neumann_solve, robin_solve, RobinParam};

/// Knobs shared by the comparison audits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompareOptions {
    pub star_method: StarMethod,
    /// Points of the `u# ≤ v` grid for the Dirichlet check; 0 disables it.
    pub pointwise_grid: usize,
    pub tolerances: Tolerances,
}

impl Default for CompareOptions {
    fn default() -> Self {
        Self { star_method: StarMethod::default(), pointwise_grid: 1001, tolerances: Tolerances::default() }
    }
}

fn require_nonnegative(f: &StepFunction, what: &str) -> Result<()> {
    if !f.is_nonnegative() {
        return Err(Error::Precondition(format!(
            "{what} comparison needs a nonnegative source, min value {}",
            f.min_value()
        )));
    }
    Ok(())
}

fn lp_margins(u: &PiecewisePoly, v: &PiecewisePoly) -> Result<BTreeMap<String, f64>> {
    let mut m = BTreeMap::new();
    for (key, p) in [("1", 1.0), ("2", 2.0), ("inf", f64::INFINITY)] {
        m.insert(key.to_string(), v.lp_norm(p)? - u.lp_norm(p)?);
    }
    Ok(m)
}

fn extrema_margins(u: &PiecewisePoly, v: &PiecewisePoly) -> ExtremaMargins {
    let (eu, ev) = (u.extrema(), v.extrema());
    ExtremaMargins { max: ev.max - eu.max, min: eu.min - ev.min, osc: ev.osc() - eu.osc() }
}

fn star_and_convex(
    theorem: Theorem,
    u: &PiecewisePoly,
    v: &PiecewisePoly,
    family: ConvexFamily,
    opts: &CompareOptions,
) -> Result<ComparisonReport> {
    let su = poly_star_curve(u, opts.star_method);
    let sv = poly_star_curve(v, opts.star_method);
    let convex = convex_means_check(u, v, family, opts.tolerances.star)?;
    Ok(ComparisonReport {
        theorem,
        seed: None,
        index: None,
        alpha: None,
        star_margin: star_margin(&su, &sv)?,
        lp_margins: lp_margins(u, v)?,
        extrema_margins: None,
        convex,
        pointwise_margin: None,
        means: None,
        tolerances: opts.tolerances,
        pass: false,
    })
}

/// Robin rod: `u` solves with `f`, `v` with `f#`, same `α`.
pub fn robin_compare(f: &StepFunction, alpha: RobinParam) -> Result<ComparisonReport> {
    robin_compare_with(f, alpha, &CompareOptions::default())
}

pub fn robin_compare_with(f: &StepFunction, alpha: RobinParam, opts: &CompareOptions) -> Result<ComparisonReport> {
    require_nonnegative(f, "Robin")?;
    let u = robin_solve(f, alpha)?;
    let v = robin_solve(&symmetric_decreasing_rearrangement(f), alpha)?;
    let mut r = star_and_convex(Theorem::Robin, &u, &v, ConvexFamily::IncreasingConvex, opts)?;
    r.alpha = Some(alpha.alpha());
    Ok(r.finalize())
}

/// Insulated half rod: `u` solves with `f`, `v` with `f*`, both zero mean.
pub fn neumann_compare(f: &StepFunction) -> Result<ComparisonReport> {
    neumann_compare_with(f, &CompareOptions::default())
}

pub fn neumann_compare_with(f: &StepFunction, opts: &CompareOptions) -> Result<ComparisonReport> {
    let u = neumann_solve(f)?;
    let v = neumann_solve(&decreasing_rearrangement(f).translated(f.domain().lo()))?;
    let means = (u.integral(), v.integral());
    let mut r = star_and_convex(Theorem::Neumann, &u, &v, ConvexFamily::Convex, opts)?;
    r.extrema_margins = Some(extrema_margins(&u, &v));
    r.means = Some(means);
    Ok(r.finalize())
}

/// Dirichlet rod: `u` solves with `f`, `v` with `f#`; optionally checks
/// `u# ≤ v` pointwise.
pub fn dirichlet_compare(f: &StepFunction) -> Result<ComparisonReport> {
    dirichlet_compare_with(f, &CompareOptions::default())
}

pub fn dirichlet_compare_with(f: &StepFunction, opts: &CompareOptions) -> Result<ComparisonReport> {
    require_nonnegative(f, "Dirichlet")?;
    let u = dirichlet_solve(f)?;
    let v = dirichlet_solve(&symmetric_decreasing_rearrangement(f))?;
    let theorem = if opts.pointwise_grid >= 2 { Theorem::DirichletPointwise } else { Theorem::Dirichlet };
    let mut r = star_and_convex(theorem, &u, &v, ConvexFamily::IncreasingConvex, opts)?;
    if opts.pointwise_grid >= 2 {
        r.pointwise_margin = Some(pointwise_margin(&u, &v, opts.pointwise_grid));
    }
    Ok(r.finalize())
}

/// `min_x (v(x) − u#(x))` over a uniform grid of `v`'s domain, which must be
/// centred at 0 with the same length as `u`'s.
pub fn pointwise_margin(u: &PiecewisePoly, v: &PiecewisePoly, n: usize) -> f64 {
    v.domain()
        .grid(n)
        .into_iter()
        .map(|x| v.eval(x).expect("grid lies in the domain") - symmetric_value(u, x))
        .fold(f64::INFINITY, f64::min)
}

/// `‖u_α − u_Dirichlet‖_∞` for each `α` (which must increase).
pub fn robin_dirichlet_limit(f: &StepFunction, alphas: &[f64]) -> Result<Vec<f64>> {
    require_nonnegative(f, "Robin-to-Dirichlet")?;
    if alphas.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Parameter("alphas must be strictly increasing".into()));
    }
    let target = dirichlet_solve(f)?;
    alphas
        .iter()
        .map(|&a| robin_solve(f, RobinParam::new(a)?)?.sup_distance(&target))
        .collect()
}

/// Least-squares `C` in `distance ≈ C/α`.
pub fn fit_inverse_alpha(alphas: &[f64], distances: &[f64]) -> f64 {
    let num: f64 = alphas.iter().zip(distances).map(|(a, d)| d / a).sum();
    let den: f64 = alphas.iter().map(|a| 1.0 / (a * a)).sum();
    num / den
}
