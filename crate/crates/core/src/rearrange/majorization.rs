use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::piecewise::PiecewisePoly;

/// Test family for convex-means comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvexFamily {
    /// Hinges `max(s − c, 0)` and `s`.
    IncreasingConvex,
    /// Hinges, `s` and `s²`; requires equal means.
    Convex,
}

/// Number of hinge thresholds spanning the joint range of `u` and `v`.
pub const HINGE_COUNT: usize = 64;

/// Outcome of a convex-means comparison `∫φ(u) ≤ ∫φ(v) + tol`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexMeansEntry {
    pub family: ConvexFamily,
    /// `min_φ (∫φ(v) − ∫φ(u))`.
    pub min_margin: f64,
    /// Test function attaining `min_margin`.
    pub worst: String,
    pub evaluated: usize,
    pub pass: bool,
}

/// Checks `∫φ(u) ≤ ∫φ(v) + tol` over the test family.
///
/// All integrals are exact: hinges split each piece at the level crossing and
/// `s²` integrates as a quartic.
pub fn convex_means_check(
    u: &PiecewisePoly,
    v: &PiecewisePoly,
    family: ConvexFamily,
    tol: f64,
) -> Result<ConvexMeansEntry> {
    if !u.domain().same_as(&v.domain()) {
        return Err(Error::Parameter("convex means need a shared domain".into()));
    }
    let (iu, iv) = (u.integral(), v.integral());
    if family == ConvexFamily::Convex && (iu - iv).abs() > tol {
        return Err(Error::Precondition(format!(
            "convex family needs equal means: ∫u = {iu:e}, ∫v = {iv:e}"
        )));
    }
    let (eu, ev) = (u.extrema(), v.extrema());
    let lo = eu.min.min(ev.min);
    let hi = eu.max.max(ev.max);

    let mut margins: Vec<(String, f64)> = (0..HINGE_COUNT)
        .map(|j| {
            let c = lo + (hi - lo) * j as f64 / (HINGE_COUNT - 1) as f64;
            (format!("hinge(c={c})"), v.excess_integral(c) - u.excess_integral(c))
        })
        .collect();
    margins.push(("identity".into(), iv - iu));
    if family == ConvexFamily::Convex {
        margins.push(("square".into(), v.square_integral() - u.square_integral()));
    }
    let evaluated = margins.len();
    let (worst, min_margin) = margins
        .into_iter()
        .fold((String::new(), f64::INFINITY), |acc, m| if m.1 < acc.1 { m } else { acc });
    Ok(ConvexMeansEntry { family, min_margin, worst, evaluated, pass: min_margin >= -tol })
}
