//! Temperature gap `max u − min u` on a Robin rod heated along half its length.
//!
//! Closed forms for a source interval `[b − π/2, b + π/2]`, a numerical gap
//! from the exact solver, scans over `b`, and an exploratory search over
//! sources that are unions of grid cells.

mod example;
mod scan;
mod search;

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::piecewise::{Interval, StepFunction};
use crate::solver::{robin_solve, RobinParam};

pub use example::{example_solutions, example_summary, ExampleSummary};
pub use scan::{gap_scan, GapScanResult, DEFAULT_SCAN_POINTS};
pub use search::{extremal_search, extremal_search_with, SearchOptions, SearchResult, EXHAUSTIVE_MAX_CELLS};

/// `2/(√3·π)`: above this `α` the best interval sits strictly inside the rod.
pub fn interior_threshold() -> f64 {
    2.0 / (3f64.sqrt() * PI)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::Parameter(format!("α must be positive and finite, got {alpha}")));
    }
    Ok(())
}

/// Validates `b ∈ [−π/2, π/2]`, clamping round-off.
fn check_center(b: f64) -> Result<f64> {
    let slack = 1e-12;
    if !(b >= -FRAC_PI_2 - slack && b <= FRAC_PI_2 + slack) {
        return Err(Error::Parameter(format!("source centre b = {b} outside [-π/2, π/2]")));
    }
    Ok(b.clamp(-FRAC_PI_2, FRAC_PI_2))
}

/// Closed-form gap for the source `χ[b − π/2, b + π/2]`.
///
/// The polynomial holds for `b ≤ 0`; positive `b` is mirrored since the gap
/// is even in `b`.
pub fn gap_formula(alpha: f64, b: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let b = -check_center(b)?.abs();
    let ap = alpha * PI;
    let num = PI * (1.0 + alpha * (b + PI)) * (-3.0 * PI * (1.0 + ap) + b * (4.0 + 3.0 * ap));
    Ok(-num / (8.0 * (1.0 + ap) * (1.0 + ap)))
}

/// First and second `b`-derivatives of [`gap_formula`].
///
/// For `b > 0` the mirrored branch is used, so `d1` flips sign and `d2` is
/// unchanged. At `b = 0` the left derivative is returned.
pub fn gap_derivatives(alpha: f64, b: f64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    let b = check_center(b)?;
    let ap = alpha * PI;
    let den = 4.0 * (1.0 + ap) * (1.0 + ap);
    let left = |b: f64| -PI * (2.0 + 2.0 * ap + alpha * b * (4.0 + 3.0 * ap)) / den;
    let d1 = if b > 0.0 { -left(-b) } else { left(b) };
    let d2 = -ap * (4.0 + 3.0 * ap) / den;
    Ok((d1, d2))
}

/// Interior maximiser `−2(1 + απ)/(α(4 + 3απ))` when `α > 2/(√3π)`;
/// `None` when the maximiser is at the ends `b = ±π/2`.
pub fn b_crit(alpha: f64) -> Result<Option<f64>> {
    check_alpha(alpha)?;
    if alpha <= interior_threshold() {
        return Ok(None);
    }
    let ap = alpha * PI;
    Ok(Some(-2.0 * (1.0 + ap) / (alpha * (4.0 + 3.0 * ap))))
}

/// Source `χ[b − π/2, b + π/2]` on the rod.
pub fn interval_source(b: f64) -> Result<StepFunction> {
    let b = check_center(b)?;
    let lo = (b - FRAC_PI_2).max(-PI);
    let hi = (b + FRAC_PI_2).min(PI);
    StepFunction::indicator(Interval::rod(), lo, hi)
}

/// Gap of the exact Robin solution for the interval source centred at `b`.
pub fn gap_numeric(alpha: RobinParam, b: f64) -> Result<f64> {
    let u = robin_solve(&interval_source(b)?, alpha)?;
    Ok(u.extrema().osc())
}

#[cfg(test)]
mod tests {
    use super::*;

    const OSC_V: f64 = 3.0 * PI * PI / 8.0;

    #[test]
    fn centred_gap_is_independent_of_alpha() {
        for a in [0.01, 0.1, 1.0, 10.0, 1e3] {
            assert!((gap_formula(a, 0.0).unwrap() - OSC_V).abs() < 1e-13);
            let p = RobinParam::new(a).unwrap();
            assert!((gap_numeric(p, 0.0).unwrap() - OSC_V).abs() < 1e-8);
        }
    }

    #[test]
    fn formula_is_even_and_matches_the_solver() {
        for a in [0.05, 0.2, 1.0, 7.0] {
            let p = RobinParam::new(a).unwrap();
            for b in [-FRAC_PI_2, -1.0, -0.3, 0.0, 0.4, 1.2, FRAC_PI_2] {
                let f = gap_formula(a, b).unwrap();
                assert_eq!(f, gap_formula(a, -b).unwrap());
                assert!((gap_numeric(p, b).unwrap() - f).abs() < 1e-8, "α={a} b={b}");
            }
        }
    }

    #[test]
    fn center_out_of_range_is_rejected() {
        assert!(gap_formula(1.0, 2.0).is_err());
        assert!(gap_formula(0.0, 0.0).is_err());
        assert!(gap_derivatives(1.0, -1.6).is_err());
        assert!(interval_source(f64::NAN).is_err());
    }

    #[test]
    fn derivative_signs() {
        for a in [0.01, 1.0, 100.0] {
            assert!(gap_derivatives(a, -1.0).unwrap().1 < 0.0);
        }
        for a in [0.1, 0.3, 0.4, 1.0, 5.0] {
            let ap = a * PI;
            let (d1, _) = gap_derivatives(a, -FRAC_PI_2).unwrap();
            let closed = PI * (-4.0 + 3.0 * ap * ap) / (8.0 * (1.0 + ap) * (1.0 + ap));
            assert!((d1 - closed).abs() < 1e-14);
            assert_eq!(d1 > 0.0, a > interior_threshold());
            let (d1, _) = gap_derivatives(a, 0.0).unwrap();
            assert!((d1 + PI / (2.0 * (1.0 + ap))).abs() < 1e-14);
        }
        // Central difference of the formula.
        let (a, b, h) = (1.3, -0.8, 1e-5);
        let fd = (gap_formula(a, b + h).unwrap() - gap_formula(a, b - h).unwrap()) / (2.0 * h);
        assert!((fd - gap_derivatives(a, b).unwrap().0).abs() < 1e-8);
        let fd = (gap_formula(a, -b + h).unwrap() - gap_formula(a, -b - h).unwrap()) / (2.0 * h);
        assert!((fd - gap_derivatives(a, -b).unwrap().0).abs() < 1e-8);
    }

    #[test]
    fn critical_center() {
        let b1 = b_crit(1.0).unwrap().unwrap();
        assert!((b1 - (-2.0 * (1.0 + PI) / (4.0 + 3.0 * PI))).abs() < 1e-15);
        assert!((b1 + 0.61700).abs() < 1e-5);
        assert!(gap_derivatives(1.0, b1).unwrap().0.abs() < 1e-14);
        assert_eq!(b_crit(interior_threshold()).unwrap(), None);
        assert_eq!(b_crit(0.2).unwrap(), None);
        let seq: Vec<f64> = [0.4, 1.0, 4.0, 40.0].iter().map(|&a| b_crit(a).unwrap().unwrap()).collect();
        assert!(seq.windows(2).all(|w| w[1] > w[0]));
        assert!(seq[0] > -FRAC_PI_2 && seq[3] < 0.0);
    }
}
