//! Exact step functions and piecewise quadratics on a closed interval.

mod interval;
mod poly;
pub mod quadrature;
mod step;

pub use interval::Interval;
pub use poly::{Extrema, NormExponent, PiecewisePoly};
pub use step::StepFunction;

use crate::tolerances::BREAKPOINT_MERGE;

/// Drops pieces narrower than the merge tolerance.
///
/// Returns the surviving breakpoints and the indices of the kept pieces. A
/// dropped last piece extends its left neighbour to the right endpoint.
fn merge_breakpoints(bps: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let hi = bps[bps.len() - 1];
    let mut out = vec![bps[0]];
    let mut keep = Vec::with_capacity(bps.len() - 1);
    for (i, w) in bps.windows(2).enumerate() {
        let left = out[out.len() - 1];
        if w[1] - left >= BREAKPOINT_MERGE {
            out.push(w[1]);
            keep.push(i);
        }
    }
    if keep.is_empty() {
        // Whole domain narrower than the tolerance: keep one piece.
        return (vec![bps[0], hi], vec![0]);
    }
    *out.last_mut().unwrap() = hi;
    (out, keep)
}

/// Either kind of piecewise function; lets [`integrate`] accept both.
pub trait Integrable {
    fn integrate(&self, a: f64, b: f64) -> crate::Result<f64>;
}

impl Integrable for StepFunction {
    fn integrate(&self, a: f64, b: f64) -> crate::Result<f64> {
        StepFunction::integrate(self, a, b)
    }
}

impl Integrable for PiecewisePoly {
    fn integrate(&self, a: f64, b: f64) -> crate::Result<f64> {
        PiecewisePoly::integrate(self, a, b)
    }
}

/// Exact `∫_a^b p` for a step function or piecewise quadratic.
pub fn integrate<P: Integrable + ?Sized>(p: &P, a: f64, b: f64) -> crate::Result<f64> {
    p.integrate(a, b)
}

/// Cumulative moments `M0(x) = ∫_lo^x f` and `M1(x) = ∫_lo^x y f(y) dy`.
///
/// Both are continuous piecewise polynomials (degree 1 and 2) sharing the
/// breakpoints of `f`.
pub fn cumulative_moments(f: &StepFunction) -> (PiecewisePoly, PiecewisePoly) {
    let mut m0 = Vec::with_capacity(f.num_pieces());
    let mut m1 = Vec::with_capacity(f.num_pieces());
    let (mut acc0, mut acc1) = (0.0, 0.0);
    for (a, b, v) in f.pieces() {
        // On [a, b]: M0 = acc0 + v (x − a), M1 = acc1 + v (x² − a²) / 2.
        m0.push([acc0 - v * a, v, 0.0]);
        m1.push([acc1 - 0.5 * v * a * a, 0.0, 0.5 * v]);
        acc0 += v * (b - a);
        acc1 += 0.5 * v * (b * b - a * a);
    }
    let bps = f.breakpoints().to_vec();
    (
        PiecewisePoly::new(bps.clone(), m0).expect("breakpoints come from a valid step function"),
        PiecewisePoly::new(bps, m1).expect("breakpoints come from a valid step function"),
    )
}
