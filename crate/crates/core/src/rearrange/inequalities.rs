use serde::{Deserialize, Serialize};

use super::rearrangement::symmetric_decreasing_rearrangement;
use crate::error::{Error, Result};
use crate::piecewise::{Interval, StepFunction};
use crate::tolerances::HARDY_LITTLEWOOD;

/// One evaluation of a one-sided inequality `lhs ≤ rhs + slack`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`.
    pub margin: f64,
    /// Accepted numerical error on the margin.
    pub slack: f64,
    pub pass: bool,
}

impl InequalityCheck {
    fn new(lhs: f64, rhs: f64, slack: f64) -> Self {
        let margin = rhs - lhs;
        Self { lhs, rhs, margin, slack, pass: margin >= -slack }
    }
}

/// `∫fg ≤ ∫f#g#`, both sides exact.
pub fn hardy_littlewood_check(f: &StepFunction, g: &StepFunction) -> Result<InequalityCheck> {
    let lhs = f.product(g)?.integral();
    let fs = symmetric_decreasing_rearrangement(f);
    let gs = symmetric_decreasing_rearrangement(g);
    let rhs = fs.product(&gs)?.integral();
    Ok(InequalityCheck::new(lhs, rhs, HARDY_LITTLEWOOD))
}

/// `∫∫ f(x) g(y) h(x−y) dy dx ≤ ∫∫ f#(x) g#(y) h#(x−y) dy dx` for nonnegative
/// data extended by zero to ℝ.
///
/// The inner integral is exact; the outer one is a midpoint rule on about
/// `n_grid` cells aligned with the pieces of `f`. The reported slack is a
/// rigorous bound on the quadrature error of both sides.
pub fn riesz_sobolev_check(
    f: &StepFunction,
    g: &StepFunction,
    h: &StepFunction,
    n_grid: usize,
) -> Result<InequalityCheck> {
    for (name, s) in [("f", f), ("g", g), ("h", h)] {
        if !s.is_nonnegative() {
            return Err(Error::Precondition(format!("Riesz-Sobolev needs {name} ≥ 0")));
        }
    }
    check_grid(n_grid)?;
    let (lhs, el) = double_integral(f, g, h, None, n_grid);
    let (fs, gs, hs) = (
        symmetric_decreasing_rearrangement(f),
        symmetric_decreasing_rearrangement(g),
        symmetric_decreasing_rearrangement(h),
    );
    let (rhs, er) = double_integral(&fs, &gs, &hs, None, n_grid);
    Ok(InequalityCheck::new(lhs, rhs, el + er))
}

/// Periodic counterpart on `[-π, π]`: `h(x − y)` is read modulo 2π, and the
/// right side uses the 2π-periodic extension of each symmetric decreasing
/// rearrangement.
pub fn baernstein_check(
    f: &StepFunction,
    g: &StepFunction,
    h: &StepFunction,
    n_grid: usize,
) -> Result<InequalityCheck> {
    let rod = Interval::rod();
    for (name, s) in [("f", f), ("g", g), ("h", h)] {
        if !s.domain().same_as(&rod) {
            return Err(Error::Parameter(format!(
                "periodic check needs {name} on [-π, π], got [{}, {}]",
                s.domain().lo(),
                s.domain().hi()
            )));
        }
    }
    check_grid(n_grid)?;
    let period = rod.len();
    let (lhs, el) = double_integral(f, g, h, Some(period), n_grid);
    let (fs, gs, hs) = (
        symmetric_decreasing_rearrangement(f),
        symmetric_decreasing_rearrangement(g),
        symmetric_decreasing_rearrangement(h),
    );
    let (rhs, er) = double_integral(&fs, &gs, &hs, Some(period), n_grid);
    Ok(InequalityCheck::new(lhs, rhs, el + er))
}

fn check_grid(n_grid: usize) -> Result<()> {
    if n_grid < 16 {
        return Err(Error::Parameter(format!("n_grid must be at least 16, got {n_grid}")));
    }
    Ok(())
}

/// `∫ g(y) h(x − y) dy`, exact for step data.
fn inner(g: &StepFunction, h: &StepFunction, shifts: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for (a, b, gv) in g.pieces() {
        if gv == 0.0 {
            continue;
        }
        for &s in shifts {
            for (c, d, hv) in h.pieces() {
                // x − y ∈ [c + s, d + s]  ⇔  y ∈ [x − d − s, x − c − s]
                let l = a.max(x - d - s);
                let r = b.min(x - c - s);
                if r > l {
                    acc += gv * hv * (r - l);
                }
            }
        }
    }
    acc
}

/// Returns the double integral and a bound on its midpoint-rule error.
///
/// `ψ = g ∗ h` is piecewise linear; midpoint is exact on cells free of kinks
/// and errs by at most `|Δψ'|·w²/8` on a cell of width `w` containing a kink.
/// The total slope change of `ψ` is at most `TV(g)·TV(h)` per copy of `h`.
fn double_integral(
    f: &StepFunction,
    g: &StepFunction,
    h: &StepFunction,
    period: Option<f64>,
    n_grid: usize,
) -> (f64, f64) {
    let shifts: Vec<f64> = match period {
        Some(p) => vec![-p, 0.0, p],
        None => vec![0.0],
    };
    let total = f.domain().len();
    let mut value = 0.0;
    let mut widest: f64 = 0.0;
    for (a, b, fv) in f.pieces() {
        let cells = ((n_grid as f64 * (b - a) / total).round() as usize).max(1);
        let w = (b - a) / cells as f64;
        widest = widest.max(w);
        if fv == 0.0 {
            continue;
        }
        let mut piece = 0.0;
        for i in 0..cells {
            let x = a + w * (i as f64 + 0.5);
            piece += inner(g, h, &shifts, x);
        }
        value += fv * piece * w;
    }
    let tv_h = match period {
        Some(_) => {
            let vals = h.values();
            let inner: f64 = vals.windows(2).map(|p| (p[1] - p[0]).abs()).sum();
            inner + (vals[vals.len() - 1] - vals[0]).abs()
        }
        None => h.total_variation_extended(),
    };
    let bound = f.sup_norm() * widest * widest / 8.0
        * g.total_variation_extended()
        * tv_h
        * shifts.len() as f64;
    (value, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn ind(a: f64, b: f64, dom: Interval) -> StepFunction {
        StepFunction::indicator(dom, a, b).unwrap()
    }

    #[test]
    fn hardy_littlewood_on_opposite_halves() {
        let f = ind(-PI, 0.0, Interval::rod());
        let g = ind(0.0, PI, Interval::rod());
        let r = hardy_littlewood_check(&f, &g).unwrap();
        assert!(r.lhs.abs() < 1e-15);
        assert!((r.rhs - PI).abs() < 1e-14);
        assert!(r.pass);
    }

    #[test]
    fn hardy_littlewood_self_pairing_preserves_square_integral() {
        let f = StepFunction::from_cells(Interval::rod(), vec![0.5, 2.0, -1.0, 3.0]).unwrap();
        let r = hardy_littlewood_check(&f, &f).unwrap();
        let sq = f.product(&f).unwrap().integral();
        assert!((r.lhs - sq).abs() < 1e-13 && (r.rhs - sq).abs() < 1e-13);
        let c = StepFunction::constant(Interval::rod(), 2.0);
        let r = hardy_littlewood_check(&c, &f).unwrap();
        assert!((r.lhs - r.rhs).abs() < 1e-13);
    }

    #[test]
    fn hardy_littlewood_rejects_domain_mismatch() {
        let f = StepFunction::constant(Interval::rod(), 1.0);
        let g = StepFunction::constant(Interval::half_rod(), 1.0);
        assert!(matches!(hardy_littlewood_check(&f, &g), Err(Error::Parameter(_))));
    }

    #[test]
    fn riesz_sobolev_symmetric_data_is_an_equality() {
        let d = Interval::new(-0.5, 0.5).unwrap();
        let one = StepFunction::constant(d, 1.0);
        let r = riesz_sobolev_check(&one, &one, &one, 4096).unwrap();
        // ∫∫ χ(x)χ(y)χ(x−y) over unit intervals centred at 0 equals 3/4.
        assert!((r.lhs - 0.75).abs() <= r.slack + 1e-12);
        assert!((r.lhs - r.rhs).abs() < 1e-12);
    }

    #[test]
    fn riesz_sobolev_translation_invariance_and_gain() {
        let unit = Interval::new(0.0, 1.0).unwrap();
        let f = StepFunction::constant(unit, 1.0);
        let h = StepFunction::constant(Interval::new(-0.5, 0.5).unwrap(), 1.0);
        // Common translation of f and g changes nothing: both sides are the area of
        // {x, y ∈ [0, 1] : |x − y| ≤ 1/2} = 3/4.
        let r = riesz_sobolev_check(&f, &f, &h, 4096).unwrap();
        assert!((r.lhs - 0.75).abs() <= r.slack + 1e-12);
        assert!((r.lhs - r.rhs).abs() < 1e-12);

        // Offset supports: {x ∈ [0,1], y ∈ [1,2], y − x ≤ 1/2} has area 1/8.
        let g = StepFunction::constant(Interval::new(1.0, 2.0).unwrap(), 1.0);
        let r = riesz_sobolev_check(&f, &g, &h, 4096).unwrap();
        assert!((r.lhs - 0.125).abs() <= r.slack + 1e-12);
        assert!((r.rhs - 0.75).abs() <= r.slack + 1e-12);
        assert!(r.pass && r.lhs < r.rhs);
    }

    #[test]
    fn riesz_sobolev_rejects_negative_data() {
        let f = StepFunction::constant(Interval::rod(), -1.0);
        let g = StepFunction::constant(Interval::rod(), 1.0);
        assert!(matches!(riesz_sobolev_check(&f, &g, &g, 64), Err(Error::Precondition(_))));
    }

    #[test]
    fn zero_f_gives_zero_on_both_sides() {
        let z = StepFunction::zero(Interval::rod());
        let g = StepFunction::from_cells(Interval::rod(), vec![1.0, 3.0, 0.5]).unwrap();
        let r = riesz_sobolev_check(&z, &g, &g, 256).unwrap();
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
    }

    #[test]
    fn periodic_constant_kernel_factorises() {
        let f = ind(-PI, 0.0, Interval::rod());
        let g = StepFunction::from_cells(Interval::rod(), vec![0.0, 2.0, 1.0, 0.0]).unwrap();
        let one = StepFunction::constant(Interval::rod(), 1.0);
        let r = baernstein_check(&f, &g, &one, 4096).unwrap();
        let expected = f.integral() * g.integral();
        assert!((r.lhs - expected).abs() < 1e-11);
        assert!((r.rhs - expected).abs() < 1e-11);
    }

    #[test]
    fn periodic_check_on_already_symmetric_data() {
        let f = ind(-1.0, 1.0, Interval::rod());
        let h = StepFunction::from_cells(Interval::rod(), vec![0.0, 1.0, 2.0, 2.0, 1.0, 0.0]).unwrap();
        let r = baernstein_check(&f, &f, &h, 4096).unwrap();
        assert!((r.lhs - r.rhs).abs() < 1e-12);
        let off = StepFunction::constant(Interval::half_rod(), 1.0);
        assert!(baernstein_check(&off, &f, &h, 64).is_err());
    }
}
