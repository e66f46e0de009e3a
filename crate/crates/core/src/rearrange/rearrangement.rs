use crate::piecewise::{Interval, PiecewisePoly, StepFunction};

/// Decreasing rearrangement `f*` on `[0, |X|]`.
///
/// Pieces are sorted by value, largest first; equal values keep their original
/// order. Widths are preserved, so `f*` is equimeasurable with `f`.
pub fn decreasing_rearrangement(f: &StepFunction) -> StepFunction {
    let mut pieces: Vec<(f64, f64)> = f.pieces().map(|(a, b, v)| (b - a, v)).collect();
    pieces.sort_by(|x, y| y.1.total_cmp(&x.1));
    let total = f.domain().len();
    let mut bps = Vec::with_capacity(pieces.len() + 1);
    bps.push(0.0);
    let mut acc = 0.0;
    for (w, _) in &pieces {
        acc += w;
        bps.push(acc);
    }
    *bps.last_mut().unwrap() = total;
    let vals = pieces.into_iter().map(|(_, v)| v).collect();
    StepFunction::new(bps, vals).expect("rearranged pieces form a valid step function")
}

/// Symmetric decreasing rearrangement `f#(t) = f*(2|t|)` on `[-|X|/2, |X|/2]`.
pub fn symmetric_decreasing_rearrangement(f: &StepFunction) -> StepFunction {
    let star = decreasing_rearrangement(f);
    let half = 0.5 * f.domain().len();
    let cuts: Vec<f64> = star.breakpoints().iter().map(|t| 0.5 * t).collect();
    let vals = star.values();
    let m = vals.len();

    let mut bps = Vec::with_capacity(2 * m);
    let mut out = Vec::with_capacity(2 * m - 1);
    bps.push(-half);
    for j in (1..m).rev() {
        bps.push(-cuts[j]);
        out.push(vals[j]);
    }
    out.push(vals[0]);
    for cut in &cuts[1..m] {
        bps.push(*cut);
        out.push(vals[out.len() + 1 - m]);
    }
    bps.push(half);
    StepFunction::new(bps, out).expect("mirrored pieces form a valid step function")
}

/// `p*(t) = inf{s : |{p > s}| ≤ t}` for a piecewise quadratic, by bisection on
/// the exact distribution function.
pub fn decreasing_value(p: &PiecewisePoly, t: f64) -> f64 {
    let ext = p.extrema();
    let total = p.domain().len();
    if t <= 0.0 {
        return ext.max;
    }
    if t >= total {
        return ext.min;
    }
    let (mut lo, mut hi) = (ext.min, ext.max);
    if p.measure_above(lo) <= t {
        return lo;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if p.measure_above(mid) <= t {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// `p#(x) = p*(2|x|)` on `[-|X|/2, |X|/2]`.
pub fn symmetric_value(p: &PiecewisePoly, x: f64) -> f64 {
    decreasing_value(p, 2.0 * x.abs())
}

/// Samples of `p#` on the centred copy of `p`'s domain.
pub fn symmetric_samples(p: &PiecewisePoly, n: usize) -> Vec<(f64, f64)> {
    let half = 0.5 * p.domain().len();
    let centred = Interval::new(-half, half).expect("positive length");
    centred.grid(n).into_iter().map(|x| (x, symmetric_value(p, x))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn thirds(vals: Vec<f64>) -> StepFunction {
        StepFunction::from_cells(Interval::half_rod(), vals).unwrap()
    }

    #[test]
    fn sorts_pieces_descending() {
        let f = thirds(vec![1.0, 3.0, 2.0]);
        let d = decreasing_rearrangement(&f);
        assert_eq!(d.values(), &[3.0, 2.0, 1.0]);
        let w: Vec<f64> = d.pieces().map(|(a, b, _)| b - a).collect();
        for wi in w {
            assert!((wi - PI / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn decreasing_input_is_a_fixed_point_up_to_translation() {
        let f = StepFunction::new(vec![2.0, 2.5, 4.0], vec![5.0, -1.0]).unwrap();
        let d = decreasing_rearrangement(&f);
        assert_eq!(d, f.translated(0.0));
    }

    #[test]
    fn left_half_indicator_rearranges_to_front() {
        let f = StepFunction::indicator(Interval::rod(), -PI, 0.0).unwrap();
        let d = decreasing_rearrangement(&f);
        assert_eq!(d.domain(), Interval::new(0.0, 2.0 * PI).unwrap());
        assert_eq!(d.values(), &[1.0, 0.0]);
        assert!((d.breakpoints()[1] - PI).abs() < 1e-15);
    }

    #[test]
    fn symmetric_rearrangement_of_half_measure_set() {
        let f = StepFunction::indicator(Interval::rod(), -1.0, PI - 1.0).unwrap();
        let s = symmetric_decreasing_rearrangement(&f);
        // Zero pieces keep their identity, so compare as functions.
        for (x, want) in [(-3.0, 0.0), (-PI / 2.0 - 1e-9, 0.0), (-PI / 2.0 + 1e-9, 1.0), (0.0, 1.0), (PI / 2.0 - 1e-9, 1.0), (PI / 2.0 + 1e-9, 0.0)] {
            assert_eq!(s.eval(x).unwrap(), want, "at x = {x}");
        }
        assert!((s.integral() - PI).abs() < 1e-14);
    }

    #[test]
    fn symmetric_rearrangement_centres_the_peak() {
        let f = StepFunction::from_cells(Interval::half_rod(), vec![0.0, 1.0]).unwrap();
        let s = symmetric_decreasing_rearrangement(&f);
        assert_eq!(s.domain(), Interval::new(-PI / 2.0, PI / 2.0).unwrap());
        assert_eq!(s.eval(0.0).unwrap(), 1.0);
        assert_eq!(s.eval(PI / 4.0 - 1e-9).unwrap(), 1.0);
        assert_eq!(s.eval(PI / 4.0 + 1e-9).unwrap(), 0.0);
        assert_eq!(s.eval(-PI / 4.0 - 1e-9).unwrap(), 0.0);
    }

    #[test]
    fn constant_is_its_own_rearrangement() {
        let f = StepFunction::constant(Interval::rod(), 2.5);
        let s = symmetric_decreasing_rearrangement(&f);
        assert_eq!(s, f);
    }

    #[test]
    fn decreasing_value_of_a_parabola() {
        // p = 1 − x² on [-1, 1]: |{p > s}| = 2√(1 − s), so p*(t) = 1 − t²/4.
        let p = PiecewisePoly::polynomial(Interval::new(-1.0, 1.0).unwrap(), [1.0, 0.0, -1.0]);
        for t in [0.0, 0.3, 1.0, 1.7, 2.0] {
            assert!((decreasing_value(&p, t) - (1.0 - t * t / 4.0)).abs() < 1e-13);
        }
        assert!((symmetric_value(&p, -0.4) - (1.0 - 0.16)).abs() < 1e-13);
    }
}
