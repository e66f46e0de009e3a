use serde::{Deserialize, Serialize};

use super::quadrature::adaptive_simpson;
use super::{merge_breakpoints, Interval};
use crate::error::{Error, Result};
use crate::tolerances::{BREAKPOINT_MERGE, CONTINUITY, QUADRATURE_REL};

/// `c0 + c1·x + c2·x²` in the global coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Quadratic(pub [f64; 3]);

impl Quadratic {
    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        let [c0, c1, c2] = self.0;
        c0 + x * (c1 + x * c2)
    }

    #[inline]
    pub fn slope(&self, x: f64) -> f64 {
        self.0[1] + 2.0 * self.0[2] * x
    }

    fn primitive(&self, x: f64) -> f64 {
        let [c0, c1, c2] = self.0;
        x * (c0 + x * (c1 / 2.0 + x * c2 / 3.0))
    }

    pub fn integrate(&self, a: f64, b: f64) -> f64 {
        self.primitive(b) - self.primitive(a)
    }

    fn square_primitive(&self, x: f64) -> f64 {
        // (c0 + c1 x + c2 x²)² = c0² + 2c0c1 x + (c1² + 2c0c2) x² + 2c1c2 x³ + c2² x⁴
        let [c0, c1, c2] = self.0;
        let k = [c0 * c0, 2.0 * c0 * c1, c1 * c1 + 2.0 * c0 * c2, 2.0 * c1 * c2, c2 * c2];
        let mut acc = 0.0;
        for (i, ki) in k.iter().enumerate().rev() {
            acc = acc * x + ki / (i + 1) as f64;
        }
        acc * x
    }

    /// Interior critical point, if any lies strictly inside `(a, b)`.
    pub fn vertex_in(&self, a: f64, b: f64) -> Option<f64> {
        let [_, c1, c2] = self.0;
        if c2 == 0.0 {
            return None;
        }
        let x = -c1 / (2.0 * c2);
        (x > a && x < b).then_some(x)
    }

    /// Sorted roots of `q(x) = level` strictly inside `(a, b)`.
    pub fn crossings(&self, level: f64, a: f64, b: f64) -> ([f64; 2], usize) {
        let [c0, c1, c2] = self.0;
        let c0 = c0 - level;
        let mut out = [0.0; 2];
        let mut n = 0;
        let mut push = |r: f64| {
            if r > a && r < b {
                out[n] = r;
                n += 1;
            }
        };
        if c2 == 0.0 {
            if c1 != 0.0 {
                push(-c0 / c1);
            }
        } else {
            let disc = c1 * c1 - 4.0 * c2 * c0;
            if disc >= 0.0 {
                let q = -0.5 * (c1 + c1.signum_or_one() * disc.sqrt());
                let (r1, r2) = if q == 0.0 { (0.0, 0.0) } else { (q / c2, c0 / q) };
                let (r1, r2) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
                push(r1);
                if r2 != r1 {
                    push(r2);
                }
            }
        }
        (out, n)
    }

    /// Splits `[a, b]` at the level crossings; yields sign-constant subintervals.
    fn segments(&self, level: f64, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> {
        let (roots, n) = self.crossings(level, a, b);
        let mut cuts = [a, b, b, b];
        cuts[1..=n].copy_from_slice(&roots[..n]);
        cuts[n + 1] = b;
        (0..=n).map(move |i| (cuts[i], cuts[i + 1])).filter(|(l, r)| r > l)
    }
}

trait SignumOrOne {
    fn signum_or_one(self) -> f64;
}

impl SignumOrOne for f64 {
    fn signum_or_one(self) -> f64 {
        if self < 0.0 {
            -1.0
        } else {
            1.0
        }
    }
}

/// Global extrema of a piecewise quadratic over its closed domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extrema {
    pub min: f64,
    pub argmin: f64,
    pub max: f64,
    pub argmax: f64,
}

impl Extrema {
    pub fn osc(&self) -> f64 {
        self.max - self.min
    }
}

/// Exponent of an Lᵖ norm, `1 ≤ p ≤ ∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormExponent {
    Finite(f64),
    Infinity,
}

impl NormExponent {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::Parameter(format!("Lᵖ exponent must satisfy p ≥ 1, got {p}")));
        }
        Ok(if p.is_infinite() { Self::Infinity } else { Self::Finite(p) })
    }
}

/// A piecewise polynomial of degree at most two on a closed interval.
///
/// Piece `i` covers `[breakpoints[i], breakpoints[i + 1]]` and is evaluated as
/// `c0 + c1·x + c2·x²` with `coeffs[i] = [c0, c1, c2]` in the global
/// coordinate. At an interior breakpoint the right piece is used; at the right
/// endpoint the last piece.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct PiecewisePoly {
    domain: Interval,
    breakpoints: Vec<f64>,
    coeffs: Vec<[f64; 3]>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    interval: [f64; 2],
    breakpoints: Vec<f64>,
    coeffs: Vec<[f64; 3]>,
}

impl TryFrom<PolyJson> for PiecewisePoly {
    type Error = Error;

    fn try_from(raw: PolyJson) -> Result<Self> {
        let p = PiecewisePoly::new(raw.breakpoints, raw.coeffs)?;
        let declared = Interval::try_from(raw.interval)?;
        if !declared.same_as(&p.domain) {
            return Err(Error::Parameter(format!(
                "interval {:?} does not match breakpoints [{}, {}]",
                raw.interval,
                p.domain.lo(),
                p.domain.hi()
            )));
        }
        Ok(p)
    }
}

impl From<PiecewisePoly> for PolyJson {
    fn from(p: PiecewisePoly) -> Self {
        PolyJson { interval: p.domain.into(), breakpoints: p.breakpoints, coeffs: p.coeffs }
    }
}

impl PiecewisePoly {
    pub fn new(breakpoints: Vec<f64>, coeffs: Vec<[f64; 3]>) -> Result<Self> {
        if breakpoints.len() < 2 || coeffs.len() + 1 != breakpoints.len() {
            return Err(Error::Parameter(format!(
                "{} breakpoints cannot carry {} coefficient triples",
                breakpoints.len(),
                coeffs.len()
            )));
        }
        if breakpoints.iter().chain(coeffs.iter().flatten()).any(|v| !v.is_finite()) {
            return Err(Error::Parameter("non-finite breakpoint or coefficient".into()));
        }
        if breakpoints.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Parameter("breakpoints must be increasing".into()));
        }
        let domain = Interval::new(breakpoints[0], breakpoints[breakpoints.len() - 1])?;
        let (breakpoints, keep) = merge_breakpoints(&breakpoints);
        let coeffs = keep.into_iter().map(|i| coeffs[i]).collect();
        Ok(Self { domain, breakpoints, coeffs })
    }

    pub fn constant(domain: Interval, c: f64) -> Self {
        Self { domain, breakpoints: vec![domain.lo(), domain.hi()], coeffs: vec![[c, 0.0, 0.0]] }
    }

    pub fn zero(domain: Interval) -> Self {
        Self::constant(domain, 0.0)
    }

    /// A single polynomial over the whole domain.
    pub fn polynomial(domain: Interval, coeffs: [f64; 3]) -> Self {
        Self { domain, breakpoints: vec![domain.lo(), domain.hi()], coeffs: vec![coeffs] }
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn coeffs(&self) -> &[[f64; 3]] {
        &self.coeffs
    }

    pub fn num_pieces(&self) -> usize {
        self.coeffs.len()
    }

    pub(crate) fn quads(&self) -> impl Iterator<Item = (f64, f64, Quadratic)> + '_ {
        self.breakpoints.windows(2).zip(&self.coeffs).map(|(w, &c)| (w[0], w[1], Quadratic(c)))
    }

    fn piece_index(&self, x: f64) -> usize {
        let pos = self.breakpoints.partition_point(|&b| b <= x);
        pos.saturating_sub(1).min(self.coeffs.len() - 1)
    }

    pub(crate) fn value_at(&self, x: f64) -> f64 {
        Quadratic(self.coeffs[self.piece_index(x)]).eval(x)
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let x = self.domain.check(x)?;
        Ok(self.value_at(x))
    }

    /// One-sided derivative using the same piece selection as [`eval`](Self::eval).
    pub fn derivative(&self, x: f64) -> Result<f64> {
        let x = self.domain.check(x)?;
        Ok(Quadratic(self.coeffs[self.piece_index(x)]).slope(x))
    }

    /// Largest jump in value across interior breakpoints.
    pub fn max_jump(&self) -> f64 {
        self.quads()
            .zip(self.quads().skip(1))
            .map(|((_, b, q), (_, _, r))| (q.eval(b) - r.eval(b)).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_continuous(&self) -> bool {
        self.max_jump() <= CONTINUITY
    }

    /// Exact `∫_a^b p`.
    pub fn integrate(&self, a: f64, b: f64) -> Result<f64> {
        let (a, b) = self.domain.check_sub(a, b)?;
        Ok(self
            .quads()
            .filter_map(|(l, r, q)| {
                let (l, r) = (l.max(a), r.min(b));
                (l < r).then(|| q.integrate(l, r))
            })
            .sum())
    }

    pub fn integral(&self) -> f64 {
        self.quads().map(|(a, b, q)| q.integrate(a, b)).sum()
    }

    pub fn mean(&self) -> f64 {
        self.integral() / self.domain.len()
    }

    /// Global extrema; candidates are endpoints, both one-sided values at each
    /// breakpoint, and interior vertices. Ties go to the smallest argument.
    pub fn extrema(&self) -> Extrema {
        let mut ext = Extrema { min: f64::INFINITY, argmin: 0.0, max: f64::NEG_INFINITY, argmax: 0.0 };
        let mut visit = |x: f64, y: f64| {
            if y > ext.max {
                ext.max = y;
                ext.argmax = x;
            }
            if y < ext.min {
                ext.min = y;
                ext.argmin = x;
            }
        };
        for (a, b, q) in self.quads() {
            visit(a, q.eval(a));
            if let Some(v) = q.vertex_in(a, b) {
                visit(v, q.eval(v));
            }
            visit(b, q.eval(b));
        }
        ext
    }

    /// `‖p‖_{Lᵖ}` for `1 ≤ p ≤ ∞`.
    ///
    /// Exact for `p ∈ {1, 2, ∞}`; otherwise adaptive quadrature between sign
    /// changes.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        Ok(match NormExponent::new(p)? {
            NormExponent::Infinity => {
                let e = self.extrema();
                e.min.abs().max(e.max.abs())
            }
            NormExponent::Finite(1.0) => self.abs_integral(),
            NormExponent::Finite(2.0) => self.square_integral().max(0.0).sqrt(),
            NormExponent::Finite(p) => {
                let mut total = 0.0;
                for (a, b, q) in self.quads() {
                    for (l, r) in q.segments(0.0, a, b) {
                        total += adaptive_simpson(|x| q.eval(x).abs().powf(p), l, r, QUADRATURE_REL);
                    }
                }
                total.powf(1.0 / p)
            }
        })
    }

    /// Exact `∫|p|`.
    pub fn abs_integral(&self) -> f64 {
        let mut total = 0.0;
        for (a, b, q) in self.quads() {
            for (l, r) in q.segments(0.0, a, b) {
                total += q.integrate(l, r).abs();
            }
        }
        total
    }

    /// Exact `∫p²`.
    pub fn square_integral(&self) -> f64 {
        self.quads().map(|(a, b, q)| q.square_primitive(b) - q.square_primitive(a)).sum()
    }

    /// Exact `∫ max(p − level, 0)`.
    pub fn excess_integral(&self, level: f64) -> f64 {
        let mut total = 0.0;
        for (a, b, q) in self.quads() {
            for (l, r) in q.segments(level, a, b) {
                let m = 0.5 * (l + r);
                if q.eval(m) > level {
                    total += q.integrate(l, r) - level * (r - l);
                }
            }
        }
        total
    }

    /// `|{x : p(x) > level}|`, exact up to root rounding.
    pub fn measure_above(&self, level: f64) -> f64 {
        let mut total = 0.0;
        for (a, b, q) in self.quads() {
            for (l, r) in q.segments(level, a, b) {
                if q.eval(0.5 * (l + r)) > level {
                    total += r - l;
                }
            }
        }
        total
    }

    /// Combines two piecewise polynomials on the union of their breakpoints.
    pub fn zip_with(
        &self,
        other: &PiecewisePoly,
        op: impl Fn([f64; 3], [f64; 3]) -> [f64; 3],
    ) -> Result<Self> {
        if !self.domain.same_as(&other.domain) {
            return Err(Error::Parameter(format!(
                "domain mismatch: [{}, {}] vs [{}, {}]",
                self.domain.lo(),
                self.domain.hi(),
                other.domain.lo(),
                other.domain.hi()
            )));
        }
        let mut bps: Vec<f64> = self.breakpoints.iter().chain(&other.breakpoints).copied().collect();
        bps.sort_by(f64::total_cmp);
        bps.dedup_by(|a, b| (*a - *b).abs() < BREAKPOINT_MERGE);
        let coeffs = bps
            .windows(2)
            .map(|w| {
                let m = 0.5 * (w[0] + w[1]);
                op(self.coeffs[self.piece_index(m)], other.coeffs[other.piece_index(m)])
            })
            .collect();
        Self::new(bps, coeffs)
    }

    pub fn sub(&self, other: &PiecewisePoly) -> Result<Self> {
        self.zip_with(other, |a, b| [a[0] - b[0], a[1] - b[1], a[2] - b[2]])
    }

    pub fn add(&self, other: &PiecewisePoly) -> Result<Self> {
        self.zip_with(other, |a, b| [a[0] + b[0], a[1] + b[1], a[2] + b[2]])
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map_coeffs(|[c0, c1, c2]| [k * c0, k * c1, k * c2])
    }

    /// `p(x) + c0 + c1·x`.
    pub fn add_affine(&self, c0: f64, c1: f64) -> Self {
        self.map_coeffs(|[a0, a1, a2]| [a0 + c0, a1 + c1, a2])
    }

    fn map_coeffs(&self, f: impl Fn([f64; 3]) -> [f64; 3]) -> Self {
        Self {
            domain: self.domain,
            breakpoints: self.breakpoints.clone(),
            coeffs: self.coeffs.iter().map(|&c| f(c)).collect(),
        }
    }

    /// `‖p − q‖_∞` over the shared domain.
    pub fn sup_distance(&self, other: &PiecewisePoly) -> Result<f64> {
        let d = self.sub(other)?.extrema();
        Ok(d.min.abs().max(d.max.abs()))
    }

    /// Restriction to a subinterval.
    pub fn restrict(&self, to: Interval) -> Result<Self> {
        let (a, b) = self.domain.check_sub(to.lo(), to.hi())?;
        let mut bps = vec![a];
        let mut coeffs = Vec::new();
        for (l, r, q) in self.quads() {
            let (l, r) = (l.max(a), r.min(b));
            if l < r {
                coeffs.push(q.0);
                bps.push(r);
            }
        }
        Self::new(bps, coeffs)
    }

    /// `(x, p(x))` at `n` uniformly spaced points including both endpoints.
    pub fn sample(&self, n: usize) -> Vec<(f64, f64)> {
        self.domain.grid(n).into_iter().map(|x| (x, self.value_at(x))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn identity_on_half_rod() -> PiecewisePoly {
        PiecewisePoly::polynomial(Interval::half_rod(), [0.0, 1.0, 0.0])
    }

    #[test]
    fn zero_function_evaluates_to_zero() {
        let p = PiecewisePoly::zero(Interval::rod());
        assert_eq!(p.eval(1.0).unwrap(), 0.0);
        for pexp in [1.0, 2.0, 3.5, f64::INFINITY] {
            assert_eq!(p.lp_norm(pexp).unwrap(), 0.0);
        }
    }

    #[test]
    fn eval_outside_domain_is_an_error() {
        let p = identity_on_half_rod();
        assert!(matches!(p.eval(-0.1), Err(Error::Domain(_))));
        assert!(matches!(p.integrate(0.0, 4.0), Err(Error::Domain(_))));
    }

    #[test]
    fn norms_of_simple_functions() {
        let one = PiecewisePoly::constant(Interval::half_rod(), 1.0);
        assert!((one.lp_norm(2.0).unwrap() - PI.sqrt()).abs() < 1e-15);
        let x = identity_on_half_rod();
        assert!((x.lp_norm(1.0).unwrap() - PI * PI / 2.0).abs() < 1e-14);
        // ∫₀^π x³ dx = π⁴/4
        assert!((x.lp_norm(3.0).unwrap() - (PI.powi(4) / 4.0).cbrt()).abs() < 1e-9);
        assert!(matches!(x.lp_norm(0.5), Err(Error::Parameter(_))));
    }

    #[test]
    fn l1_norm_splits_at_sign_changes() {
        // x on [-1, 2]: ∫|x| = 1/2 + 2
        let p = PiecewisePoly::polynomial(Interval::new(-1.0, 2.0).unwrap(), [0.0, 1.0, 0.0]);
        assert!((p.lp_norm(1.0).unwrap() - 2.5).abs() < 1e-15);
        // x² − 1 on [-2, 2]: ∫|x²−1| = 4
        let q = PiecewisePoly::polynomial(Interval::new(-2.0, 2.0).unwrap(), [-1.0, 0.0, 1.0]);
        assert!((q.abs_integral() - 4.0).abs() < 1e-14);
        assert!((q.measure_above(0.0) - 2.0).abs() < 1e-15);
        assert!((q.excess_integral(0.0) - 8.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn extrema_finds_interior_vertex_and_breaks_ties_left() {
        let p = PiecewisePoly::polynomial(Interval::rod(), [1.0, 0.0, -1.0]);
        let e = p.extrema();
        assert_eq!(e.argmax, 0.0);
        assert_eq!(e.max, 1.0);
        assert_eq!(e.argmin, -PI);
        let c = PiecewisePoly::constant(Interval::rod(), 5.0).extrema();
        assert_eq!((c.min, c.max, c.argmin, c.argmax), (5.0, 5.0, -PI, -PI));
    }

    #[test]
    fn square_integral_is_exact() {
        // (1 + x − x²)² over [0, 1] = 1 + 1/3 + 1/5 + 2/2 − 2/3 − 2/4 = 41/30
        let p = PiecewisePoly::polynomial(Interval::new(0.0, 1.0).unwrap(), [1.0, 1.0, -1.0]);
        assert!((p.square_integral() - 41.0 / 30.0).abs() < 1e-14);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let p = PiecewisePoly::new(vec![-PI, 0.1, PI], vec![[0.1, 1.0 / 3.0, -0.5], [PI, 2.0, 1e-17]]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let q: PiecewisePoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn sub_and_sup_distance() {
        let p = PiecewisePoly::polynomial(Interval::rod(), [0.0, 1.0, 0.0]);
        let q = PiecewisePoly::new(vec![-PI, 0.0, PI], vec![[0.0, 0.0, 0.0], [0.0, 1.0, 0.0]]).unwrap();
        assert!((p.sup_distance(&q).unwrap() - PI).abs() < 1e-15);
    }
}
