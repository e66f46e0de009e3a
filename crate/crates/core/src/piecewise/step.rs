use serde::{Deserialize, Serialize};

use super::{merge_breakpoints, Interval};
use crate::error::{Error, Result};
use crate::tolerances::BREAKPOINT_MERGE;

/// A piecewise-constant function on a closed interval.
///
/// `values[i]` is the value on `(breakpoints[i], breakpoints[i + 1])`. Point
/// evaluation is right-continuous, except at the right endpoint where the last
/// piece is used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StepJson", into = "StepJson")]
pub struct StepFunction {
    domain: Interval,
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    interval: [f64; 2],
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl TryFrom<StepJson> for StepFunction {
    type Error = Error;

    fn try_from(raw: StepJson) -> Result<Self> {
        let f = StepFunction::new(raw.breakpoints, raw.values)?;
        let declared = Interval::try_from(raw.interval)?;
        if !declared.same_as(&f.domain) {
            return Err(Error::Parameter(format!(
                "interval {:?} does not match breakpoints [{}, {}]",
                raw.interval,
                f.domain.lo(),
                f.domain.hi()
            )));
        }
        Ok(f)
    }
}

impl From<StepFunction> for StepJson {
    fn from(f: StepFunction) -> Self {
        StepJson { interval: f.domain.into(), breakpoints: f.breakpoints, values: f.values }
    }
}

impl StepFunction {
    /// Builds a step function from breakpoints `b₀ < … < b_k` and `k` piece values.
    ///
    /// Pieces narrower than [`BREAKPOINT_MERGE`] are dropped and their
    /// breakpoints fused with the neighbour.
    pub fn new(breakpoints: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::Parameter("a step function needs at least two breakpoints".into()));
        }
        if values.len() + 1 != breakpoints.len() {
            return Err(Error::Parameter(format!(
                "{} breakpoints need {} values, got {}",
                breakpoints.len(),
                breakpoints.len() - 1,
                values.len()
            )));
        }
        if let Some(bad) = breakpoints.iter().chain(&values).find(|v| !v.is_finite()) {
            return Err(Error::Parameter(format!("non-finite entry {bad}")));
        }
        if breakpoints.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Parameter("breakpoints must be increasing".into()));
        }
        let domain = Interval::new(breakpoints[0], breakpoints[breakpoints.len() - 1])?;
        let (breakpoints, keep) = merge_breakpoints(&breakpoints);
        let values = keep.into_iter().map(|i| values[i]).collect();
        Ok(Self { domain, breakpoints, values })
    }

    pub fn constant(domain: Interval, value: f64) -> Self {
        Self { domain, breakpoints: vec![domain.lo(), domain.hi()], values: vec![value] }
    }

    pub fn zero(domain: Interval) -> Self {
        Self::constant(domain, 0.0)
    }

    /// Values on `n` equal cells of `domain`.
    pub fn from_cells(domain: Interval, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Parameter("need at least one cell".into()));
        }
        let bps = domain.grid(values.len() + 1);
        Self::new(bps, values)
    }

    /// Indicator of `[a, b] ∩ domain`.
    pub fn indicator(domain: Interval, a: f64, b: f64) -> Result<Self> {
        let a = a.max(domain.lo());
        let b = b.min(domain.hi());
        if a > b {
            return Err(Error::Parameter(format!("empty indicator support [{a}, {b}]")));
        }
        Self::new(vec![domain.lo(), a, b, domain.hi()], vec![0.0, 1.0, 0.0])
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn num_pieces(&self) -> usize {
        self.values.len()
    }

    /// `(left, right, value)` for every piece.
    pub fn pieces(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.breakpoints.windows(2).zip(&self.values).map(|(w, &v)| (w[0], w[1], v))
    }

    fn piece_index(&self, x: f64) -> usize {
        let k = self.values.len();
        let pos = self.breakpoints.partition_point(|&b| b <= x);
        pos.saturating_sub(1).min(k - 1)
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let x = self.domain.check(x)?;
        Ok(self.values[self.piece_index(x)])
    }

    /// Exact `∫_a^b f`.
    pub fn integrate(&self, a: f64, b: f64) -> Result<f64> {
        let (a, b) = self.domain.check_sub(a, b)?;
        Ok(self.moment_on(0, a, b))
    }

    /// Exact `∫ f` over the domain.
    pub fn integral(&self) -> f64 {
        self.pieces().map(|(a, b, v)| v * (b - a)).sum()
    }

    /// Exact `∫ y^k f(y) dy` over the domain, `k ≤ 2`.
    pub fn moment(&self, k: u32) -> f64 {
        self.moment_on(k, self.domain.lo(), self.domain.hi())
    }

    fn moment_on(&self, k: u32, a: f64, b: f64) -> f64 {
        let p = (k + 1) as f64;
        let prim = |x: f64| x.powi(k as i32 + 1) / p;
        self.pieces()
            .filter_map(|(l, r, v)| {
                let (l, r) = (l.max(a), r.min(b));
                (l < r).then(|| v * (prim(r) - prim(l)))
            })
            .sum()
    }

    pub fn l1_norm(&self) -> f64 {
        self.pieces().map(|(a, b, v)| v.abs() * (b - a)).sum()
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|&v| v >= 0.0)
    }

    /// `|{x : f(x) > t}|`.
    pub fn measure_above(&self, t: f64) -> f64 {
        self.pieces().filter(|&(_, _, v)| v > t).map(|(a, b, _)| b - a).sum()
    }

    /// Total variation of the zero extension of `f` to ℝ (end jumps included).
    pub fn total_variation_extended(&self) -> f64 {
        let inner: f64 = self.values.windows(2).map(|w| (w[1] - w[0]).abs()).sum();
        inner + self.values[0].abs() + self.values[self.values.len() - 1].abs()
    }

    pub fn scale(&self, k: f64) -> Self {
        Self {
            domain: self.domain,
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|v| v * k).collect(),
        }
    }

    /// `f + c`.
    pub fn shift(&self, c: f64) -> Self {
        Self {
            domain: self.domain,
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|v| v + c).collect(),
        }
    }

    /// `f − mean(f)`, the zero-mean representative.
    pub fn mean_subtracted(&self) -> Self {
        self.shift(-self.integral() / self.domain.len())
    }

    /// The same values on a translated copy of the domain starting at `lo`.
    pub fn translated(&self, lo: f64) -> Self {
        let d = lo - self.domain.lo();
        let breakpoints: Vec<f64> = self.breakpoints.iter().map(|b| b + d).collect();
        let domain = Interval::new(breakpoints[0], breakpoints[breakpoints.len() - 1])
            .expect("translation preserves a valid interval");
        Self { domain, breakpoints, values: self.values.clone() }
    }

    /// Even reflection of `f` on `[0, L]` to `[-L, L]`.
    pub fn even_reflection(&self) -> Result<Self> {
        if self.domain.lo() != 0.0 {
            return Err(Error::Domain(format!(
                "even reflection needs a domain starting at 0, got [{}, {}]",
                self.domain.lo(),
                self.domain.hi()
            )));
        }
        let mut bps: Vec<f64> = self.breakpoints.iter().rev().map(|b| -b).collect();
        bps.extend_from_slice(&self.breakpoints[1..]);
        let mut vals: Vec<f64> = self.values.iter().rev().copied().collect();
        vals.extend_from_slice(&self.values);
        Self::new(bps, vals)
    }

    /// Restriction to a subinterval of the domain.
    pub fn restrict(&self, to: Interval) -> Result<Self> {
        let (a, b) = self.domain.check_sub(to.lo(), to.hi())?;
        let mut bps = vec![a];
        let mut vals = Vec::new();
        for (l, r, v) in self.pieces() {
            let (l, r) = (l.max(a), r.min(b));
            if l < r {
                vals.push(v);
                bps.push(r);
            }
        }
        Self::new(bps, vals)
    }

    /// Pointwise product on the common refinement; both must share a domain.
    pub fn product(&self, other: &StepFunction) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    /// Applies `op` piecewise on the common refinement of two step functions.
    pub fn zip_with(&self, other: &StepFunction, op: impl Fn(f64, f64) -> f64) -> Result<Self> {
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
        let vals = bps
            .windows(2)
            .map(|w| {
                let m = 0.5 * (w[0] + w[1]);
                op(self.values[self.piece_index(m)], other.values[other.piece_index(m)])
            })
            .collect();
        Self::new(bps, vals)
    }

    /// Exact averages over `n` equal cells.
    pub fn cell_averages(&self, n: usize) -> Vec<f64> {
        let grid = self.domain.grid(n + 1);
        grid.windows(2).map(|w| self.moment_on(0, w[0], w[1]) / (w[1] - w[0])).collect()
    }
}
