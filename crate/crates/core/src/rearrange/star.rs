use serde::{Deserialize, Serialize};

use super::rearrangement::{decreasing_rearrangement, decreasing_value};
use crate::error::{Error, Result};
use crate::piecewise::{PiecewisePoly, StepFunction};

/// Piecewise-linear star function `f★(t) = ∫₀ᵗ f*` on `[0, |X|]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StarCurve {
    length: f64,
    nodes: Vec<f64>,
    values: Vec<f64>,
}

impl StarCurve {
    /// Nodes must start at 0, end at `length`, and increase; values start at 0.
    pub fn new(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if nodes.len() < 2 || nodes.len() != values.len() {
            return Err(Error::Parameter("a star curve needs matching node and value lists".into()));
        }
        if nodes[0] != 0.0 || values[0] != 0.0 {
            return Err(Error::Parameter("a star curve starts at (0, 0)".into()));
        }
        if nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Parameter("star curve nodes must increase".into()));
        }
        Ok(Self { length: nodes[nodes.len() - 1], nodes, values })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `f★(|X|) = ∫_X f`.
    pub fn total(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        let slack = 1e-12 * (1.0 + self.length);
        if !(t >= -slack && t <= self.length + slack) {
            return Err(Error::Parameter(format!("t = {t} outside [0, {}]", self.length)));
        }
        Ok(self.interpolate(t.clamp(0.0, self.length)))
    }

    fn interpolate(&self, t: f64) -> f64 {
        let i = self.nodes.partition_point(|&n| n <= t).clamp(1, self.nodes.len() - 1);
        let (t0, t1) = (self.nodes[i - 1], self.nodes[i]);
        let (s0, s1) = (self.values[i - 1], self.values[i]);
        s0 + (s1 - s0) * (t - t0) / (t1 - t0)
    }

    /// Successive slopes.
    pub fn slopes(&self) -> Vec<f64> {
        self.nodes
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(t, s)| (s[1] - s[0]) / (t[1] - t[0]))
            .collect()
    }

    pub fn is_concave(&self, tol: f64) -> bool {
        self.slopes().windows(2).all(|w| w[1] <= w[0] + tol)
    }
}

/// Exact star function of a step function; nodes at the rearranged breakpoints.
pub fn star_function(f: &StepFunction) -> StarCurve {
    let dec = decreasing_rearrangement(f);
    let mut values = Vec::with_capacity(dec.num_pieces() + 1);
    values.push(0.0);
    let mut acc = 0.0;
    for (a, b, v) in dec.pieces() {
        acc += v * (b - a);
        values.push(acc);
    }
    StarCurve::new(dec.breakpoints().to_vec(), values).expect("rearranged breakpoints increase from 0")
}

/// Sup-over-subsets star value on an `n_grid`-cell discretisation.
///
/// Takes the `⌊t/h⌋` largest cell averages plus the fractional share of the
/// next one. Independent of [`star_function`]; agrees with it to within
/// `2‖f‖_∞·h`.
pub fn star_function_bruteforce(f: &StepFunction, t: f64, n_grid: usize) -> Result<f64> {
    if n_grid < 16 {
        return Err(Error::Parameter(format!("n_grid must be at least 16, got {n_grid}")));
    }
    let total = f.domain().len();
    let slack = 1e-12 * (1.0 + total);
    if !(t >= -slack && t <= total + slack) {
        return Err(Error::Parameter(format!("t = {t} outside [0, {total}]")));
    }
    let t = t.clamp(0.0, total);
    let h = total / n_grid as f64;
    let mut avgs = f.cell_averages(n_grid);
    avgs.sort_by(|a, b| b.total_cmp(a));
    let cells = t / h;
    let whole = (cells.floor() as usize).min(n_grid);
    let frac = cells - whole as f64;
    let mut sum: f64 = avgs[..whole].iter().sum::<f64>() * h;
    if whole < n_grid {
        sum += frac * h * avgs[whole];
    }
    Ok(sum)
}

/// How a star function of a piecewise quadratic is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StarMethod {
    /// Exact level sets: `p★(t) = ∫(p − s)₊ + s·t` with `s = p*(t)`, at
    /// `nodes + 1` uniformly spaced `t`.
    Exact { nodes: usize },
    /// Sort `samples` midpoint values and prefix-sum; error `O(osc·|X|/samples)`.
    Sampled { samples: usize },
}

impl Default for StarMethod {
    fn default() -> Self {
        StarMethod::Exact { nodes: 512 }
    }
}

/// `p★(t)` by exact level-set computation.
pub fn poly_star_value(p: &PiecewisePoly, t: f64) -> f64 {
    let s = decreasing_value(p, t);
    p.excess_integral(s) + s * t.clamp(0.0, p.domain().len())
}

/// Star curve of a piecewise quadratic.
pub fn poly_star_curve(p: &PiecewisePoly, method: StarMethod) -> StarCurve {
    let total = p.domain().len();
    match method {
        StarMethod::Exact { nodes } => {
            let nodes = nodes.max(1);
            let ts: Vec<f64> = (0..=nodes)
                .map(|j| if j == nodes { total } else { total * j as f64 / nodes as f64 })
                .collect();
            let mut vals: Vec<f64> = ts.iter().map(|&t| poly_star_value(p, t)).collect();
            vals[0] = 0.0;
            StarCurve::new(ts, vals).expect("uniform nodes")
        }
        StarMethod::Sampled { samples } => {
            let n = samples.max(1);
            let h = total / n as f64;
            let lo = p.domain().lo();
            let mut ys: Vec<f64> = (0..n).map(|i| p.value_at(lo + h * (i as f64 + 0.5))).collect();
            ys.sort_by(|a, b| b.total_cmp(a));
            let mut ts = Vec::with_capacity(n + 1);
            let mut vals = Vec::with_capacity(n + 1);
            ts.push(0.0);
            vals.push(0.0);
            let mut acc = 0.0;
            for (i, y) in ys.iter().enumerate() {
                acc += y * h;
                ts.push(if i + 1 == n { total } else { h * (i + 1) as f64 });
                vals.push(acc);
            }
            StarCurve::new(ts, vals).expect("uniform nodes")
        }
    }
}

fn check_lengths(a: &StarCurve, b: &StarCurve) -> Result<()> {
    if (a.length - b.length).abs() > 1e-12 * (1.0 + a.length.abs()) {
        return Err(Error::Parameter(format!(
            "star curves on different lengths: {} vs {}",
            a.length, b.length
        )));
    }
    Ok(())
}

/// `min_t (b(t) − a(t))` over the union of both node sets.
pub fn star_margin(a: &StarCurve, b: &StarCurve) -> Result<f64> {
    check_lengths(a, b)?;
    let mut margin = f64::INFINITY;
    for &t in a.nodes.iter().chain(&b.nodes) {
        let t = t.min(a.length).min(b.length);
        margin = margin.min(b.interpolate(t) - a.interpolate(t));
    }
    Ok(margin)
}

/// `a ≤ b + tol` at every node of either curve.
pub fn star_dominates(a: &StarCurve, b: &StarCurve, tol: f64) -> Result<bool> {
    Ok(star_margin(a, b)? >= -tol)
}
