use std::cmp::Ordering;
use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compare::corpus::instance_rng;
use crate::error::{Error, Result};
use crate::piecewise::{Interval, StepFunction};
use crate::solver::{robin_solve, RobinParam};

/// Largest cell count searched exhaustively.
pub const EXHAUSTIVE_MAX_CELLS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Total source length; a multiple of the cell width.
    pub measure: f64,
    /// Random starts for the local search.
    pub starts: usize,
    pub seed: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { measure: PI, starts: 64, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub alpha: f64,
    pub n_cells: usize,
    /// Heated cells, ascending; cell `i` is `[−π + iw, −π + (i+1)w]`.
    pub cells: Vec<usize>,
    pub gap: f64,
    pub exhaustive: bool,
    /// Best single run of consecutive cells and its gap.
    pub interval_cells: Vec<usize>,
    pub interval_gap: f64,
    pub evaluated: u64,
}

impl SearchResult {
    pub fn source(&self) -> StepFunction {
        cell_source(self.n_cells, &self.cells)
    }
}

fn cell_source(n: usize, cells: &[usize]) -> StepFunction {
    let mut v = vec![0.0; n];
    for &c in cells {
        v[c] = 1.0;
    }
    StepFunction::from_cells(Interval::rod(), v).expect("n ≥ 1 cells")
}

fn mask_cells(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

struct Evaluator {
    alpha: RobinParam,
    n: usize,
}

impl Evaluator {
    fn gap(&self, cells: &[usize]) -> f64 {
        robin_solve(&cell_source(self.n, cells), self.alpha)
            .expect("indicator sources on the rod always solve")
            .extrema()
            .osc()
    }
}

/// Larger gap wins; gaps within `tol` tie and the lexicographically smaller
/// cell list wins.
fn better(a: &(f64, Vec<usize>), b: &(f64, Vec<usize>), tol: f64) -> bool {
    if (a.0 - b.0).abs() <= tol {
        a.1.cmp(&b.1) == Ordering::Less
    } else {
        a.0 > b.0
    }
}

fn tie_tol(gap: f64) -> f64 {
    1e-12 * (1.0 + gap.abs())
}

/// Searches indicator sources made of whole cells of an `n_cells` partition.
pub fn extremal_search(alpha: RobinParam, n_cells: usize) -> Result<SearchResult> {
    extremal_search_with(alpha, n_cells, &SearchOptions::default())
}

pub fn extremal_search_with(alpha: RobinParam, n_cells: usize, opts: &SearchOptions) -> Result<SearchResult> {
    if n_cells < 8 || !n_cells.is_multiple_of(2) || n_cells > 64 {
        return Err(Error::Parameter(format!("cell count must be even and in [8, 64], got {n_cells}")));
    }
    let w = 2.0 * PI / n_cells as f64;
    let ratio = opts.measure / w;
    let k = ratio.round();
    if opts.measure.is_nan() || opts.measure <= 0.0 || (ratio - k).abs() > 1e-9 * ratio.max(1.0) || k > n_cells as f64 {
        return Err(Error::Parameter(format!(
            "measure {} is not a positive multiple of the cell width {w} up to 2π",
            opts.measure
        )));
    }
    let k = k as usize;
    let ev = Evaluator { alpha, n: n_cells };

    let mut interval = (f64::NEG_INFINITY, Vec::new());
    for j in 0..=n_cells - k {
        let cells: Vec<usize> = (j..j + k).collect();
        let cand = (ev.gap(&cells), cells);
        if better(&cand, &interval, tie_tol(interval.0.max(cand.0))) {
            interval = cand;
        }
    }

    let exhaustive = n_cells <= EXHAUSTIVE_MAX_CELLS;
    let (best, evaluated) = if exhaustive {
        exhaustive_search(&ev, k)
    } else {
        if opts.starts == 0 {
            return Err(Error::Parameter("local search needs at least one start".into()));
        }
        local_search(&ev, k, opts)
    };
    let best = if better(&interval, &best, tie_tol(best.0)) { interval.clone() } else { best };
    Ok(SearchResult {
        alpha: alpha.alpha(),
        n_cells,
        cells: best.1,
        gap: best.0,
        exhaustive,
        interval_cells: interval.1,
        interval_gap: interval.0,
        evaluated,
    })
}

/// Masks with `k` bits among the low `bits`, ascending.
fn for_each_subset(bits: usize, k: usize, mut f: impl FnMut(u64)) {
    if k > bits {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let mut m: u64 = (1u64 << k) - 1;
    let limit = 1u64 << bits;
    while m < limit {
        f(m);
        // Gosper's hack: next mask with the same popcount.
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

/// Blocks keyed by the top cells run in parallel; a second pass picks the
/// lexicographically smallest set among near-maximal ones.
fn exhaustive_search(ev: &Evaluator, k: usize) -> ((f64, Vec<usize>), u64) {
    let n = ev.n;
    let p = n.min(8);
    let low = n - p;
    let blocks: Vec<u64> = (0..1u64 << p).collect();
    let scan = |prefix: u64, visit: &mut dyn FnMut(u64, f64)| {
        let used = prefix.count_ones() as usize;
        if used > k {
            return;
        }
        for_each_subset(low, k - used, |lowmask| {
            let mask = prefix << low | lowmask;
            visit(mask, ev.gap(&mask_cells(mask)));
        });
    };
    let (top, count) = blocks
        .par_iter()
        .map(|&prefix| {
            let (mut top, mut count) = (f64::NEG_INFINITY, 0u64);
            scan(prefix, &mut |_, g| {
                top = top.max(g);
                count += 1;
            });
            (top, count)
        })
        .reduce(|| (f64::NEG_INFINITY, 0), |a, b| (a.0.max(b.0), a.1 + b.1));
    let cut = top - tie_tol(top);
    let best = blocks
        .par_iter()
        .filter_map(|&prefix| {
            let mut best: Option<(f64, Vec<usize>)> = None;
            scan(prefix, &mut |mask, g| {
                if g >= cut {
                    let cells = mask_cells(mask);
                    if best.as_ref().is_none_or(|b| cells < b.1) {
                        best = Some((g, cells));
                    }
                }
            });
            best
        })
        .reduce_with(|a, b| if b.1 < a.1 { b } else { a })
        .expect("at least one subset");
    (best, count)
}

/// Steepest-ascent single-cell swaps from seeded random starts.
fn local_search(ev: &Evaluator, k: usize, opts: &SearchOptions) -> ((f64, Vec<usize>), u64) {
    let n = ev.n;
    let runs: Vec<((f64, Vec<usize>), u64)> = (0..opts.starts)
        .into_par_iter()
        .map(|s| {
            let mut rng = instance_rng(opts.seed, s);
            let mut all: Vec<usize> = (0..n).collect();
            all.shuffle(&mut rng);
            let mut cells = all[..k].to_vec();
            cells.sort_unstable();
            let mut cur = (ev.gap(&cells), cells);
            let mut count = 1u64;
            loop {
                let mut step: Option<(f64, Vec<usize>)> = None;
                for &out in &cur.1 {
                    for inn in (0..n).filter(|c| cur.1.binary_search(c).is_err()) {
                        let mut cand: Vec<usize> = cur.1.iter().copied().filter(|&c| c != out).collect();
                        cand.push(inn);
                        cand.sort_unstable();
                        let c = (ev.gap(&cand), cand);
                        count += 1;
                        if step.as_ref().is_none_or(|s| better(&c, s, tie_tol(s.0))) {
                            step = Some(c);
                        }
                    }
                }
                match step {
                    Some(s) if s.0 > cur.0 + tie_tol(cur.0) => cur = s,
                    _ => break,
                }
            }
            (cur, count)
        })
        .collect();
    let evaluated = runs.iter().map(|r| r.1).sum();
    let best = runs
        .into_iter()
        .map(|r| r.0)
        .reduce(|a, b| if better(&b, &a, tie_tol(a.0)) { b } else { a })
        .expect("at least one start");
    (best, evaluated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gap::gap_formula;

    #[test]
    fn subsets_enumerate_binomially() {
        let mut n = 0;
        for_each_subset(10, 5, |m| {
            assert_eq!(m.count_ones(), 5);
            n += 1;
        });
        assert_eq!(n, 252);
        let mut seen = vec![];
        for_each_subset(3, 0, |m| seen.push(m));
        assert_eq!(seen, vec![0]);
    }

    #[test]
    fn eight_cells_beat_the_end_interval() {
        let a = RobinParam::new(0.1).unwrap();
        let r = extremal_search(a, 8).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.evaluated, 70);
        assert!(r.gap >= gap_formula(0.1, -PI / 2.0).unwrap() - 1e-9);
        assert!(r.gap >= r.interval_gap - 1e-12);
        assert_eq!(r.cells.len(), 4);
    }

    #[test]
    fn full_measure_heats_everything() {
        let a = RobinParam::new(1.0).unwrap();
        let r = extremal_search_with(a, 8, &SearchOptions { measure: 2.0 * PI, ..Default::default() }).unwrap();
        assert_eq!(r.cells, (0..8).collect::<Vec<_>>());
        let one = robin_solve(&StepFunction::constant(Interval::rod(), 1.0), a).unwrap();
        assert!((r.gap - one.extrema().osc()).abs() < 1e-12);
    }

    #[test]
    fn interval_candidates_match_the_formula() {
        let a = RobinParam::new(1.0).unwrap();
        let r = extremal_search(a, 16).unwrap();
        let w = 2.0 * PI / 16.0;
        let j = r.interval_cells[0] as f64;
        let b = -PI + w * j + PI / 2.0;
        assert!((r.interval_gap - gap_formula(1.0, b).unwrap()).abs() < 1e-8);
        assert!(r.gap >= r.interval_gap - 1e-12);
    }

    #[test]
    fn bad_arguments() {
        let a = RobinParam::new(1.0).unwrap();
        assert!(extremal_search(a, 7).is_err());
        assert!(extremal_search(a, 6).is_err());
        let o = SearchOptions { measure: 1.0, ..Default::default() };
        assert!(extremal_search_with(a, 8, &o).is_err());
    }

    #[test]
    fn local_search_is_deterministic() {
        let a = RobinParam::new(0.5).unwrap();
        let o = SearchOptions { starts: 4, seed: 9, ..Default::default() };
        let x = extremal_search_with(a, 26, &o).unwrap();
        let y = extremal_search_with(a, 26, &o).unwrap();
        assert_eq!(x, y);
        assert!(!x.exhaustive);
        assert!(x.gap >= x.interval_gap - 1e-12);
    }
}
