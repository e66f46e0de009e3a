use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::rearrange::ConvexMeansEntry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// Robin rod, source `f` against `f#`.
    Robin,
    /// Insulated half rod, source `f` against `f*`.
    Neumann,
    /// Dirichlet rod, star and norm comparison only.
    Dirichlet,
    /// Dirichlet rod including the pointwise bound `u# ≤ v`.
    DirichletPointwise,
}

impl std::fmt::Display for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Theorem::Robin => "robin",
            Theorem::Neumann => "neumann",
            Theorem::Dirichlet => "dirichlet",
            Theorem::DirichletPointwise => "dirichlet_pointwise",
        })
    }
}

/// Differences `max v − max u`, `min u − min v` and `osc v − osc u`; all
/// should be nonnegative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremaMargins {
    pub max: f64,
    pub min: f64,
    pub osc: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub star: f64,
    pub norm: f64,
    pub pointwise: f64,
    pub mean: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        use crate::tolerances::*;
        Self { star: STAR_MARGIN, norm: NORM_MARGIN, pointwise: STAR_MARGIN, mean: ZERO_MEAN }
    }
}

/// Audit record for one instance of a comparison principle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub theorem: Theorem,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    /// `min_t (v★(t) − u★(t))`.
    pub star_margin: f64,
    /// `‖v‖ₚ − ‖u‖ₚ`, keyed by `"1"`, `"2"`, `"inf"`.
    pub lp_margins: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extrema_margins: Option<ExtremaMargins>,
    pub convex: ConvexMeansEntry,
    /// `min_x (v(x) − u#(x))` on the pointwise grid.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pointwise_margin: Option<f64>,
    /// `(∫u, ∫v)` for zero-mean comparisons.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub means: Option<(f64, f64)>,
    pub tolerances: Tolerances,
    pub pass: bool,
}

impl ComparisonReport {
    /// Recomputes `pass` from the margins: every margin ≥ −tol.
    pub(crate) fn finalize(mut self) -> Self {
        let t = &self.tolerances;
        let mut ok = self.star_margin >= -t.star && self.convex.pass;
        ok &= self.lp_margins.values().all(|&m| m >= -t.norm);
        if let Some(e) = self.extrema_margins {
            ok &= e.max >= -t.norm && e.min >= -t.norm && e.osc >= -t.norm;
        }
        if let Some(p) = self.pointwise_margin {
            ok &= p >= -t.pointwise;
        }
        if let Some((mu, mv)) = self.means {
            ok &= mu.abs() <= t.mean && mv.abs() <= t.mean;
        }
        self.pass = ok;
        self
    }

    /// Smallest margin across all recorded comparisons.
    pub fn worst_margin(&self) -> f64 {
        let mut m = self.star_margin.min(self.convex.min_margin);
        m = self.lp_margins.values().fold(m, |a, &b| a.min(b));
        if let Some(e) = self.extrema_margins {
            m = m.min(e.max).min(e.min).min(e.osc);
        }
        if let Some(p) = self.pointwise_margin {
            m = m.min(p);
        }
        m
    }
}
