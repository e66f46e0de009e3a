use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use super::{b_crit, gap_formula, gap_numeric};
use crate::error::{Error, Result};
use crate::solver::RobinParam;

pub const DEFAULT_SCAN_POINTS: usize = 2001;

/// Numeric and closed-form gaps over a uniform grid of centres `b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapScanResult {
    pub alpha: f64,
    pub b_values: Vec<f64>,
    pub gaps_numeric: Vec<f64>,
    pub gaps_formula: Vec<f64>,
    /// Smallest grid `b` attaining the numeric maximum.
    pub argmax_numeric: f64,
    pub b_crit_formula: Option<f64>,
    /// `max_i |gaps_numeric[i] − gaps_formula[i]|`.
    pub max_disagreement: f64,
}

impl GapScanResult {
    pub fn grid_step(&self) -> f64 {
        self.b_values[1] - self.b_values[0]
    }
}

/// Scans `n` centres on `[−π/2, π/2]`.
pub fn gap_scan(alpha: RobinParam, n: usize) -> Result<GapScanResult> {
    if n < 2 {
        return Err(Error::Parameter(format!("scan needs at least 2 points, got {n}")));
    }
    let a = alpha.alpha();
    let h = 2.0 * FRAC_PI_2 / (n - 1) as f64;
    let b_values: Vec<f64> = (0..n)
        .map(|i| if i + 1 == n { FRAC_PI_2 } else { -FRAC_PI_2 + h * i as f64 })
        .collect();
    let gaps_numeric = b_values.iter().map(|&b| gap_numeric(alpha, b)).collect::<Result<Vec<_>>>()?;
    let gaps_formula = b_values.iter().map(|&b| gap_formula(a, b)).collect::<Result<Vec<_>>>()?;
    let top = gaps_numeric.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let cut = top - 1e-12 * top.abs();
    let i = gaps_numeric.iter().position(|&g| g >= cut).expect("nonempty scan");
    let max_disagreement = gaps_numeric
        .iter()
        .zip(&gaps_formula)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Ok(GapScanResult {
        alpha: a,
        argmax_numeric: b_values[i],
        b_values,
        gaps_numeric,
        gaps_formula,
        b_crit_formula: b_crit(a)?,
        max_disagreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gap::interior_threshold;

    #[test]
    fn unit_alpha_peaks_near_the_critical_centre() {
        let s = gap_scan(RobinParam::new(1.0).unwrap(), DEFAULT_SCAN_POINTS).unwrap();
        assert!(s.max_disagreement <= 1e-8);
        let bc = s.b_crit_formula.unwrap();
        assert!((s.argmax_numeric - bc).abs() <= s.grid_step());
        assert!((s.argmax_numeric + 0.617).abs() < 2.0 * s.grid_step());
    }

    #[test]
    fn small_alpha_peaks_at_the_end() {
        let a = 0.9 * interior_threshold();
        let s = gap_scan(RobinParam::new(a).unwrap(), 201).unwrap();
        assert_eq!(s.argmax_numeric, -FRAC_PI_2);
        assert_eq!(s.b_crit_formula, None);
        assert!(gap_scan(RobinParam::new(1.0).unwrap(), 1).is_err());
    }
}
