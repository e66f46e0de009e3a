//! Tolerances shared by solvers, checks and audits.
//!
//! Every threshold used by a pass/fail decision lives here.

/// Continuity of piecewise quadratics across breakpoints.
pub const CONTINUITY: f64 = 1e-10;

/// Breakpoints closer than this are fused.
pub const BREAKPOINT_MERGE: f64 = 1e-12;

/// Boundary-condition residuals, scaled by `1 + ‖f‖₁`.
pub const BC_RESIDUAL: f64 = 1e-10;

/// `|∫f|` accepted as zero for Neumann data.
pub const NEUMANN_COMPATIBILITY: f64 = 1e-10;

/// Agreement between two exact solver paths (sup norm).
pub const SOLVER_AGREEMENT: f64 = 1e-10;

/// Relative tolerance of adaptive quadrature.
pub const QUADRATURE_REL: f64 = 1e-9;

/// Star-function and pointwise-rearrangement margins.
pub const STAR_MARGIN: f64 = 1e-6;

/// Lᵖ-norm and max/min/osc margins for p ∈ {1, 2, ∞}.
pub const NORM_MARGIN: f64 = 1e-9;

/// Hardy-Littlewood margin (both sides are exact).
pub const HARDY_LITTLEWOOD: f64 = 1e-10;

/// Numeric gap against the closed-form gap.
pub const GAP_AGREEMENT: f64 = 1e-8;

/// Fourier coefficients of the Neumann kernel.
pub const FOURIER: f64 = 1e-6;

/// Means of zero-mean Neumann solutions.
pub const ZERO_MEAN: f64 = 1e-10;
