//! Rearrangements, star functions, majorization, and rearrangement inequalities.

mod inequalities;
mod majorization;
mod rearrangement;
mod star;

pub use inequalities::{baernstein_check, hardy_littlewood_check, riesz_sobolev_check, InequalityCheck};
pub use majorization::{convex_means_check, ConvexFamily, ConvexMeansEntry, HINGE_COUNT};
pub use rearrangement::{
    decreasing_rearrangement, decreasing_value, symmetric_decreasing_rearrangement, symmetric_samples,
    symmetric_value,
};
pub use star::{
    poly_star_curve, poly_star_value, star_dominates, star_function, star_function_bruteforce, star_margin,
    StarCurve, StarMethod,
};

/// Default x-grid for the Riesz-Sobolev and periodic inequality checks.
pub const DEFAULT_INEQUALITY_GRID: usize = 4096;
