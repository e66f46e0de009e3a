//! Exact one-dimensional Poisson solvers, rearrangements, and comparison audits
//! for a heated rod.
//!
//! The crate works with exact piecewise representations throughout: sources are
//! step functions ([`StepFunction`]) and solutions are continuous piecewise
//! quadratics ([`PiecewisePoly`]). Because every solve is closed form, the
//! comparison checks in [`compare`] measure the mathematics rather than
//! discretisation error.
//!
//! Modules:
//!
//! - [`piecewise`]: intervals, step functions, piecewise quadratics, exact integration.
//! - [`rearrange`]: decreasing and symmetric decreasing rearrangements, star
//!   functions, majorization, and the Hardy-Littlewood, Riesz-Sobolev and
//!   periodic (Baernstein) rearrangement inequalities.
//! - [`solver`]: Robin, Neumann and Dirichlet solves on the rod, Green's
//!   functions, the periodic Neumann kernel, and a direct-integration oracle.
//! - [`compare`]: end-to-end audits of the Robin, Neumann and Dirichlet
//!   comparison principles.
//! - [`gap`]: temperature-gap formulas for a single heated interval and an
//!   exploratory search over heat-source placements.
//! - [`cli`]: the `rodsym` command-line front end.

pub mod cli;
pub mod compare;
pub mod error;
pub mod gap;
pub mod piecewise;
pub mod rearrange;
pub mod solver;
pub mod tolerances;

pub use error::{Error, Result};
pub use piecewise::{Interval, PiecewisePoly, StepFunction};
pub use rearrange::StarCurve;
pub use solver::{BoundaryCondition, RobinParam};
