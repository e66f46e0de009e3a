//! Comparison audits: solve with a source and with its rearrangement, then
//! check that the rearranged solution dominates.

mod audit;
pub mod corpus;
mod inequality_audit;
mod principles;
mod report;

pub use audit::{audit, audit_instance, thread_cap, AuditRecord, AuditSummary, THREADS_ENV};
pub use inequality_audit::{inequality_audit, inequality_instance, InequalityKind, InequalityRecord};
pub use principles::{
    dirichlet_compare, dirichlet_compare_with, fit_inverse_alpha, neumann_compare, neumann_compare_with,
    pointwise_margin, robin_compare, robin_compare_with, robin_dirichlet_limit, CompareOptions,
};
pub use report::{ComparisonReport, ExtremaMargins, Theorem, Tolerances};
