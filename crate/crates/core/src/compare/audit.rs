use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corpus::{instance_rng, nonnegative_source, random_alpha, zero_mean_source};
use super::principles::{dirichlet_compare_with, neumann_compare_with, robin_compare_with, CompareOptions};
use super::report::{ComparisonReport, Theorem};
use crate::error::{Error, Result};
use crate::piecewise::StepFunction;
use crate::solver::RobinParam;

/// Environment variable capping the audit thread count.
pub const THREADS_ENV: &str = "RODSYM_THREADS";

/// One audited instance: its source, and the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub source: StepFunction,
    pub report: ComparisonReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub theorem: Theorem,
    pub seed: u64,
    pub count: usize,
    pub passed: usize,
    /// Smallest margin over all instances.
    pub worst_margin: f64,
    /// Ordered by instance index.
    pub records: Vec<AuditRecord>,
}

impl AuditSummary {
    pub fn all_pass(&self) -> bool {
        self.passed == self.count
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditRecord> {
        self.records.iter().filter(|r| !r.report.pass)
    }
}

/// Regenerates instance `index` and audits it.
pub fn audit_instance(theorem: Theorem, seed: u64, index: usize, opts: &CompareOptions) -> Result<AuditRecord> {
    let mut rng = instance_rng(seed, index);
    let (source, report) = match theorem {
        Theorem::Robin => {
            let f = nonnegative_source(&mut rng);
            let alpha = RobinParam::new(random_alpha(&mut rng))?;
            let r = robin_compare_with(&f, alpha, opts)?;
            (f, r)
        }
        Theorem::Neumann => {
            let f = zero_mean_source(&mut rng);
            let r = neumann_compare_with(&f, opts)?;
            (f, r)
        }
        Theorem::Dirichlet | Theorem::DirichletPointwise => {
            let f = nonnegative_source(&mut rng);
            let mut o = *opts;
            if theorem == Theorem::Dirichlet {
                o.pointwise_grid = 0;
            }
            let r = dirichlet_compare_with(&f, &o)?;
            (f, r)
        }
    };
    let report = ComparisonReport { seed: Some(seed), index: Some(index), ..report };
    Ok(AuditRecord { source, report })
}

/// Audits `count` seeded instances in parallel; records come back in index
/// order regardless of scheduling.
pub fn audit(theorem: Theorem, count: usize, seed: u64, opts: &CompareOptions) -> Result<AuditSummary> {
    let records = with_thread_cap(|| {
        (0..count).into_par_iter().map(|i| audit_instance(theorem, seed, i, opts)).collect::<Result<Vec<_>>>()
    })?;
    let passed = records.iter().filter(|r| r.report.pass).count();
    let worst_margin = records.iter().map(|r| r.report.worst_margin()).fold(f64::INFINITY, f64::min);
    Ok(AuditSummary { theorem, seed, count, passed, worst_margin, records })
}

/// Runs `job` on a pool capped by `RODSYM_THREADS`, or on the global pool.
pub(crate) fn with_thread_cap<T: Send>(job: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    match thread_cap()? {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(job),
        None => job(),
    }
}

/// Reads `RODSYM_THREADS`; unset or empty means rayon's default.
pub fn thread_cap() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(s) if s.trim().is_empty() => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Parameter(format!("{THREADS_ENV} must be a positive integer, got {s:?}"))),
        },
        Err(_) => Ok(None),
    }
}
