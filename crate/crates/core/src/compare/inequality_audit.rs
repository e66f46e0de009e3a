use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corpus::{instance_rng, nonnegative_source, signed_source};
use crate::error::{Error, Result};
use crate::rearrange::{baernstein_check, hardy_littlewood_check, riesz_sobolev_check, InequalityCheck};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityKind {
    /// `∫fg ≤ ∫f#g#` on signed pairs.
    HardyLittlewood,
    /// Triple integral on ℝ, nonnegative triples.
    RieszSobolev,
    /// Periodic triple integral on the circle, nonnegative triples.
    Baernstein,
}

impl fmt::Display for InequalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InequalityKind::HardyLittlewood => "hl",
            InequalityKind::RieszSobolev => "rs",
            InequalityKind::Baernstein => "baernstein",
        })
    }
}

impl FromStr for InequalityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hl" => Ok(InequalityKind::HardyLittlewood),
            "rs" => Ok(InequalityKind::RieszSobolev),
            "baernstein" => Ok(InequalityKind::Baernstein),
            _ => Err(Error::Parameter(format!("unknown inequality {s:?}; expected hl, rs or baernstein"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InequalityRecord {
    pub kind: InequalityKind,
    pub seed: u64,
    pub index: usize,
    #[serde(flatten)]
    pub check: InequalityCheck,
}

/// Regenerates instance `index` and checks it.
pub fn inequality_instance(kind: InequalityKind, seed: u64, index: usize, n_grid: usize) -> Result<InequalityRecord> {
    let mut rng = instance_rng(seed, index);
    let check = match kind {
        InequalityKind::HardyLittlewood => {
            let f = signed_source(&mut rng);
            let g = signed_source(&mut rng);
            hardy_littlewood_check(&f, &g)?
        }
        InequalityKind::RieszSobolev | InequalityKind::Baernstein => {
            let f = nonnegative_source(&mut rng);
            let g = nonnegative_source(&mut rng);
            let h = nonnegative_source(&mut rng);
            if kind == InequalityKind::RieszSobolev {
                riesz_sobolev_check(&f, &g, &h, n_grid)?
            } else {
                baernstein_check(&f, &g, &h, n_grid)?
            }
        }
    };
    Ok(InequalityRecord { kind, seed, index, check })
}

/// `count` seeded instances in parallel, returned in index order.
pub fn inequality_audit(kind: InequalityKind, count: usize, seed: u64, n_grid: usize) -> Result<Vec<InequalityRecord>> {
    super::audit::with_thread_cap(|| {
        (0..count).into_par_iter().map(|i| inequality_instance(kind, seed, i, n_grid)).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_inequality_audits_pass() {
        for kind in [InequalityKind::HardyLittlewood, InequalityKind::RieszSobolev, InequalityKind::Baernstein] {
            let recs = inequality_audit(kind, 6, 3, 512).unwrap();
            assert_eq!(recs.len(), 6);
            assert!(recs.iter().all(|r| r.check.pass), "{kind}");
            assert_eq!(recs[4], inequality_instance(kind, 3, 4, 512).unwrap());
            assert_eq!(kind.to_string().parse::<InequalityKind>().unwrap(), kind);
        }
    }
}
