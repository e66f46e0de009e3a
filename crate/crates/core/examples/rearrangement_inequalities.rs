//! Hardy-Littlewood, Riesz-Sobolev and periodic (Baernstein) inequalities on
//! seeded random step functions.
//!
//!     cargo run --release --example rearrangement_inequalities

use rodsym::compare::{inequality_audit, InequalityKind};

fn main() -> rodsym::Result<()> {
    for (kind, count, grid) in [
        (InequalityKind::HardyLittlewood, 1000, 0),
        (InequalityKind::RieszSobolev, 20, 4096),
        (InequalityKind::Baernstein, 20, 4096),
    ] {
        let recs = inequality_audit(kind, count, 1, grid)?;
        let pass = recs.iter().filter(|r| r.check.pass).count();
        let worst = recs.iter().map(|r| r.check.margin).fold(f64::INFINITY, f64::min);
        let slack = recs.iter().map(|r| r.check.slack).fold(0.0, f64::max);
        println!("{kind:>10}: {pass}/{count} pass, smallest margin {worst:+.3e}, largest slack {slack:.1e}");
    }
    Ok(())
}
