//! Seeded comparison audits of all three problems.
//!
//!     cargo run --release --example robin_audit -- 200 7

use rodsym::compare::{audit, CompareOptions, Theorem};

fn main() -> rodsym::Result<()> {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    for th in [Theorem::Robin, Theorem::Neumann, Theorem::DirichletPointwise] {
        let s = audit(th, count, seed, &CompareOptions::default())?;
        let star = s.records.iter().map(|r| r.report.star_margin).fold(f64::INFINITY, f64::min);
        println!(
            "{th:>20}: {}/{} pass, worst margin {:+.3e}, worst star margin {:+.3e}",
            s.passed, s.count, s.worst_margin, star
        );
        let first = s.failures().next().map(|bad| serde_json::to_string(bad).unwrap());
        if let Some(line) = first {
            println!("first failure: {line}");
        }
    }
    Ok(())
}
