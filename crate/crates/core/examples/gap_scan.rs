//! Gap of a length-π source interval as its centre moves, for a few α.
//!
//!     cargo run --release --example gap_scan

use rodsym::gap::{b_crit, gap_scan, interior_threshold};
use rodsym::RobinParam;

fn main() -> rodsym::Result<()> {
    println!("threshold 2/(√3π) = {:.9}", interior_threshold());
    for a in [0.1, 0.3, 0.5, 1.0, 4.0, 40.0] {
        let s = gap_scan(RobinParam::new(a)?, 2001)?;
        let peak = s.gaps_numeric.iter().copied().fold(f64::MIN, f64::max);
        let crit = b_crit(a)?.map_or("end".to_string(), |b| format!("{b:.5}"));
        println!(
            "α = {a:>5}: argmax b = {:+.5} (b_crit {crit}), gap {peak:.6}, |numeric − formula| ≤ {:.1e}",
            s.argmax_numeric, s.max_disagreement
        );
    }
    Ok(())
}
