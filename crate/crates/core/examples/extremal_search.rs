//! Where should half a Robin rod be heated to maximise the temperature gap?
//! Exhaustive over unions of grid cells up to 24 cells, local search above.
//!
//!     cargo run --release --example extremal_search -- 1.0 16

use rodsym::gap::{extremal_search, gap_formula};
use rodsym::RobinParam;

fn main() -> rodsym::Result<()> {
    let mut args = std::env::args().skip(1);
    let alpha: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1.0);
    let cells: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(16);
    let r = extremal_search(RobinParam::new(alpha)?, cells)?;
    println!("α = {alpha}, {cells} cells, {} sets evaluated (exhaustive: {})", r.evaluated, r.exhaustive);
    println!("best set {:?}: gap {:.9}", r.cells, r.gap);
    println!("best interval {:?}: gap {:.9}", r.interval_cells, r.interval_gap);
    println!("end interval from the closed form: {:.9}", gap_formula(alpha, -std::f64::consts::FRAC_PI_2)?);
    let picture: String = (0..cells).map(|i| if r.cells.contains(&i) { '#' } else { '.' }).collect();
    println!("[{picture}]");
    Ok(())
}
