//! Star functions: exact for step data, by level sets for solutions, and the
//! brute-force sup over unions of cells.
//!
//!     cargo run --example star_function

use std::f64::consts::PI;

use rodsym::rearrange::{poly_star_curve, star_function, star_function_bruteforce, star_margin, StarMethod};
use rodsym::solver::robin_solve;
use rodsym::{Interval, RobinParam, StepFunction};

fn main() -> rodsym::Result<()> {
    let f = StepFunction::from_cells(Interval::rod(), vec![0.5, 2.0, 0.0, 1.0, 3.0, 0.25])?;
    let s = star_function(&f);
    println!("{:>8} {:>12} {:>12}", "t", "exact", "brute(1024)");
    for t in [0.0, 0.5, 1.0, 2.0, PI, 5.0, 2.0 * PI] {
        println!("{t:>8.4} {:>12.8} {:>12.8}", s.eval(t)?, star_function_bruteforce(&f, t, 1024)?);
    }

    let alpha = RobinParam::new(0.7)?;
    let u = robin_solve(&f, alpha)?;
    let v = robin_solve(&rodsym::rearrange::symmetric_decreasing_rearrangement(&f), alpha)?;
    let exact = (poly_star_curve(&u, StarMethod::default()), poly_star_curve(&v, StarMethod::default()));
    let sampled = (
        poly_star_curve(&u, StarMethod::Sampled { samples: 100_000 }),
        poly_star_curve(&v, StarMethod::Sampled { samples: 100_000 }),
    );
    println!("star margin, exact level sets: {:+.3e}", star_margin(&exact.0, &exact.1)?);
    println!("star margin, sampled:          {:+.3e}", star_margin(&sampled.0, &sampled.1)?);
    let mid = 0.25 * 2.0 * PI;
    println!("v★ − u★ at t = π/2: {:.6}", exact.1.eval(mid)? - exact.0.eval(mid)?);
    Ok(())
}
