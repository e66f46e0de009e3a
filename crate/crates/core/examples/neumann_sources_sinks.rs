//! Insulated half rod with sources and sinks: rearranging the source to put
//! all heating first widens the temperature range.
//!
//!     cargo run --example neumann_sources_sinks

use std::f64::consts::PI;

use rodsym::compare::neumann_compare;
use rodsym::rearrange::decreasing_rearrangement;
use rodsym::solver::neumann_solve;
use rodsym::{Interval, StepFunction};

fn main() -> rodsym::Result<()> {
    let f = StepFunction::from_cells(Interval::half_rod(), vec![-1.0, 0.5, 1.5, -1.0])?;
    let fstar = decreasing_rearrangement(&f).translated(0.0);
    println!("f  values {:?}", f.values());
    println!("f* values {:?}", fstar.values());

    let (u, v) = (neumann_solve(&f)?, neumann_solve(&fstar)?);
    let (eu, ev) = (u.extrema(), v.extrema());
    println!("u: max {:+.6} min {:+.6} osc {:.6}", eu.max, eu.min, eu.osc());
    println!("v: max {:+.6} min {:+.6} osc {:.6}", ev.max, ev.min, ev.osc());

    let r = neumann_compare(&f)?;
    println!("report: {}", serde_json::to_string(&r).unwrap());

    // Sinks first, then sources: v has oscillation π²/4.
    let g = StepFunction::new(vec![0.0, PI / 2.0, PI], vec![-1.0, 1.0])?;
    let r = neumann_compare(&g)?;
    println!("sinks first: osc margin {:.3e}, pass {}", r.extrema_margins.unwrap().osc, r.pass);
    Ok(())
}
