//! Solve one source under all three boundary conditions and compare each
//! closed-form solve with the direct-integration oracle.
//!
//!     cargo run --example solve_rod

use std::f64::consts::PI;

use rodsym::solver::{boundary_residuals, direct_integration_oracle, solve};
use rodsym::{BoundaryCondition, Interval, RobinParam, StepFunction};

fn main() -> rodsym::Result<()> {
    let f = StepFunction::new(vec![-PI, -1.0, 0.5, PI], vec![2.0, 0.0, 1.0])?;
    let bcs = [BoundaryCondition::Robin(RobinParam::new(1.0)?), BoundaryCondition::Dirichlet];
    for bc in bcs {
        let u = solve(&f, bc)?;
        let oracle = direct_integration_oracle(&f, bc)?;
        let e = u.extrema();
        println!(
            "{bc:>10}: max {:.6} at {:.4}, min {:.6}, oracle distance {:.2e}, residuals {:?}",
            e.max,
            e.argmax,
            e.min,
            u.sup_distance(&oracle)?,
            boundary_residuals(&u, bc)
        );
    }

    // Neumann data lives on the half rod and must integrate to zero.
    let g = StepFunction::from_cells(Interval::half_rod(), vec![1.0, -0.5, 0.25, -0.75])?;
    let u = solve(&g, BoundaryCondition::Neumann)?;
    let oracle = direct_integration_oracle(&g, BoundaryCondition::Neumann)?;
    println!(
        "   neumann: osc {:.6}, mean {:.1e}, oracle distance {:.2e}",
        u.extrema().osc(),
        u.mean(),
        u.sup_distance(&oracle)?
    );
    for (x, y) in u.sample(5) {
        println!("    u({x:.4}) = {y:+.6}");
    }
    Ok(())
}
