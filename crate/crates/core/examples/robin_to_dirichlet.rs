//! Robin solutions approach the Dirichlet solution like C/α.
//!
//!     cargo run --example robin_to_dirichlet

use std::f64::consts::PI;

use rodsym::compare::{fit_inverse_alpha, robin_dirichlet_limit};
use rodsym::{Interval, StepFunction};

fn main() -> rodsym::Result<()> {
    let f = StepFunction::indicator(Interval::rod(), -PI, 0.0)?;
    let alphas = [1.0, 10.0, 100.0, 1000.0];
    let d = robin_dirichlet_limit(&f, &alphas)?;
    let c = fit_inverse_alpha(&alphas, &d);
    for (a, di) in alphas.iter().zip(&d) {
        println!("α = {a:>6}: ‖u_α − u_D‖∞ = {di:.6e}   α·distance = {:.6}", a * di);
    }
    println!("fitted C = {c:.6}");
    Ok(())
}
