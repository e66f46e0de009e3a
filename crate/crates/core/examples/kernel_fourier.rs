//! Fourier coefficients of the periodic Neumann kernel are 1/n².
//!
//!     cargo run --release --example kernel_fourier

use rodsym::solver::{kernel_fourier_check, neumann_kernel};

fn main() -> rodsym::Result<()> {
    println!("K(0) = {:.6}, K(π) = {:.6}", neumann_kernel(0.0), neumann_kernel(std::f64::consts::PI));
    let mut worst: f64 = 0.0;
    for n in 0..=64 {
        let c = kernel_fourier_check(n)?;
        let expected = if n == 0 { 0.0 } else { 1.0 / (n * n) as f64 };
        worst = worst.max((c - expected).abs());
        if n <= 4 || n == 64 {
            println!("n = {n:>2}: {c:.10} (1/n² = {expected:.10})");
        }
    }
    println!("max error over n ≤ 64: {worst:.2e}");
    Ok(())
}
