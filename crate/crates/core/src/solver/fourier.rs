use std::f64::consts::PI;

use super::neumann_kernel;
use crate::error::{Error, Result};
use crate::piecewise::quadrature::composite_simpson;

/// Total quadrature points on `[-π, π]`.
pub const FOURIER_POINTS: usize = 8192;

/// Real part of `(1/2π) ∫ K(x) e^{−inx} dx` by composite Simpson on each side of
/// the kink at 0. Expected value `1/n²` for `n ≠ 0` and `0` for `n = 0`.
pub fn kernel_fourier_check(n: i64) -> Result<f64> {
    if n.abs() > 64 {
        return Err(Error::Parameter(format!("|n| must be at most 64, got {n}")));
    }
    let k = n as f64;
    let g = |x: f64| neumann_kernel(x) * (k * x).cos();
    let half = FOURIER_POINTS / 2;
    let total = composite_simpson(g, -PI, 0.0, half) + composite_simpson(g, 0.0, PI, half);
    Ok(total / (2.0 * PI))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_coefficients() {
        assert!(kernel_fourier_check(0).unwrap().abs() <= 1e-6);
        assert!((kernel_fourier_check(1).unwrap() - 1.0).abs() <= 1e-6);
        assert!((kernel_fourier_check(4).unwrap() - 1.0 / 16.0).abs() <= 1e-6);
        assert!((kernel_fourier_check(-3).unwrap() - 1.0 / 9.0).abs() <= 1e-6);
        assert!(kernel_fourier_check(65).is_err());
    }
}
