use std::f64::consts::PI;

use super::{certify, check_compatible, BoundaryCondition};
use crate::error::{Error, Result};
use crate::piecewise::{cumulative_moments, Interval, PiecewisePoly, StepFunction};

/// Periodic kernel `K(x) = x²/2 − π|x| + π²/3` with Fourier coefficients
/// `1/n²` (`n ≠ 0`) and `0` (`n = 0`). The argument is reduced modulo 2π.
pub fn neumann_kernel(x: f64) -> f64 {
    let r = x - 2.0 * PI * (x / (2.0 * PI)).round();
    0.5 * r * r - PI * r.abs() + PI * PI / 3.0
}

/// Zero-mean solution of `−u'' = f`, `u'(lo) = u'(hi) = 0`.
///
/// `u(x) = −∫_lo^x (x − y) f(y) dy + d = −(x·M0(x) − M1(x)) + d`, so
/// `u'(x) = −M0(x)` vanishes at both ends when `∫f = 0`; `d` fixes `∫u = 0`.
pub fn neumann_solve(f: &StepFunction) -> Result<PiecewisePoly> {
    check_compatible(f)?;
    let (m0, m1) = cumulative_moments(f);
    let coeffs: Vec<[f64; 3]> = m0
        .coeffs()
        .iter()
        .zip(m1.coeffs())
        .map(|(&[a0, a1, _], &[b0, _, b2])| [b0, -a0, -(a1 - b2)])
        .collect();
    let raw = PiecewisePoly::new(m0.breakpoints().to_vec(), coeffs)?;
    let u = raw.add_affine(-raw.mean(), 0.0);
    certify(u, f, BoundaryCondition::Neumann)
}

/// `u = K ∗ f = (1/2π) ∫ K(x − y) f(y) dy` on `[-π, π]`, exact.
///
/// For `|z| ≤ 2π` the periodic kernel equals `z²/2 − π|z| + π²/3`, so the wrap
/// needs no separate case and the integral reduces to
/// `(x²/2 + π²/3)F0 − x·F1 + F2/2 − π∫|x − y| f(y) dy`, with `F_k = ∫ y^k f`.
///
/// The result has zero mean and `u'(±π) = −(1/2π) ∫ y f(y) dy`; it satisfies
/// the homogeneous Neumann condition only when that first moment vanishes.
pub fn neumann_convolution_solve(f: &StepFunction) -> Result<PiecewisePoly> {
    if !f.domain().same_as(&Interval::rod()) {
        return Err(Error::Domain(format!(
            "the periodic convolution lives on [-π, π], got [{}, {}]",
            f.domain().lo(),
            f.domain().hi()
        )));
    }
    check_compatible(f)?;
    let (m0, m1) = cumulative_moments(f);
    let (f0, f1, f2) = (f.integral(), f.moment(1), f.moment(2));
    let k = 1.0 / (2.0 * PI);
    let coeffs = m0
        .coeffs()
        .iter()
        .zip(m1.coeffs())
        .map(|(&[a0, a1, _], &[b0, _, b2])| {
            // ∫|x − y| f(y) dy = −(2b0 − F1) + (2a0 − F0)x + (2a1 − 2b2)x²
            let abs = [-(2.0 * b0 - f1), 2.0 * a0 - f0, 2.0 * (a1 - b2)];
            [
                k * (PI * PI / 3.0 * f0 + 0.5 * f2 - PI * abs[0]),
                k * (-f1 - PI * abs[1]),
                k * (0.5 * f0 - PI * abs[2]),
            ]
        })
        .collect();
    PiecewisePoly::new(m0.breakpoints().to_vec(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::piecewise::quadrature::adaptive_simpson;

    fn sources_then_sinks() -> StepFunction {
        StepFunction::new(vec![0.0, PI / 2.0, PI], vec![1.0, -1.0]).unwrap()
    }

    #[test]
    fn kernel_values() {
        assert!((neumann_kernel(0.0) - PI * PI / 3.0).abs() < 1e-15);
        assert!((neumann_kernel(PI) + PI * PI / 6.0).abs() < 1e-14);
        assert!((neumann_kernel(-PI) + PI * PI / 6.0).abs() < 1e-14);
        assert!((neumann_kernel(0.7 + 4.0 * PI) - neumann_kernel(0.7)).abs() < 1e-12);
        let mean = adaptive_simpson(neumann_kernel, -PI, 0.0, 1e-13) + adaptive_simpson(neumann_kernel, 0.0, PI, 1e-13);
        assert!((mean / (2.0 * PI)).abs() < 1e-12);
    }

    #[test]
    fn zero_source() {
        let z = StepFunction::zero(Interval::half_rod());
        assert_eq!(neumann_solve(&z).unwrap().extrema().max, 0.0);
        let z = StepFunction::zero(Interval::rod());
        assert_eq!(neumann_convolution_solve(&z).unwrap().extrema().max, 0.0);
    }

    #[test]
    fn two_step_source_closed_form() {
        let u = neumann_solve(&sources_then_sinks()).unwrap();
        let e = u.extrema();
        assert!((e.max - PI * PI / 8.0).abs() < 1e-12);
        assert_eq!(e.argmax, 0.0);
        assert!((e.min + PI * PI / 8.0).abs() < 1e-12);
        assert!((e.argmin - PI).abs() < 1e-12);
        assert!((e.osc() - PI * PI / 4.0).abs() < 1e-12);
    }

    #[test]
    fn sinks_first_mirrors_the_solution() {
        let u = neumann_solve(&sources_then_sinks()).unwrap();
        let w = neumann_solve(&sources_then_sinks().scale(-1.0)).unwrap();
        for x in Interval::half_rod().grid(50) {
            assert!((w.eval(x).unwrap() - u.eval(PI - x).unwrap()).abs() < 1e-12);
        }
        assert_eq!(w.extrema().argmin, 0.0);
    }

    #[test]
    fn incompatible_data_is_rejected() {
        let f = StepFunction::constant(Interval::half_rod(), 1.0);
        assert!(matches!(neumann_solve(&f), Err(Error::Compatibility { .. })));
        let g = StepFunction::constant(Interval::rod(), 1.0);
        assert!(matches!(neumann_convolution_solve(&g), Err(Error::Compatibility { .. })));
    }

    #[test]
    fn convolution_matches_direct_quadrature() {
        let f = StepFunction::new(vec![-PI, -1.0, 0.5, PI], vec![2.0, -1.0, 0.0])
            .unwrap()
            .mean_subtracted();
        let u = neumann_convolution_solve(&f).unwrap();
        for x in [-PI, -2.0, -1.0, 0.0, 0.3, 2.9, PI] {
            let mut q = 0.0;
            for (a, b, v) in f.pieces() {
                // split at the kink of K(x − ·)
                let cuts = [a, x.clamp(a, b), b];
                for w in cuts.windows(2) {
                    q += v * adaptive_simpson(|y| neumann_kernel(x - y), w[0], w[1], 1e-13);
                }
            }
            assert!((u.eval(x).unwrap() - q / (2.0 * PI)).abs() < 1e-10);
        }
        assert!(u.integral().abs() < 1e-12);
        let slope = -f.moment(1) / (2.0 * PI);
        assert!((u.derivative(-PI).unwrap() - slope).abs() < 1e-12);
        assert!((u.derivative(PI).unwrap() - slope).abs() < 1e-12);
    }
}
