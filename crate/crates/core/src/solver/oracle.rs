use super::{certify, check_compatible, BoundaryCondition};
use crate::error::{Error, Result};
use crate::piecewise::{PiecewisePoly, StepFunction};

/// Solves by direct double integration, `u(x) = −∫∫ f + c·x + d`, with `(c, d)`
/// from the boundary conditions (or the zero-mean normalisation for Neumann).
///
/// Works on any interval and shares no code with the Green's-function path.
pub fn direct_integration_oracle(f: &StepFunction, bc: BoundaryCondition) -> Result<PiecewisePoly> {
    if bc == BoundaryCondition::Neumann {
        check_compatible(f)?;
    }
    let (lo, hi) = (f.domain().lo(), f.domain().hi());

    // D(x) = ∫_lo^x ∫_lo^t f, carried piece by piece with S = D'.
    let mut coeffs = Vec::with_capacity(f.num_pieces());
    let (mut d_acc, mut s_acc) = (0.0, 0.0);
    for (a, b, v) in f.pieces() {
        // D(x) = d_acc + s_acc (x − a) + v (x − a)² / 2
        coeffs.push([d_acc - s_acc * a + 0.5 * v * a * a, s_acc - v * a, 0.5 * v]);
        let w = b - a;
        d_acc += s_acc * w + 0.5 * v * w * w;
        s_acc += v * w;
    }
    let double = PiecewisePoly::new(f.breakpoints().to_vec(), coeffs)?.scale(-1.0);
    let (d_hi, s_hi) = (d_acc, s_acc);

    let (c, d) = match bc {
        BoundaryCondition::Robin(p) => {
            let alpha = p.alpha();
            // −u'(lo) + αu(lo) = 0:  (α·lo − 1) c + α d = 0
            //  u'(hi) + αu(hi) = 0:  (1 + α·hi) c + α d = S(hi) + α D(hi)
            let (a11, a12, a21, a22) = (alpha * lo - 1.0, alpha, 1.0 + alpha * hi, alpha);
            let rhs = s_hi + alpha * d_hi;
            let det = a11 * a22 - a12 * a21;
            if det.abs() < 1e-300 {
                return Err(Error::Internal("singular Robin system".into()));
            }
            ((-a12 * rhs) / det, (a11 * rhs) / det)
        }
        BoundaryCondition::Dirichlet => {
            let c = d_hi / (hi - lo);
            (c, -c * lo)
        }
        BoundaryCondition::Neumann => (0.0, -double.mean()),
    };
    certify(double.add_affine(d, c), f, bc)
}
