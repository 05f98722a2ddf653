//! Direct numerical evaluation of the overlap integral. Uses only the eigenfunctions, none
//! of the operator or series algebra, and therefore serves as the reference for both.

use num_complex::Complex;

use super::{check_omega_bar, check_residue, EvalResult, Method, PhasePoint};
use crate::csm::RelativeEigenfunction;
use crate::error::Result;
use crate::quad::{gaussian_window, integrate_piecewise, QuadConfig};
use crate::scalar::Real;

/// `int dy Psi(q + y) Psi(q - y) exp(i p y)` over the Gaussian window of the individual
/// eigenfunction envelopes (`exp(-w (q +- y)^2 / 4)`).
///
/// Non-integer `alpha` is accepted; the result is then flagged convention-dependent. The
/// interval is split at `y = +-q`, where `|q +- y|^alpha` is not smooth.
pub fn rel_wigner_quad<T: Real>(
    n: usize,
    alpha: T,
    omega_bar: T,
    pt: PhasePoint<T>,
    cfg: &QuadConfig<T>,
) -> Result<EvalResult<T>> {
    check_omega_bar(omega_bar)?;
    let psi = RelativeEigenfunction::new(n, alpha, omega_bar)?;
    let half = gaussian_window(T::lit(0.25) * omega_bar, cfg)?;
    let cfg = cfg.with_frequency(pt.p);
    let (q, p) = (pt.q, pt.p);
    let integrand = |y: T| Complex::new(T::zero(), p * y).exp() * (psi.eval(q + y) * psi.eval(q - y));
    let qa = q.abs();
    let breaks: Vec<T> = if qa > T::zero() && qa < half { vec![-half, -qa, qa, half] } else { vec![-half, half] };
    let r = integrate_piecewise(integrand, &breaks, &cfg)?;
    let residue = r.value.im.abs();
    check_residue(residue, T::residue_tolerance().max(T::lit(10.0) * r.abs_error_estimate))?;
    Ok(EvalResult {
        value: r.value.re,
        method: Method::Quadrature,
        imag_residue: residue,
        quad_error: r.abs_error_estimate,
        convention_dependent: psi.convention_dependent(),
    })
}
