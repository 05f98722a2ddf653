use num_complex::Complex;

use super::{EvalResult, Method};
use crate::csm::wavefunction_cm;
use crate::error::Result;
use crate::quad::{gaussian_window, integrate_interval, QuadConfig};
use crate::scalar::Real;
use crate::specfun::{laguerre, LaguerreOrder};

/// Centre-of-mass Wigner function `(-1)^l exp(-2Q^2 - 2P^2) L_l(4Q^2 + 4P^2)`.
pub fn cm_wigner<T: Real>(l: usize, q: T, p: T) -> EvalResult<T> {
    let s = q * q + p * p;
    let sign = if l.is_multiple_of(2) { T::one() } else { -T::one() };
    let order = LaguerreOrder::new(T::zero()).expect("order 0 is valid");
    let value = sign * (-T::two() * s).exp() * laguerre(l, order, T::lit(4.0) * s);
    EvalResult::exact(value, Method::ClosedG0)
}

/// `int dY Phi(Q + Y) Phi(Q - Y) exp(4 i P Y)` by quadrature.
pub fn cm_wigner_quad<T: Real>(l: usize, q: T, p: T, cfg: &QuadConfig<T>) -> Result<EvalResult<T>> {
    let half = gaussian_window(T::one(), cfg)?;
    let four_p = T::lit(4.0) * p;
    let cfg = cfg.with_frequency(four_p);
    let r = integrate_interval(
        |y: T| Complex::new(T::zero(), four_p * y).exp() * (wavefunction_cm(l, q + y) * wavefunction_cm(l, q - y)),
        -half,
        half,
        &cfg,
    )?;
    Ok(EvalResult {
        value: r.value.re,
        method: Method::Quadrature,
        imag_residue: r.value.im.abs(),
        quad_error: r.abs_error_estimate,
        convention_dependent: false,
    })
}
