//! Symbolic checks of the two polynomial identities behind the `g = 0` reductions:
//!
//! * `H_n(u + (i/2) d_v) H_n(u - (i/2) d_v) exp(-v^2) = (-1)^n 2^n n! L_n[2(u^2 + v^2)] exp(-v^2)`,
//! * `x L_n^(1/2)(x^2) = (-1)^n / (2^(2n+1) n!) H_(2n+1)(x)` with the operator argument
//!   `x = sqrt(w/2)(q -+ i d_p)`, applied to `exp(-p^2 / (2w))`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polygauss::{apply_operator, laguerre_operator, GaussianAnsatz, OperatorPoly, Sign};
use crate::scalar::Real;
use crate::specfun::{hermite_coefficients, laguerre, log_factorial, LaguerreOrder};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport<T> {
    pub n: usize,
    pub max_abs_deviation: T,
    /// Magnitude the deviation is judged against (at least 1).
    pub scale: T,
    pub relative_deviation: T,
    pub tol: T,
    pub passed: bool,
}

impl<T: Real> IdentityReport<T> {
    fn new(n: usize, dev: T, scale: T, tol: T) -> Self {
        let scale = scale.max(T::one());
        let rel = dev / scale;
        Self { n, max_abs_deviation: dev, scale, relative_deviation: rel, tol, passed: rel <= tol }
    }
}

fn hermite_of<T: Real>(n: usize, x: &OperatorPoly<T>, factor: T) -> OperatorPoly<T> {
    let c: Vec<Complex<T>> = hermite_coefficients::<T>(n).into_iter().map(|h| Complex::from(h * factor)).collect();
    OperatorPoly::compose(&c, x)
}

/// Evaluates both sides of the Hermite–Laguerre identity on `u_grid x v_grid`. The
/// deviation is judged relative to `max |RHS|` over the grid.
pub fn identity_hermite_laguerre_check<T: Real>(
    n: usize,
    u_grid: &[T],
    v_grid: &[T],
    tol: T,
) -> Result<IdentityReport<T>> {
    let half_i = Complex::new(T::zero(), T::half());
    let plus = hermite_of(n, &OperatorPoly::linear(Complex::from(T::one()), half_i), T::one());
    let minus = hermite_of(n, &OperatorPoly::linear(Complex::from(T::one()), -half_i), T::one());
    let lhs = apply_operator(&(&plus * &minus), &GaussianAnsatz::gaussian(T::zero(), T::one())?);

    let sign = if n.is_multiple_of(2) { T::one() } else { -T::one() };
    let pref = sign * (T::from_usize_lossy(n) * T::LN_2() + log_factorial::<T>(n)).exp();
    let order = LaguerreOrder::new(T::zero())?;

    let mut dev = T::zero();
    let mut scale = T::zero();
    for &u in u_grid {
        for &v in v_grid {
            let rhs = pref * laguerre(n, order, T::two() * (u * u + v * v)) * (-v * v).exp();
            dev = dev.max((lhs.eval(u, v) - rhs).norm());
            scale = scale.max(rhs.abs());
        }
    }
    Ok(IdentityReport::new(n, dev, scale, tol))
}

/// Applies both sides of the half-odd Laguerre/Hermite operator identity, for each sign, to
/// `exp(-p^2 / (2w))` and compares the resulting coefficient tables. The deviation is judged
/// relative to the largest coefficient (or 1, whichever is larger).
pub fn identity_operator_halfodd_check<T: Real>(n: usize, omega_bar: T, tol: T) -> Result<IdentityReport<T>> {
    let root = (T::half() * omega_bar).sqrt();
    let gauss = GaussianAnsatz::gaussian(T::zero(), T::one() / (T::two() * omega_bar))?;
    let order = LaguerreOrder::new(T::half())?;
    let sign = if n.is_multiple_of(2) { T::one() } else { -T::one() };
    let factor = sign / (T::from_usize_lossy(2 * n + 1) * T::LN_2() + log_factorial::<T>(n)).exp();

    let mut dev = T::zero();
    let mut scale = T::zero();
    for s in [Sign::Minus, Sign::Plus] {
        let x = OperatorPoly::q_plus_signed_i_d(s).scale(Complex::from(root));
        let lhs_op = &x * &laguerre_operator(n, order, T::half() * omega_bar, s);
        let rhs_op = hermite_of(2 * n + 1, &x, factor);
        let lhs = apply_operator(&lhs_op, &gauss);
        let rhs = apply_operator(&rhs_op, &gauss);
        dev = dev.max(lhs.poly().max_deviation(rhs.poly()));
        scale = scale.max(rhs.poly().max_abs_coeff());
    }
    Ok(IdentityReport::new(n, dev, scale, tol))
}
