//! Explicit finite-series evaluation of the relative Wigner function.
//!
//! Expanding both Laguerre factors in powers of their arguments, `(q +- y)^(2m)` and
//! `(q^2 - y^2)^alpha` binomially, leaves Gaussian Fourier moments
//! `F_k = int y^k exp(-b y^2 + 2 i p~ y / hbar) dy`, which have a closed Hermite form.
//! In the dimensionless units of this module `b = w / 2`, `hbar = 1` and `p~ = p / 2`.

use num_complex::Complex;
use num_traits::Zero;

use super::{check_omega_bar, check_residue, EvalResult, Method, PhasePoint};
use crate::error::Result;
use crate::scalar::Real;
use crate::specfun::{binomial_general, hermite, laguerre_coefficients, log_factorial, log_gamma};

/// `F_idx(p~) = b^(-(idx+1)/2) sqrt(pi) / (2^idx (-i)^idx) exp(-p~^2 / (b hbar^2)) H_idx(p~ / (hbar sqrt(b)))`.
pub fn f_integral_closed<T: Real>(idx: usize, p_tilde: T, b: T, hbar: T) -> Complex<T> {
    let u = p_tilde / (hbar * b.sqrt());
    let magnitude = b.powf(-(T::from_usize_lossy(idx) + T::one()) * T::half()) * T::PI().sqrt()
        / T::two().powi(idx as i32)
        * (-u * u).exp()
        * hermite(idx, u);
    // 1 / (-i)^idx = i^idx
    match idx % 4 {
        0 => Complex::new(magnitude, T::zero()),
        1 => Complex::new(T::zero(), magnitude),
        2 => Complex::new(-magnitude, T::zero()),
        _ => Complex::new(T::zero(), -magnitude),
    }
}

fn binomial_row<T: Real>(n: usize) -> Vec<T> {
    (0..=n).map(|k| binomial_general(T::from_usize_lossy(n), k)).collect()
}

/// Relative Wigner value from the five-fold finite sum over Laguerre, binomial and moment
/// indices.
pub fn rel_wigner_series<T: Real>(n: usize, alpha: usize, omega_bar: T, pt: PhasePoint<T>) -> Result<EvalResult<T>> {
    check_omega_bar(omega_bar)?;
    let alpha_t = T::from_usize_lossy(alpha);
    let b = T::half() * omega_bar;
    let q = pt.q;
    let lag = laguerre_coefficients(n, alpha_t - T::half());

    let max_idx = 2 * alpha + 4 * n;
    let moments: Vec<Complex<T>> = (0..=max_idx).map(|k| f_integral_closed(k, T::half() * pt.p, b, T::one())).collect();
    let q_pow: Vec<T> = (0..=max_idx).map(|k| q.powi(k as i32)).collect();

    // sector factor (q^2 - y^2)^alpha: sum over beta of (-1)^beta C(alpha, beta) q^(2 alpha - 2 beta) y^(2 beta)
    let alpha_row = binomial_row::<T>(alpha);

    let mut total = Complex::zero();
    let mut b_pow_m = T::one();
    for m in 0..=n {
        if m > 0 {
            b_pow_m *= b;
        }
        let row_m = binomial_row::<T>(2 * m);
        let mut b_pow_r = T::one();
        for r in 0..=n {
            if r > 0 {
                b_pow_r *= b;
            }
            let row_r = binomial_row::<T>(2 * r);
            let outer = lag[m] * lag[r] * b_pow_m * b_pow_r;
            let mut acc = Complex::zero();
            for (beta, &cb) in alpha_row.iter().enumerate() {
                let sb = if beta % 2 == 0 { cb } else { -cb };
                for (mu, &cm) in row_m.iter().enumerate() {
                    for (rho, &cr) in row_r.iter().enumerate() {
                        let sr = if rho % 2 == 0 { cr } else { -cr };
                        let qexp = 2 * alpha - 2 * beta + 2 * m - mu + 2 * r - rho;
                        acc += moments[2 * beta + mu + rho] * (sb * cm * sr * q_pow[qexp]);
                    }
                }
            }
            total += acc * outer;
        }
    }

    // |C|^2 b^alpha exp(-b q^2) with |C|^2 = sqrt(b) n! / Gamma(n + alpha + 1/2)
    let ln_norm = T::half() * b.ln() + log_factorial::<T>(n) - log_gamma(T::from_usize_lossy(n) + alpha_t + T::half())?;
    let prefactor = (ln_norm - b * q * q).exp() * b.powi(alpha as i32);
    let value = total * prefactor;
    let residue = value.im.abs();
    check_residue(residue, T::residue_tolerance())?;
    Ok(EvalResult {
        value: value.re,
        method: Method::Series,
        imag_residue: residue,
        quad_error: T::zero(),
        convention_dependent: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate_gaussian_weighted, QuadConfig};
    use crate::wigner::rel_wigner_operator;
    use approx::assert_relative_eq;

    #[test]
    fn f_integral_examples() {
        let sqrt_pi = std::f64::consts::PI.sqrt();
        let f0 = f_integral_closed(0, 0.0, 1.0, 1.0);
        assert_relative_eq!(f0.re, sqrt_pi, max_relative = 1e-15);
        assert_eq!(f0.im, 0.0);
        assert_eq!(f_integral_closed(1, 0.0, 1.0f64, 1.0).norm(), 0.0);
    }

    #[test]
    fn f_integral_matches_quadrature() {
        let cfg = QuadConfig::default().with_tolerances(1e-13, 1e-14).with_frequency(2.0);
        let direct = integrate_gaussian_weighted(|y: f64| Complex::new(0.0, 2.0 * y).exp() * y * y, 1.0, &cfg).unwrap();
        let closed = f_integral_closed(2, 1.0, 1.0, 1.0);
        assert!((direct.value - closed).norm() < 1e-10, "{:?} vs {:?}", direct.value, closed);
    }

    #[test]
    fn series_examples() {
        let v = rel_wigner_series(0, 0, 1.0, PhasePoint::origin()).unwrap();
        assert_relative_eq!(v.value, 1.0, max_relative = 1e-14);
        assert_eq!(v.method, Method::Series);

        let pt = PhasePoint::new(0.5f64, 0.5);
        let s = rel_wigner_series(0, 1, 3.0, pt).unwrap();
        let o = rel_wigner_operator(0, 1, 3.0, pt).unwrap();
        assert!((s.value - o.value).abs() < 1e-10);
    }
}
