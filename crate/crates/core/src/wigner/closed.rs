//! Closed forms for the uncoupled (`g = 0`) sectors, the total two-particle function, the
//! large-order asymptotic form and its zero ellipses.

use serde::{Deserialize, Serialize};

use super::{check_omega_bar, cm_wigner, EvalResult, Method, PhasePoint, WignerSpec};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::specfun::{laguerre, log_factorial, log_gamma, LaguerreOrder};

fn radial<T: Real>(omega_bar: T, pt: PhasePoint<T>) -> T {
    omega_bar * pt.q * pt.q + pt.p * pt.p / omega_bar
}

fn plain_laguerre<T: Real>(j: usize, x: T) -> T {
    laguerre(j, LaguerreOrder::new(T::zero()).expect("order 0 is valid"), x)
}

/// Oscillator Wigner function of combined index `j`:
/// `(-1)^j exp(-r/2) L_j(r)`, `r = w q^2 + p^2 / w`.
pub fn rel_wigner_g0<T: Real>(j: usize, omega_bar: T, pt: PhasePoint<T>) -> Result<EvalResult<T>> {
    check_omega_bar(omega_bar)?;
    let r = radial(omega_bar, pt);
    let sign = if j.is_multiple_of(2) { T::one() } else { -T::one() };
    Ok(EvalResult::exact(sign * (-T::half() * r).exp() * plain_laguerre(j, r), Method::ClosedG0))
}

/// `alpha = 1` sector with its unsimplified prefactor
/// `-sqrt(pi) (2n+1)! / (n! 2^(2n+1) Gamma(n + 3/2))` in front of `exp(-r/2) L_(2n+1)(r)`.
pub fn rel_wigner_g0_odd_sector<T: Real>(n: usize, omega_bar: T, pt: PhasePoint<T>) -> Result<EvalResult<T>> {
    check_omega_bar(omega_bar)?;
    let nt = T::from_usize_lossy(n);
    let ln_c = T::half() * T::PI().ln() + log_factorial::<T>(2 * n + 1)
        - log_factorial::<T>(n)
        - T::from_usize_lossy(2 * n + 1) * T::LN_2()
        - log_gamma(nt + T::lit(1.5))?;
    let r = radial(omega_bar, pt);
    let v = -ln_c.exp() * (-T::half() * r).exp() * plain_laguerre(2 * n + 1, r);
    Ok(EvalResult::exact(v, Method::ClosedG0))
}

/// `alpha = 0` sector with its unsimplified prefactor
/// `sqrt(pi) (2n)! / (n! 2^(2n) Gamma(n + 1/2))` in front of `exp(-r/2) L_(2n)(r)`.
pub fn rel_wigner_g0_even_sector<T: Real>(n: usize, omega_bar: T, pt: PhasePoint<T>) -> Result<EvalResult<T>> {
    check_omega_bar(omega_bar)?;
    let nt = T::from_usize_lossy(n);
    let ln_c = T::half() * T::PI().ln() + log_factorial::<T>(2 * n)
        - log_factorial::<T>(n)
        - T::from_usize_lossy(2 * n) * T::LN_2()
        - log_gamma(nt + T::half())?;
    let r = radial(omega_bar, pt);
    let v = ln_c.exp() * (-T::half() * r).exp() * plain_laguerre(2 * n, r);
    Ok(EvalResult::exact(v, Method::ClosedG0))
}

/// Product of the centre-of-mass function at `cm` and the relative function at `rel`,
/// the latter by `method`.
pub fn total_wigner<T: Real>(
    l: usize,
    n: usize,
    alpha: T,
    omega_bar: T,
    cm: PhasePoint<T>,
    rel: PhasePoint<T>,
    method: Method,
) -> Result<EvalResult<T>> {
    let spec =
        WignerSpec { kind: super::Kind::Total, l, cm_point: cm, ..WignerSpec::relative(n, alpha, omega_bar, method) };
    let prepared = spec.prepare()?;
    let w = prepared.eval(rel)?;
    debug_assert!((w.value - cm_wigner(l, cm.q, cm.p).value * prepared.relative(rel)?.value).abs() <= T::epsilon());
    Ok(w)
}

/// Large-order form `(-1)^j / sqrt(pi) [(j+1/2) r]^(-1/4) cos(2 sqrt((j+1/2) r) - pi/4)`.
pub fn rel_wigner_asymptotic<T: Real>(j: usize, omega_bar: T, pt: PhasePoint<T>) -> Result<T> {
    check_omega_bar(omega_bar)?;
    let r = radial(omega_bar, pt);
    if r.abs() < T::lit(1e-8) {
        return Err(Error::SingularPoint(r.to_f64().unwrap_or(f64::NAN)));
    }
    let x = (T::from_usize_lossy(j) + T::half()) * r;
    let sign = if j.is_multiple_of(2) { T::one() } else { -T::one() };
    Ok(sign / T::PI().sqrt() * x.powf(T::lit(-0.25)) * (T::two() * x.sqrt() - T::FRAC_PI_4()).cos())
}

/// One zero curve of the asymptotic form: the ellipse `w q^2 + p^2 / w = r_k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroEllipse<T> {
    pub k: usize,
    /// `r_k = pi^2 (k - 1/4)^2 / (4 (j + 1/2))`.
    pub radial_value: T,
    /// `(sqrt(r_k / w), sqrt(r_k w))` along `q` and `p`.
    pub semi_axes: (T, T),
    /// `2H / omega` in units of `hbar`; equals `r_k`.
    pub symplectic_area: T,
    /// `symplectic_area >= 1`.
    pub satisfies_gromov: bool,
}

/// Zero ellipses `k = 1..=k_max` of the asymptotic form. Only `k >= 1` gives a
/// non-negative square root in the zero condition.
pub fn zero_ellipses<T: Real>(j: usize, omega_bar: T, k_max: usize) -> Vec<ZeroEllipse<T>> {
    let denom = T::lit(4.0) * (T::from_usize_lossy(j) + T::half());
    (1..=k_max)
        .map(|k| {
            let s = T::from_usize_lossy(k) - T::lit(0.25);
            let r = T::PI() * T::PI() * s * s / denom;
            ZeroEllipse {
                k,
                radial_value: r,
                semi_axes: ((r / omega_bar).sqrt(), (r * omega_bar).sqrt()),
                symplectic_area: r,
                satisfies_gromov: r >= T::one(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn g0_examples() {
        for &w in &[1.0, 2.0, 3.0] {
            assert_eq!(rel_wigner_g0(0, w, PhasePoint::origin()).unwrap().value, 1.0);
        }
        assert!(rel_wigner_g0(1, 1.0f64, PhasePoint::new(1.0, 0.0)).unwrap().value.abs() < 1e-16);
        for j in 0..=6 {
            let expect = if j % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(rel_wigner_g0(j, 1.3, PhasePoint::origin()).unwrap().value, expect);
        }
    }

    #[test]
    fn sector_prefactors_are_unity() {
        for n in 0..8 {
            for &(q, p) in &[(0.0, 0.0), (0.3, 0.9), (1.2, -0.4)] {
                let pt = PhasePoint::new(q, p);
                let odd = rel_wigner_g0_odd_sector(n, 3.0f64, pt).unwrap().value;
                let even = rel_wigner_g0_even_sector(n, 3.0, pt).unwrap().value;
                assert!((odd - rel_wigner_g0(2 * n + 1, 3.0f64, pt).unwrap().value).abs() < 1e-12);
                assert!((even - rel_wigner_g0(2 * n, 3.0f64, pt).unwrap().value).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn zero_ellipse_examples() {
        let z = zero_ellipses(0, 1.0f64, 2);
        assert_relative_eq!(z[0].radial_value, 9.0 * std::f64::consts::PI.powi(2) / 32.0, max_relative = 1e-15);
        assert_relative_eq!(z[0].radial_value, 2.775_80, max_relative = 1e-5);
        assert_relative_eq!(z[1].radial_value, 15.1128, max_relative = 1e-5);
        assert!(z[1].radial_value > z[0].radial_value);
        assert_eq!(z[0].semi_axes.0, z[0].semi_axes.1);
        assert!(z[0].satisfies_gromov);
        assert!(zero_ellipses::<f64>(3, 1.0, 0).is_empty());

        // the asymptotic cosine vanishes on each ellipse
        for e in zero_ellipses(4, 2.0f64, 5) {
            let pt = PhasePoint::new(e.semi_axes.0, 0.0);
            assert!(rel_wigner_asymptotic(4, 2.0, pt).unwrap().abs() < 1e-14);
            let pt = PhasePoint::new(0.0, e.semi_axes.1);
            assert!(rel_wigner_asymptotic(4, 2.0, pt).unwrap().abs() < 1e-14);
        }
    }

    #[test]
    fn asymptotic_envelope_and_singularity() {
        assert!(matches!(rel_wigner_asymptotic(3, 1.0f64, PhasePoint::origin()), Err(Error::SingularPoint(_))));
        // |value| / |cos| scales as r^(-1/4)
        let amp = |r: f64| {
            let x = 5.5 * r;
            rel_wigner_asymptotic(5, 1.0, PhasePoint::new(r.sqrt(), 0.0)).unwrap().abs()
                / (2.0 * x.sqrt() - std::f64::consts::FRAC_PI_4).cos().abs()
        };
        assert_relative_eq!(amp(1.0) / amp(16.0), 2.0, max_relative = 1e-12);
    }

    #[test]
    fn total_factorizes() {
        let cm = PhasePoint::new(0.0, 0.0);
        let v = total_wigner(0, 0, 0.0, 1.0, cm, PhasePoint::origin(), Method::Operator).unwrap();
        assert_relative_eq!(v.value, 1.0, max_relative = 1e-14);
        let v = total_wigner(1, 0, 1.0, 1.0, cm, PhasePoint::origin(), Method::Operator).unwrap();
        assert_relative_eq!(v.value, 1.0, max_relative = 1e-13);
    }
}
