use num_complex::Complex;

use super::{check_omega_bar, EvalResult, Method, PhasePoint};
use crate::error::Result;
use crate::polygauss::{apply_operator, laguerre_operator, realify, GaussianAnsatz, OperatorPoly, RealAnsatz, Sign};
use crate::scalar::Real;
use crate::specfun::{log_factorial, log_gamma, LaguerreOrder};

/// Relative Wigner function of level `n` and integer sector `alpha`, built by applying the
/// Laguerre and `(q^2 + d^2)^alpha` operators to `exp(-p^2 / (2 w))`.
///
/// The ansatz is constructed once; [`eval`](Self::eval) is a polynomial evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct RelativeOperatorWigner<T> {
    n: usize,
    alpha: usize,
    omega_bar: T,
    ansatz: RealAnsatz<T>,
}

impl<T: Real> RelativeOperatorWigner<T> {
    pub fn new(n: usize, alpha: usize, omega_bar: T) -> Result<Self> {
        Self::with_tolerance(n, alpha, omega_bar, T::residue_tolerance())
    }

    pub fn with_tolerance(n: usize, alpha: usize, omega_bar: T, residue_tol: T) -> Result<Self> {
        check_omega_bar(omega_bar)?;
        let alpha_t = T::from_usize_lossy(alpha);
        let half_w = T::half() * omega_bar;
        let order = LaguerreOrder::from_alpha(alpha_t)?;

        let pair = &laguerre_operator(n, order, half_w, Sign::Minus) * &laguerre_operator(n, order, half_w, Sign::Plus);
        let sector = OperatorPoly::q2_plus_d2().pow(alpha).scale(Complex::from(half_w.powi(alpha as i32)));
        let op = &pair * &sector;

        let ln_pref =
            T::half() * T::PI().ln() + log_factorial::<T>(n) - log_gamma(T::from_usize_lossy(n) + alpha_t + T::half())?;
        let carrier = GaussianAnsatz::gaussian(half_w, (omega_bar + omega_bar).recip())?;
        let applied = apply_operator(&op, &carrier).scale(Complex::from(ln_pref.exp()));
        let ansatz = realify(&applied, residue_tol)?;
        Ok(Self { n, alpha, omega_bar, ansatz })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn omega_bar(&self) -> T {
        self.omega_bar
    }

    pub fn ansatz(&self) -> &RealAnsatz<T> {
        &self.ansatz
    }

    pub fn eval(&self, pt: PhasePoint<T>) -> Result<EvalResult<T>> {
        Ok(EvalResult {
            value: self.ansatz.eval(pt.q, pt.p),
            method: Method::Operator,
            imag_residue: self.ansatz.residue(),
            quad_error: T::zero(),
            convention_dependent: false,
        })
    }
}

/// One-shot operator-path evaluation. Prefer [`RelativeOperatorWigner`] for many points.
pub fn rel_wigner_operator<T: Real>(n: usize, alpha: usize, omega_bar: T, pt: PhasePoint<T>) -> Result<EvalResult<T>> {
    RelativeOperatorWigner::new(n, alpha, omega_bar)?.eval(pt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn origin_values() {
        for &w in &[1.0, 1.7, 3.0] {
            let v = rel_wigner_operator(0, 1, w, PhasePoint::origin()).unwrap();
            assert_relative_eq!(v.value, -1.0, max_relative = 1e-13);
            let v = rel_wigner_operator(0, 2, w, PhasePoint::origin()).unwrap();
            assert_relative_eq!(v.value, 1.0, max_relative = 1e-13);
        }
        let v = rel_wigner_operator(0, 0, 1.0, PhasePoint::new(1.0, 1.0)).unwrap();
        assert_relative_eq!(v.value, (-1.0f64).exp(), max_relative = 1e-14);
        assert_eq!(v.method, Method::Operator);
        assert_eq!(v.quad_error, 0.0);
    }

    #[test]
    fn residue_is_tiny() {
        for n in 0..=4 {
            for a in 0..=4 {
                let w = RelativeOperatorWigner::new(n, a, 3.0f64).unwrap();
                assert!(w.ansatz().residue() < 1e-12, "n={n} a={a}: {}", w.ansatz().residue());
            }
        }
    }

    #[test]
    fn rejects_bad_frequency() {
        assert!(RelativeOperatorWigner::new(0, 0, 0.0f64).is_err());
    }

    #[test]
    fn single_precision_origin() {
        let v = rel_wigner_operator(1, 1, 1.0f32, PhasePoint::origin()).unwrap();
        assert!((v.value + 1.0).abs() < 1e-4);
    }
}
