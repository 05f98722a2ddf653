//! Orthogonal polynomials and Gamma-function values.
//!
//! Laguerre and Hermite values come from their three-term recurrences, which stay
//! well-conditioned where the alternating power series cancels badly. The explicit
//! coefficient tables are still exposed because the operator calculus needs them.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Upper index `k` of a generalized Laguerre polynomial `L_n^k`. Must satisfy `k > -1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LaguerreOrder<T>(T);

impl<T: Real> LaguerreOrder<T> {
    pub fn new(k: T) -> Result<Self> {
        if !(k > -T::one()) || !k.is_finite() {
            return Err(Error::Domain(format!("Laguerre order must exceed -1, got {k}")));
        }
        Ok(Self(k))
    }

    /// Order `alpha - 1/2` used by the relative-motion eigenfunctions.
    pub fn from_alpha(alpha: T) -> Result<Self> {
        Self::new(alpha - T::half())
    }

    #[inline]
    pub fn get(self) -> T {
        self.0
    }
}

/// `L_n^k(x)` by upward recurrence in `n`.
pub fn laguerre<T: Real>(n: usize, k: LaguerreOrder<T>, x: T) -> T {
    let k = k.get();
    let mut prev = T::one();
    if n == 0 {
        return prev;
    }
    let mut cur = T::one() + k - x;
    for j in 1..n {
        let jt = T::from_usize_lossy(j);
        let next = ((jt + jt + T::one() + k - x) * cur - (jt + k) * prev) / (jt + T::one());
        prev = cur;
        cur = next;
    }
    cur
}

/// Convenience wrapper that validates `k` first.
pub fn laguerre_checked<T: Real>(n: usize, k: T, x: T) -> Result<T> {
    Ok(laguerre(n, LaguerreOrder::new(k)?, x))
}

/// Power-series coefficients of `L_n^k`: entry `m` multiplies `x^m`.
///
/// `c_m = (-1)^m / m! * binom(n + k, n - m)`.
pub fn laguerre_coefficients<T: Real>(n: usize, k: T) -> Vec<T> {
    let nk = T::from_usize_lossy(n) + k;
    let mut inv_fact = T::one();
    (0..=n)
        .map(|m| {
            if m > 0 {
                inv_fact /= T::from_usize_lossy(m);
            }
            let sign = if m % 2 == 0 { T::one() } else { -T::one() };
            sign * inv_fact * binomial_general(nk, n - m)
        })
        .collect()
}

/// Physicists' Hermite polynomial `H_n(u)` via `H_{n+1} = 2u H_n - 2n H_{n-1}`.
pub fn hermite<T: Real>(n: usize, u: T) -> T {
    let two = T::two();
    let mut prev = T::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two * u;
    for j in 1..n {
        let next = two * u * cur - two * T::from_usize_lossy(j) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Power-series coefficients of `H_n`: entry `i` multiplies `u^i`.
pub fn hermite_coefficients<T: Real>(n: usize) -> Vec<T> {
    let two = T::two();
    let mut prev = vec![T::one()];
    if n == 0 {
        return prev;
    }
    let mut cur = vec![T::zero(), two];
    for j in 1..n {
        let mut next = vec![T::zero(); j + 2];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += two * c;
        }
        let s = two * T::from_usize_lossy(j);
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= s * c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural logarithm of `Gamma(x)` for `x > 0` (Lanczos, g = 7).
pub fn log_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x < T::half() {
        // reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        let pi = T::PI();
        let s = (pi * x).sin();
        return Ok((pi / s).ln() - log_gamma(T::one() - x)?);
    }
    let z = x - T::one();
    let mut acc = T::lit(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += T::lit(c) / (z + T::from_usize_lossy(i));
    }
    let t = z + T::lit(LANCZOS_G) + T::half();
    let half_ln_two_pi = T::half() * (T::TAU()).ln();
    Ok(half_ln_two_pi + (z + T::half()) * t.ln() - t + acc.ln())
}

/// `a (a-1) ... (a-j+1) / j!` for real `a`. Vanishes for integer `0 <= a < j`.
pub fn binomial_general<T: Real>(a: T, j: usize) -> T {
    let mut acc = T::one();
    for t in 0..j {
        let tt = T::from_usize_lossy(t);
        acc = acc * (a - tt) / (tt + T::one());
    }
    acc
}

/// `ln(n!)`.
pub fn log_factorial<T: Real>(n: usize) -> T {
    // n + 1 >= 1 so the domain check cannot fail
    log_gamma(T::from_usize_lossy(n) + T::one()).unwrap_or_else(|_| T::zero())
}
