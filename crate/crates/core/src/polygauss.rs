//! Exact calculus on `P(q, p) * exp(-a q^2 - c p^2)` with complex polynomial `P`.
//!
//! The differential operators in the relative Wigner function are polynomials in two
//! commuting symbols: the position `q` (a parameter of the momentum functions, never
//! differentiated) and `d = d/dp`. Applying such an operator to a Gaussian ansatz stays
//! inside the ansatz family, so everything here is closed-form coefficient algebra.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::specfun::{binomial_general, laguerre_coefficients, LaguerreOrder};

type Exponents = (usize, usize);

/// Bivariate polynomial with complex coefficients keyed by `(q power, p power)`.
///
/// Coefficients whose magnitude falls below [`Real::prune_threshold`] are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct BiPoly<T> {
    coeffs: BTreeMap<Exponents, Complex<T>>,
}

impl<T: Real> Default for BiPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Real> BiPoly<T> {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex::one())
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: usize, j: usize, c: Complex<T>) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p.prune(T::prune_threshold());
        p
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Self::monomial(1, 0, Complex::one())
    }

    /// The polynomial `p`.
    pub fn p() -> Self {
        Self::monomial(0, 1, Complex::one())
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Complex<T>)>,
    {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p.prune(T::prune_threshold());
        p
    }

    /// Accumulates `c q^i p^j` without pruning.
    fn add_term(&mut self, i: usize, j: usize, c: Complex<T>) {
        *self.coeffs.entry((i, j)).or_insert_with(Complex::zero) += c;
    }

    /// Drops coefficients with magnitude below `threshold` (exact zeros are always dropped).
    pub fn prune(&mut self, threshold: T) {
        self.coeffs.retain(|_, c| {
            let m = c.norm();
            m != T::zero() && !(m < threshold)
        });
    }

    pub fn coeff(&self, i: usize, j: usize) -> Complex<T> {
        self.coeffs.get(&(i, j)).copied().unwrap_or_else(Complex::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Complex<T>)> + '_ {
        self.coeffs.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same as [`is_zero`](Self::is_zero): no stored terms.
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn degree_q(&self) -> usize {
        self.coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn degree_p(&self) -> usize {
        self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.coeffs.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn max_abs_coeff(&self) -> T {
        self.coeffs.values().fold(T::zero(), |m, c| m.max(c.norm()))
    }

    pub fn max_abs_imag(&self) -> T {
        self.coeffs.values().fold(T::zero(), |m, c| m.max(c.im.abs()))
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self::from_terms(self.terms().map(|(i, j, c)| (i, j, c * s)))
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: usize) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&(i, j), &c)| ((i + k, j), c)).collect() }
    }

    /// Largest coefficient deviation between two tables.
    pub fn max_deviation(&self, other: &Self) -> T {
        let mut dev = T::zero();
        for (i, j, c) in self.terms() {
            dev = dev.max((c - other.coeff(i, j)).norm());
        }
        for (i, j, c) in other.terms() {
            if !self.coeffs.contains_key(&(i, j)) {
                dev = dev.max(c.norm());
            }
        }
        dev
    }

    /// Horner evaluation in `p` for each `q` power, then Horner in `q`.
    pub fn eval(&self, q: T, p: T) -> Complex<T> {
        let Some(dq) = self.coeffs.keys().map(|&(i, _)| i).max() else {
            return Complex::zero();
        };
        let mut acc = Complex::zero();
        for i in (0..=dq).rev() {
            let mut row = Complex::zero();
            let mut last_j: Option<usize> = None;
            // descending p powers within the row
            for (&(_, j), &c) in self.coeffs.range((i, 0)..(i + 1, 0)).rev() {
                if let Some(lj) = last_j {
                    row *= p.powi((lj - j) as i32);
                }
                row += c;
                last_j = Some(j);
            }
            if let Some(lj) = last_j {
                row *= p.powi(lj as i32);
            }
            acc = acc * q + row;
        }
        acc
    }
}

/// Exact convolution of coefficient tables.
pub fn poly_mul<T: Real>(f: &BiPoly<T>, g: &BiPoly<T>) -> BiPoly<T> {
    let mut out = BiPoly::zero();
    for (i, j, a) in f.terms() {
        for (k, l, b) in g.terms() {
            out.add_term(i + k, j + l, a * b);
        }
    }
    out.prune(T::prune_threshold());
    out
}

impl<T: Real> Add for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn add(self, rhs: Self) -> BiPoly<T> {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c);
        }
        out.prune(T::prune_threshold());
        out
    }
}

impl<T: Real> Sub for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn sub(self, rhs: Self) -> BiPoly<T> {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, -c);
        }
        out.prune(T::prune_threshold());
        out
    }
}

impl<T: Real> Mul for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn mul(self, rhs: Self) -> BiPoly<T> {
        poly_mul(self, rhs)
    }
}

impl<T: Real> Neg for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn neg(self) -> BiPoly<T> {
        self.scale(-Complex::one())
    }
}

/// `poly(q, p) * exp(-a q^2 - c p^2)` with `a >= 0`, `c > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianAnsatz<T> {
    poly: BiPoly<T>,
    a: T,
    c: T,
}

impl<T: Real> GaussianAnsatz<T> {
    pub fn new(poly: BiPoly<T>, a: T, c: T) -> Result<Self> {
        if !(a >= T::zero()) || !a.is_finite() {
            return Err(Error::InvalidParameter(format!("q envelope rate must be >= 0, got {a}")));
        }
        if !(c > T::zero()) || !c.is_finite() {
            return Err(Error::InvalidParameter(format!("p envelope rate must be > 0, got {c}")));
        }
        Ok(Self { poly, a, c })
    }

    /// Bare envelope `exp(-a q^2 - c p^2)`.
    pub fn gaussian(a: T, c: T) -> Result<Self> {
        Self::new(BiPoly::one(), a, c)
    }

    pub fn poly(&self) -> &BiPoly<T> {
        &self.poly
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn c(&self) -> T {
        self.c
    }

    fn with_poly(&self, poly: BiPoly<T>) -> Self {
        Self { poly, a: self.a, c: self.c }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        self.with_poly(self.poly.scale(s))
    }

    pub fn mul_poly(&self, m: &BiPoly<T>) -> Self {
        self.with_poly(poly_mul(&self.poly, m))
    }

    /// Sum of two ansatz values sharing the same envelope.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.a != other.a || self.c != other.c {
            return Err(Error::InvalidParameter("envelope rates differ".into()));
        }
        Ok(self.with_poly(&self.poly + &other.poly))
    }

    /// `d/dp` of the full function: `(dP/dp - 2 c p P) exp(envelope)`.
    pub fn differentiate_p(&self) -> Self {
        let mut out = BiPoly::zero();
        let minus_two_c = Complex::from(-(self.c + self.c));
        for (i, j, coef) in self.poly.terms() {
            if j > 0 {
                out.add_term(i, j - 1, coef * T::from_usize_lossy(j));
            }
            out.add_term(i, j + 1, coef * minus_two_c);
        }
        out.prune(T::prune_threshold());
        self.with_poly(out)
    }

    pub fn eval(&self, q: T, p: T) -> Complex<T> {
        self.poly.eval(q, p) * (-(self.a * q * q) - self.c * p * p).exp()
    }
}

/// Free-function form of [`GaussianAnsatz::differentiate_p`].
pub fn differentiate_p<T: Real>(f: &GaussianAnsatz<T>) -> GaussianAnsatz<T> {
    f.differentiate_p()
}

/// Free-function form of [`GaussianAnsatz::eval`].
pub fn eval_ansatz<T: Real>(f: &GaussianAnsatz<T>, q: T, p: T) -> Complex<T> {
    f.eval(q, p)
}

/// Polynomial in the commuting symbols `q` and `d = d/dp`; key `(i, j)` means `q^i d^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorPoly<T>(BiPoly<T>);

impl<T: Real> OperatorPoly<T> {
    pub fn identity() -> Self {
        Self(BiPoly::one())
    }

    pub fn zero() -> Self {
        Self(BiPoly::zero())
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self(BiPoly::constant(c))
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Complex<T>)>,
    {
        Self(BiPoly::from_terms(terms))
    }

    /// `x q + y d`.
    pub fn linear(x: Complex<T>, y: Complex<T>) -> Self {
        Self::from_terms([(1, 0, x), (0, 1, y)])
    }

    /// `q + sign * i * d`.
    pub fn q_plus_signed_i_d(sign: Sign) -> Self {
        Self::linear(Complex::one(), Complex::new(T::zero(), sign.value()))
    }

    /// `q^2 + d^2`.
    pub fn q2_plus_d2() -> Self {
        Self::from_terms([(2, 0, Complex::one()), (0, 2, Complex::one())])
    }

    pub fn table(&self) -> &BiPoly<T> {
        &self.0
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Complex<T>)> + '_ {
        self.0.terms()
    }

    pub fn max_d_power(&self) -> usize {
        self.0.degree_p()
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self(self.0.scale(s))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::identity();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `sum_m coeffs[m] * self^m` by Horner's rule.
    pub fn compose(coeffs: &[Complex<T>], x: &Self) -> Self {
        let mut acc = Self::zero();
        for &c in coeffs.iter().rev() {
            acc = &(&acc * x) + &Self::constant(c);
        }
        acc
    }
}

impl<T: Real> Add for &OperatorPoly<T> {
    type Output = OperatorPoly<T>;
    fn add(self, rhs: Self) -> OperatorPoly<T> {
        OperatorPoly(&self.0 + &rhs.0)
    }
}

impl<T: Real> Sub for &OperatorPoly<T> {
    type Output = OperatorPoly<T>;
    fn sub(self, rhs: Self) -> OperatorPoly<T> {
        OperatorPoly(&self.0 - &rhs.0)
    }
}

impl<T: Real> Mul for &OperatorPoly<T> {
    type Output = OperatorPoly<T>;
    fn mul(self, rhs: Self) -> OperatorPoly<T> {
        OperatorPoly(poly_mul(&self.0, &rhs.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value<T: Real>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }
}

/// Applies `sum c_ij q^i d^j` to `f`: each term differentiates `j` times, multiplies by `q^i`.
pub fn apply_operator<T: Real>(op: &OperatorPoly<T>, f: &GaussianAnsatz<T>) -> GaussianAnsatz<T> {
    let max_j = op.max_d_power();
    let mut derivs = Vec::with_capacity(max_j + 1);
    derivs.push(f.poly.clone());
    let mut cur = f.clone();
    for _ in 0..max_j {
        cur = cur.differentiate_p();
        derivs.push(cur.poly.clone());
    }
    let mut out = BiPoly::zero();
    for (i, j, c) in op.terms() {
        for (k, l, v) in derivs[j].terms() {
            out.add_term(i + k, l, c * v);
        }
    }
    out.prune(T::prune_threshold());
    f.with_poly(out)
}

/// `L_n^k(scale * (q + sign i d)^2)` expanded through the Laguerre power series and the
/// binomial expansion of the squared linear form.
pub fn laguerre_operator<T: Real>(n: usize, k: LaguerreOrder<T>, scale: T, sign: Sign) -> OperatorPoly<T> {
    let lag = laguerre_coefficients(n, k.get());
    let si = Complex::new(T::zero(), sign.value());
    let mut terms = Vec::new();
    let mut scale_pow = T::one();
    for (m, &cm) in lag.iter().enumerate() {
        if m > 0 {
            scale_pow *= scale;
        }
        let two_m = 2 * m;
        let mut si_pow = Complex::one();
        for mu in 0..=two_m {
            if mu > 0 {
                si_pow *= si;
            }
            let b = binomial_general(T::from_usize_lossy(two_m), mu);
            terms.push((two_m - mu, mu, si_pow * (cm * scale_pow * b)));
        }
    }
    OperatorPoly::from_terms(terms)
}

/// A realified ansatz stored as a dense real table for fast repeated evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct RealAnsatz<T> {
    /// Row `i` holds the coefficients of `q^i p^j` for `j = 0..=degree_p`.
    rows: Vec<Vec<T>>,
    a: T,
    c: T,
    residue: T,
}

impl<T: Real> RealAnsatz<T> {
    /// `max |Im coeff| / max |coeff|` of the ansatz this came from.
    pub fn residue(&self) -> T {
        self.residue
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn c(&self) -> T {
        self.c
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.rows.get(i).and_then(|r| r.get(j)).copied().unwrap_or_else(T::zero)
    }

    pub fn eval_poly(&self, q: T, p: T) -> T {
        let mut acc = T::zero();
        for row in self.rows.iter().rev() {
            let r = row.iter().rev().fold(T::zero(), |s, &c| s * p + c);
            acc = acc * q + r;
        }
        acc
    }

    pub fn eval(&self, q: T, p: T) -> T {
        self.eval_poly(q, p) * (-(self.a * q * q) - self.c * p * p).exp()
    }

    pub fn to_ansatz(&self) -> GaussianAnsatz<T> {
        let poly = BiPoly::from_terms(
            self.rows
                .iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &c)| (i, j, Complex::from(c)))),
        );
        GaussianAnsatz { poly, a: self.a, c: self.c }
    }
}

/// Strips imaginary parts, failing with `NumericResidue` if the relative residue exceeds `tol`.
pub fn realify<T: Real>(f: &GaussianAnsatz<T>, tol: T) -> Result<RealAnsatz<T>> {
    let max = f.poly.max_abs_coeff();
    let residue = if max > T::zero() { f.poly.max_abs_imag() / max } else { T::zero() };
    if !(residue <= tol) {
        return Err(Error::NumericResidue {
            residue: residue.to_f64().unwrap_or(f64::NAN),
            tol: tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    let dq = f.poly.degree_q();
    let dp = f.poly.degree_p();
    let mut rows = if f.poly.is_zero() { Vec::new() } else { vec![vec![T::zero(); dp + 1]; dq + 1] };
    for (i, j, c) in f.poly.terms() {
        rows[i][j] = c.re;
    }
    Ok(RealAnsatz { rows, a: f.a, c: f.c, residue })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    fn gauss(cp: f64) -> GaussianAnsatz<f64> {
        GaussianAnsatz::gaussian(0.0, cp).unwrap()
    }

    #[test]
    fn poly_mul_examples() {
        let one = BiPoly::<f64>::one();
        assert_eq!(poly_mul(&one, &one), one);

        let a = BiPoly::from_terms([(1, 0, c(1.0, 0.0)), (0, 1, c(0.0, 1.0))]);
        let b = BiPoly::from_terms([(1, 0, c(1.0, 0.0)), (0, 1, c(0.0, -1.0))]);
        let expect = BiPoly::from_terms([(2, 0, c(1.0, 0.0)), (0, 2, c(1.0, 0.0))]);
        assert_eq!(poly_mul(&a, &b), expect);
        assert_eq!(poly_mul(&a, &b).len(), 2, "cross terms must be pruned");

        let p = BiPoly::<f64>::p();
        let p2 = poly_mul(&p, &p);
        assert_eq!(poly_mul(&p, &p2), BiPoly::monomial(0, 3, c(1.0, 0.0)));
    }

    #[test]
    fn differentiate_examples() {
        let d = gauss(0.5).differentiate_p();
        assert_eq!(d.poly(), &BiPoly::monomial(0, 1, c(-1.0, 0.0)));

        let f = GaussianAnsatz::new(BiPoly::p(), 0.0, 0.5).unwrap();
        let expect = BiPoly::from_terms([(0, 0, c(1.0, 0.0)), (0, 2, c(-1.0, 0.0))]);
        assert_eq!(f.differentiate_p().poly(), &expect);

        let dd = gauss(0.5).differentiate_p().differentiate_p();
        let expect = BiPoly::from_terms([(0, 2, c(1.0, 0.0)), (0, 0, c(-1.0, 0.0))]);
        assert_eq!(dd.poly(), &expect);
    }

    #[test]
    fn apply_operator_examples() {
        let d2 = OperatorPoly::from_terms([(0, 2, c(1.0, 0.0))]);
        let out = apply_operator(&d2, &gauss(0.5));
        assert_eq!(out.poly(), &BiPoly::from_terms([(0, 2, c(1.0, 0.0)), (0, 0, c(-1.0, 0.0))]));

        let op = OperatorPoly::q_plus_signed_i_d(Sign::Minus);
        let out = apply_operator(&op, &gauss(0.5));
        assert_eq!(out.poly(), &BiPoly::from_terms([(1, 0, c(1.0, 0.0)), (0, 1, c(0.0, 1.0))]));
    }

    #[test]
    fn squared_laplacian_like_operator_at_origin() {
        // (q^2 + d^2)^2 on exp(-p^2/2) at the origin; oracle: 5-point-stencil fourth derivative
        let op = OperatorPoly::q2_plus_d2().pow(2);
        let out = apply_operator(&op, &gauss(0.5));
        let v = out.eval(0.0, 0.0);
        assert_relative_eq!(v.re, 3.0, max_relative = 1e-14);
        assert_eq!(v.im, 0.0);

        let g = |p: f64| (-0.5 * p * p).exp();
        let h = 1e-2;
        let fd4 = (g(2.0 * h) - 4.0 * g(h) + 6.0 * g(0.0) - 4.0 * g(-h) + g(-2.0 * h)) / h.powi(4);
        assert!((fd4 - 3.0).abs() < 1e-3, "finite-difference fourth derivative {fd4}");
    }

    #[test]
    fn laguerre_operator_examples() {
        let k = LaguerreOrder::new(1.5).unwrap();
        assert_eq!(laguerre_operator(0, k, 0.7, Sign::Plus), OperatorPoly::identity());

        let s = 0.7;
        let op = laguerre_operator(1, k, s, Sign::Minus);
        let expect = OperatorPoly::from_terms([
            (0, 0, c(2.5, 0.0)),
            (2, 0, c(-s, 0.0)),
            (1, 1, c(0.0, 2.0 * s)),
            (0, 2, c(s, 0.0)),
        ]);
        assert!(op.table().max_deviation(expect.table()) < 1e-15);
    }

    #[test]
    fn realify_behaviour() {
        let f = GaussianAnsatz::new(BiPoly::from_terms([(2, 0, c(1.0, 0.0)), (0, 2, c(1.0, 0.0))]), 0.0, 0.5).unwrap();
        let r = realify(&f, 1e-9).unwrap();
        assert_eq!(r.residue(), 0.0);
        assert_eq!(r.to_ansatz(), f);

        // conjugate Laguerre operators produce a real polynomial
        let k = LaguerreOrder::from_alpha(1.0).unwrap();
        let op = &laguerre_operator(1, k, 0.5, Sign::Minus) * &laguerre_operator(1, k, 0.5, Sign::Plus);
        let out = apply_operator(&op, &gauss(0.5));
        let r = realify(&out, 1e-9).unwrap();
        assert!(r.residue() <= 1e-12);

        let imag = GaussianAnsatz::new(BiPoly::monomial(0, 1, c(0.0, 1.0)), 0.0, 1.0).unwrap();
        assert!(matches!(realify(&imag, 1e-9), Err(Error::NumericResidue { .. })));
    }

    #[test]
    fn eval_examples() {
        let g = GaussianAnsatz::gaussian(0.5, 0.5).unwrap();
        assert_eq!(eval_ansatz(&g, 0.0, 0.0), c(1.0, 0.0));

        let f = BiPoly::from_terms([(2, 0, c(1.0, 0.0)), (0, 2, c(1.0, 0.0))]);
        assert_eq!(f.eval(1.0, 2.0), c(5.0, 0.0));
        let r = realify(&GaussianAnsatz::new(f, 0.0, 1e-300).unwrap(), 1e-9).unwrap();
        assert_eq!(r.eval_poly(1.0, 2.0), 5.0);
    }

    #[test]
    fn rejects_invalid_envelopes() {
        assert!(GaussianAnsatz::<f64>::gaussian(-1.0, 1.0).is_err());
        assert!(GaussianAnsatz::<f64>::gaussian(0.0, 0.0).is_err());
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let poly =
            BiPoly::from_terms([(0, 0, c(0.3, 0.1)), (1, 1, c(-1.2, 0.0)), (0, 3, c(0.5, -0.4)), (2, 2, c(0.0, 0.7))]);
        let f = GaussianAnsatz::new(poly, 0.4, 0.6).unwrap();
        let df = f.differentiate_p();
        let h = 1e-4;
        for qi in 0..5 {
            for pi in 0..5 {
                let q = -1.0 + 0.5 * qi as f64;
                let p = -1.0 + 0.5 * pi as f64;
                let fd = (f.eval(q, p + h) - f.eval(q, p - h)) / (2.0 * h);
                assert!((fd - df.eval(q, p)).norm() < 1e-6, "at ({q},{p})");
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_op() -> impl Strategy<Value = OperatorPoly<f64>> {
            proptest::collection::vec((0usize..4, 0usize..4, -2.0f64..2.0, -2.0f64..2.0), 1..6)
                .prop_map(|v| OperatorPoly::from_terms(v.into_iter().map(|(i, j, re, im)| (i, j, c(re, im)))))
        }

        proptest! {
            #[test]
            fn apply_is_linear(a in small_op(), b in small_op(), cp in 0.2f64..2.0) {
                let f = gauss(cp);
                let lhs = apply_operator(&(&a + &b), &f);
                let rhs = apply_operator(&a, &f).try_add(&apply_operator(&b, &f)).unwrap();
                let scale = lhs.poly().max_abs_coeff().max(1.0);
                prop_assert!(lhs.poly().max_deviation(rhs.poly()) <= 1e-12 * scale);
            }

            #[test]
            fn laguerre_operator_commutes_with_q2_plus_d2(
                n in 0usize..=4, alpha in 0usize..4, s in 0.3f64..2.0, plus in any::<bool>(), cp in 0.2f64..1.5
            ) {
                let sign = if plus { Sign::Plus } else { Sign::Minus };
                let l = laguerre_operator(n, LaguerreOrder::from_alpha(alpha as f64).unwrap(), s, sign);
                let q2d2 = OperatorPoly::q2_plus_d2();
                let f = gauss(cp);
                let lhs = apply_operator(&q2d2, &apply_operator(&l, &f));
                let rhs = apply_operator(&l, &apply_operator(&q2d2, &f));
                let scale = lhs.poly().max_abs_coeff().max(1.0);
                prop_assert!(lhs.poly().max_deviation(rhs.poly()) <= 1e-11 * scale);
            }

            #[test]
            fn laguerre_operator_degree_bound(
                n in 0usize..=5, s in 0.3f64..2.0, plus in any::<bool>(), base in small_op()
            ) {
                let sign = if plus { Sign::Plus } else { Sign::Minus };
                let f = apply_operator(&base, &gauss(0.5));
                let l = laguerre_operator(n, LaguerreOrder::new(0.5).unwrap(), s, sign);
                let g = apply_operator(&l, &f);
                prop_assert!(g.poly().total_degree() <= f.poly().total_degree() + 2 * n);
            }
        }
    }
}
