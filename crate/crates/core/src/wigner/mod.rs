//! Wigner-function evaluators for the centre-of-mass and relative motions.
//!
//! # Conventions
//!
//! All quantities are dimensionless and scaled by `pi hbar`:
//!
//! * centre of mass: `W_cm(Q, P) = int dY Phi(Q + Y) Phi(Q - Y) exp(4 i P Y)`,
//! * relative: `W_rel(q, p) = int dy Psi(q + y) Psi(q - y) exp(i p y)`,
//!
//! with the normalized eigenfunctions of [`crate::csm`]. The relative momentum `p` is twice
//! the canonical momentum conjugate to `q`, which is why the kernel carries `p y` rather
//! than `2 p y`. With this scaling the ground state (`n = 0`, `alpha = 0`) is
//! `exp(-w q^2 / 2 - p^2 / (2 w))`, taking the value 1 at the origin. The same choices
//! give `int int W_rel dq dp = 2 pi`, `int W_rel dp = 2 pi |Psi(q)|^2`,
//! `int int W_cm dQ dP = pi / 2` and `int W_cm dP = (pi / 2) |Phi(Q)|^2`.
//!
//! Replacing `y` by `-i d/dp` under the `p`-Fourier integral turns the overlap into
//! differential operators acting on the Gaussian `exp(-p^2 / (2 w))`:
//!
//! ```text
//! W = sqrt(pi) n! / Gamma(n + alpha + 1/2) exp(-w q^2 / 2)
//!     L[(w/2)(q - i d)^2] L[(w/2)(q + i d)^2] [(w/2)(q^2 + d^2)]^alpha exp(-p^2 / (2 w))
//! ```
//!
//! which is what the operator path evaluates exactly. The series path expands the same
//! overlap into Gaussian moments, and the quadrature path integrates the overlap directly.

mod closed;
mod cm;
mod grid;
mod identities;
mod operator;
mod quadrature;
mod series;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::QuadConfig;
use crate::scalar::Real;

pub use closed::{
    rel_wigner_asymptotic, rel_wigner_g0, rel_wigner_g0_even_sector, rel_wigner_g0_odd_sector, total_wigner,
    zero_ellipses, ZeroEllipse,
};
pub use cm::{cm_wigner, cm_wigner_quad};
pub use grid::{grid_eval, positive_extrema, GridSpec, GridValues, Preset};
pub use identities::{identity_hermite_laguerre_check, identity_operator_halfodd_check, IdentityReport};
pub use operator::{rel_wigner_operator, RelativeOperatorWigner};
pub use quadrature::rel_wigner_quad;
pub use series::{f_integral_closed, rel_wigner_series};

/// A point in dimensionless phase space.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PhasePoint<T> {
    pub q: T,
    pub p: T,
}

impl<T> PhasePoint<T> {
    pub fn new(q: T, p: T) -> Self {
        Self { q, p }
    }
}

impl<T: Real> PhasePoint<T> {
    pub fn origin() -> Self {
        Self { q: T::zero(), p: T::zero() }
    }

    pub fn is_finite(&self) -> bool {
        self.q.is_finite() && self.p.is_finite()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cm,
    Relative,
    Total,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Operator,
    Series,
    Quadrature,
    ClosedG0,
    Asymptotic,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Operator => "operator",
            Method::Series => "series",
            Method::Quadrature => "quadrature",
            Method::ClosedG0 => "closed_g0",
            Method::Asymptotic => "asymptotic",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A Wigner value with its provenance and diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult<T> {
    pub value: T,
    pub method: Method,
    /// Relative imaginary residue (operator path) or imaginary magnitude (series/quadrature).
    pub imag_residue: T,
    /// Quadrature error estimate; zero on exact paths.
    pub quad_error: T,
    /// Set when the value depends on the `|q|^alpha` extension for non-integer `alpha`.
    pub convention_dependent: bool,
}

impl<T: Real> EvalResult<T> {
    pub fn exact(value: T, method: Method) -> Self {
        Self { value, method, imag_residue: T::zero(), quad_error: T::zero(), convention_dependent: false }
    }
}

fn check_residue<T: Real>(residue: T, tol: T) -> Result<()> {
    if residue <= tol {
        Ok(())
    } else {
        Err(Error::NumericResidue {
            residue: residue.to_f64().unwrap_or(f64::NAN),
            tol: tol.to_f64().unwrap_or(f64::NAN),
        })
    }
}

/// Integer `alpha` as `usize`, or an error naming the method that needs it.
pub(crate) fn integer_alpha<T: Real>(alpha: T, method: Method) -> Result<usize> {
    if alpha >= T::zero() && alpha.fract() == T::zero() {
        if let Some(a) = alpha.to_usize() {
            return Ok(a);
        }
    }
    Err(Error::UnsupportedMethod { method: method.name(), reason: format!("non-integer alpha = {alpha}") })
}

pub(crate) fn check_omega_bar<T: Real>(omega_bar: T) -> Result<()> {
    if omega_bar > T::zero() && omega_bar.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("omega_bar must be positive, got {omega_bar}")))
    }
}

/// Everything needed to evaluate one Wigner function at arbitrary points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WignerSpec<T> {
    pub kind: Kind,
    /// Centre-of-mass quantum number.
    pub l: usize,
    /// Relative quantum number.
    pub n: usize,
    pub alpha: T,
    pub omega_bar: T,
    pub method: Method,
    /// Fixed centre-of-mass coordinates used when `kind` is `Total`.
    pub cm_point: PhasePoint<T>,
    pub quad: QuadConfig<T>,
}

impl<T: Real> WignerSpec<T> {
    pub fn relative(n: usize, alpha: T, omega_bar: T, method: Method) -> Self {
        Self {
            kind: Kind::Relative,
            l: 0,
            n,
            alpha,
            omega_bar,
            method,
            cm_point: PhasePoint::origin(),
            quad: QuadConfig::default(),
        }
    }

    pub fn cm(l: usize) -> Self {
        Self { kind: Kind::Cm, l, ..Self::relative(0, T::zero(), T::one(), Method::Operator) }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega_bar >= T::one()) || !self.omega_bar.is_finite() {
            return Err(Error::InvalidParameter(format!("omega_bar must be >= 1, got {}", self.omega_bar)));
        }
        if !(self.alpha >= T::zero()) || !self.alpha.is_finite() {
            return Err(Error::InvalidParameter(format!("alpha must be >= 0, got {}", self.alpha)));
        }
        if self.kind == Kind::Cm {
            return Ok(());
        }
        match self.method {
            Method::Operator | Method::Series => {
                integer_alpha(self.alpha, self.method)?;
            }
            Method::ClosedG0 | Method::Asymptotic => {
                if self.alpha != T::zero() && self.alpha != T::one() {
                    return Err(Error::UnsupportedMethod {
                        method: self.method.name(),
                        reason: format!("alpha = {} (only 0 or 1)", self.alpha),
                    });
                }
            }
            Method::Quadrature => {}
        }
        Ok(())
    }

    /// Combined oscillator index `2n + alpha` of the `g = 0` sectors.
    pub fn g0_index(&self) -> Result<usize> {
        let a = integer_alpha(self.alpha, self.method)?;
        if a > 1 {
            return Err(Error::UnsupportedMethod { method: self.method.name(), reason: format!("alpha = {a}") });
        }
        Ok(2 * self.n + a)
    }

    /// Builds a reusable evaluator, constructing the operator ansatz once if needed.
    pub fn prepare(&self) -> Result<PreparedSpec<T>> {
        self.validate()?;
        let operator = match (self.kind, self.method) {
            (Kind::Relative | Kind::Total, Method::Operator) => {
                Some(RelativeOperatorWigner::new(self.n, integer_alpha(self.alpha, self.method)?, self.omega_bar)?)
            }
            _ => None,
        };
        Ok(PreparedSpec { spec: *self, operator })
    }
}

/// A validated [`WignerSpec`] with its cached operator ansatz.
#[derive(Debug, Clone)]
pub struct PreparedSpec<T> {
    spec: WignerSpec<T>,
    operator: Option<RelativeOperatorWigner<T>>,
}

impl<T: Real> PreparedSpec<T> {
    pub fn spec(&self) -> &WignerSpec<T> {
        &self.spec
    }

    /// Relative Wigner value at `pt` by the spec's method.
    pub fn relative(&self, pt: PhasePoint<T>) -> Result<EvalResult<T>> {
        let s = &self.spec;
        match s.method {
            Method::Operator => match &self.operator {
                Some(op) => op.eval(pt),
                None => rel_wigner_operator(s.n, integer_alpha(s.alpha, s.method)?, s.omega_bar, pt),
            },
            Method::Series => rel_wigner_series(s.n, integer_alpha(s.alpha, s.method)?, s.omega_bar, pt),
            Method::Quadrature => rel_wigner_quad(s.n, s.alpha, s.omega_bar, pt, &s.quad),
            Method::ClosedG0 => rel_wigner_g0(s.g0_index()?, s.omega_bar, pt),
            Method::Asymptotic => {
                let v = rel_wigner_asymptotic(s.g0_index()?, s.omega_bar, pt)?;
                Ok(EvalResult::exact(v, Method::Asymptotic))
            }
        }
    }

    /// Evaluates at `pt`, whose meaning depends on the kind: `(Q, P)` for the centre of mass,
    /// `(q, p)` otherwise.
    pub fn eval(&self, pt: PhasePoint<T>) -> Result<EvalResult<T>> {
        match self.spec.kind {
            Kind::Cm => Ok(cm_wigner(self.spec.l, pt.q, pt.p)),
            Kind::Relative => self.relative(pt),
            Kind::Total => {
                let cm = cm_wigner(self.spec.l, self.spec.cm_point.q, self.spec.cm_point.p);
                let rel = self.relative(pt)?;
                Ok(EvalResult { value: cm.value * rel.value, quad_error: cm.value.abs() * rel.quad_error, ..rel })
            }
        }
    }
}
