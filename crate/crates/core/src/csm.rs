//! Two-particle Calogero-Sutherland model: parameter derivation, spectra and
//! eigenfunctions.
//!
//! Everything downstream works in dimensionless units. Lengths are measured in
//! `l = sqrt(hbar / (m w_trap))`, momenta in `hbar / l`, and the relative motion is fixed by
//! the sector exponent `alpha` together with `omega_bar = omega / w_trap`.
//!
//! Relative eigenfunctions are extended to the whole line. For integer `alpha` the factor
//! `q^alpha` keeps its sign, which reproduces the even/odd oscillator sectors at `g = 0`.
//! Non-integer `alpha` uses `|q|^alpha`; that choice is a convention and results built on
//! it are flagged as such.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::specfun::{hermite, laguerre, log_factorial, log_gamma, LaguerreOrder};

/// Physical inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RawParams<T> {
    /// Particle mass.
    pub m: T,
    /// Confining (trap) frequency.
    pub omega_trap: T,
    /// Harmonic pair-interaction frequency.
    pub omega_pair: T,
    /// Inverse-square coupling.
    pub g: T,
    pub hbar: T,
}

impl<T: Real> RawParams<T> {
    /// Unit mass-and-action parameters (`m = 2`, so `mu = 1`; `hbar = w_trap = 1`) realizing a
    /// given `(alpha, omega_bar)` pair. `alpha = 0` needs the negative sector.
    pub fn from_dimensionless(alpha: T, omega_bar: T) -> Result<Self> {
        if !(alpha >= T::zero()) {
            return Err(Error::InvalidParameter(format!("alpha must be >= 0, got {alpha}")));
        }
        if !(omega_bar >= T::one()) {
            return Err(Error::InvalidParameter(format!("omega_bar must be >= 1, got {omega_bar}")));
        }
        let beta = alpha - T::half();
        // 2 mu g / hbar^2 = beta^2 - 1/4 with mu = hbar = 1
        let g = T::half() * (beta * beta - T::lit(0.25));
        let omega_pair = (T::half() * (omega_bar * omega_bar - T::one())).sqrt();
        Ok(Self { m: T::two(), omega_trap: T::one(), omega_pair, g, hbar: T::one() })
    }

    /// Lower bound `-hbar^2 / (8 mu)` on the coupling.
    pub fn coupling_bound(&self) -> T {
        let mu = T::half() * self.m;
        -(self.hbar * self.hbar) / (T::lit(8.0) * mu)
    }
}

/// Which root of `beta^2 = 1/4 + 2 mu g / hbar^2` to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SectorChoice {
    #[default]
    Positive,
    /// Only admissible at `g = 0`, where it gives the even oscillator sector `alpha = 0`.
    Negative,
}

/// Raw inputs plus every derived model quantity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams<T> {
    pub raw: RawParams<T>,
    pub sector: SectorChoice,
    /// Reduced mass `m / 2`.
    pub mu: T,
    /// Total mass `2 m`.
    pub total_mass: T,
    /// Hybrid frequency `sqrt(w_trap^2 + 2 w_pair^2)`.
    pub omega: T,
    /// `mu omega / hbar`.
    pub b: T,
    pub beta: T,
    /// `beta + 1/2`.
    pub alpha: T,
    /// Length unit `sqrt(hbar / (m w_trap))`.
    pub length_unit: T,
    /// `omega / w_trap`.
    pub omega_bar: T,
}

pub fn derive_params<T: Real>(raw: RawParams<T>, sector: SectorChoice) -> Result<ModelParams<T>> {
    let positive = |x: T| x > T::zero() && x.is_finite();
    if !positive(raw.m) || !positive(raw.omega_trap) || !positive(raw.hbar) {
        return Err(Error::InvalidParameter("m, omega_trap and hbar must be positive".into()));
    }
    if !(raw.omega_pair >= T::zero()) || !raw.g.is_finite() {
        return Err(Error::InvalidParameter("omega_pair must be >= 0 and g finite".into()));
    }
    let bound = raw.coupling_bound();
    if raw.g < bound {
        return Err(Error::CouplingOutOfRange {
            g: raw.g.to_f64().unwrap_or(f64::NAN),
            bound: bound.to_f64().unwrap_or(f64::NAN),
        });
    }
    if sector == SectorChoice::Negative && raw.g != T::zero() {
        return Err(Error::SectorInvalid { g: raw.g.to_f64().unwrap_or(f64::NAN) });
    }
    let mu = T::half() * raw.m;
    let total_mass = T::two() * raw.m;
    let omega = (raw.omega_trap * raw.omega_trap + T::two() * raw.omega_pair * raw.omega_pair).sqrt();
    let b = mu * omega / raw.hbar;
    let beta_sq = (T::lit(0.25) + T::two() * mu * raw.g / (raw.hbar * raw.hbar)).max(T::zero());
    let beta = match sector {
        SectorChoice::Positive => beta_sq.sqrt(),
        SectorChoice::Negative => -beta_sq.sqrt(),
    };
    Ok(ModelParams {
        raw,
        sector,
        mu,
        total_mass,
        omega,
        b,
        beta,
        alpha: beta + T::half(),
        length_unit: (raw.hbar / (raw.m * raw.omega_trap)).sqrt(),
        omega_bar: omega / raw.omega_trap,
    })
}

impl<T: Real> ModelParams<T> {
    /// Dimensionless position to physical.
    pub fn position_from_dimless(&self, q_bar: T) -> T {
        q_bar * self.length_unit
    }

    /// Dimensionless momentum to physical.
    pub fn momentum_from_dimless(&self, p_bar: T) -> T {
        p_bar * self.raw.hbar / self.length_unit
    }

    pub fn alpha_is_integer(&self) -> bool {
        self.alpha.fract() == T::zero()
    }
}

/// Relative energy `hbar omega (2n + beta + 1)`.
pub fn energy_rel<T: Real>(n: usize, p: &ModelParams<T>) -> T {
    p.raw.hbar * p.omega * (T::two() * T::from_usize_lossy(n) + p.beta + T::one())
}

/// Centre-of-mass energy `hbar w_trap (l + 1/2)`.
pub fn energy_cm<T: Real>(l: usize, p: &ModelParams<T>) -> T {
    p.raw.hbar * p.raw.omega_trap * (T::from_usize_lossy(l) + T::half())
}

/// `omega_bar = sqrt(1 + 2 omega0_bar^2)` from the dimensionless pair frequency.
pub fn omega_bar_from_pair<T: Real>(omega0_bar: T) -> T {
    (T::one() + T::two() * omega0_bar * omega0_bar).sqrt()
}

/// `q^alpha` extended to negative `q`: signed for integer `alpha`, even otherwise.
pub fn extended_power<T: Real>(q: T, alpha: T) -> T {
    if alpha == T::zero() {
        T::one()
    } else if alpha.fract() == T::zero() {
        match alpha.to_i32() {
            Some(k) => q.powi(k),
            None => q.abs().powf(alpha) * q.signum().powf(alpha),
        }
    } else {
        q.abs().powf(alpha)
    }
}

/// Normalized dimensionless relative eigenfunction for fixed `(n, alpha, omega_bar)`.
///
/// `Psi(q) = C (w/2)^(alpha/2) q^alpha exp(-w q^2 / 4) L_n^(alpha - 1/2)(w q^2 / 2)` with
/// `C = (w/2)^(1/4) sqrt(n! / Gamma(n + alpha + 1/2))` and `w = omega_bar`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativeEigenfunction<T> {
    n: usize,
    alpha: T,
    omega_bar: T,
    order: LaguerreOrder<T>,
    norm: T,
}

impl<T: Real> RelativeEigenfunction<T> {
    pub fn new(n: usize, alpha: T, omega_bar: T) -> Result<Self> {
        if !(alpha >= T::zero()) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!("alpha must be >= 0, got {alpha}")));
        }
        if !(omega_bar > T::zero()) || !omega_bar.is_finite() {
            return Err(Error::InvalidParameter(format!("omega_bar must be positive, got {omega_bar}")));
        }
        let order = LaguerreOrder::from_alpha(alpha)?;
        let half_w = T::half() * omega_bar;
        let ln_ratio = log_factorial::<T>(n) - log_gamma(T::from_usize_lossy(n) + alpha + T::half())?;
        let norm = half_w.powf(T::lit(0.25)) * (T::half() * ln_ratio).exp() * half_w.powf(T::half() * alpha);
        Ok(Self { n, alpha, omega_bar, order, norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn omega_bar(&self) -> T {
        self.omega_bar
    }

    /// Whether negative-`q` values rest on the even `|q|^alpha` convention.
    pub fn convention_dependent(&self) -> bool {
        self.alpha.fract() != T::zero()
    }

    pub fn eval(&self, q: T) -> T {
        let x = T::half() * self.omega_bar * q * q;
        self.norm * extended_power(q, self.alpha) * (-T::half() * x).exp() * laguerre(self.n, self.order, x)
    }
}

/// `Psi_bar_n(q_bar) = sqrt(l) Psi_n(l q_bar)` for the model's `alpha` and `omega_bar`.
pub fn wavefunction_rel<T: Real>(n: usize, q_bar: T, p: &ModelParams<T>) -> Result<T> {
    Ok(RelativeEigenfunction::new(n, p.alpha, p.omega_bar)?.eval(q_bar))
}

/// Dimensionless centre-of-mass oscillator eigenfunction (total mass `2m`, frequency
/// `w_trap`): `(2/pi)^(1/4) / sqrt(2^l l!) H_l(sqrt(2) Q) exp(-Q^2)`.
pub fn wavefunction_cm<T: Real>(l: usize, q_bar: T) -> T {
    let lt = T::from_usize_lossy(l);
    let ln_norm = T::lit(0.25) * (T::two() / T::PI()).ln() - T::half() * (lt * T::LN_2() + log_factorial::<T>(l));
    ln_norm.exp() * hermite(l, T::SQRT_2() * q_bar) * (-q_bar * q_bar).exp()
}

/// Residual of `Psi'' + (4 level + 2 beta + 2 - z^2 + (1/4 - beta^2) / z^2) Psi` for the level-`n`
/// eigenfunction, in `z = sqrt(mu omega / hbar) q`. With `level = n` the residual vanishes up
/// to discretization error; `Psi''` comes from a fourth-order central difference with step `h`.
pub fn ode_residual_at_level<T: Real>(n: usize, level: T, z: T, p: &ModelParams<T>, h: T) -> Result<T> {
    if z.abs() < T::lit(1e-6) {
        return Err(Error::SingularPoint(z.to_f64().unwrap_or(f64::NAN)));
    }
    let psi = RelativeEigenfunction::new(n, p.alpha, p.omega_bar)?;
    let to_q = (T::half() * p.omega_bar).sqrt().recip();
    let f = |zz: T| psi.eval(zz * to_q);
    let twelve = T::lit(12.0);
    let d2 = (-f(z + h + h) + T::lit(16.0) * f(z + h) - T::lit(30.0) * f(z) + T::lit(16.0) * f(z - h) - f(z - h - h))
        / (twelve * h * h);
    let beta = p.beta;
    let coeff = T::lit(4.0) * level + T::two() * beta + T::two() - z * z + (T::lit(0.25) - beta * beta) / (z * z);
    Ok(d2 + coeff * f(z))
}

/// [`ode_residual_at_level`] at the eigenvalue of level `n` with step `h = 1e-3`.
pub fn ode_residual<T: Real>(n: usize, z: T, p: &ModelParams<T>) -> Result<T> {
    ode_residual_at_level(n, T::from_usize_lossy(n), z, p, T::lit(1e-3))
}
