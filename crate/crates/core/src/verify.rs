//! Self-checks over the whole crate, grouped into suites. Each check reports the largest
//! deviation it saw against its tolerance; a suite passes when all its checks do.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::csm::{derive_params, ode_residual, wavefunction_cm, RawParams, RelativeEigenfunction, SectorChoice};
use crate::error::{Error, Result};
use crate::quad::{gaussian_window, integrate_real, QuadConfig};
use crate::wigner::{
    cm_wigner, identity_hermite_laguerre_check, identity_operator_halfodd_check, rel_wigner_asymptotic, rel_wigner_g0,
    rel_wigner_g0_even_sector, rel_wigner_g0_odd_sector, rel_wigner_quad, rel_wigner_series, zero_ellipses, PhasePoint,
    RelativeOperatorWigner,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Oracles,
    Marginals,
    Normalization,
    Zeros,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::Identities, Suite::Oracles, Suite::Marginals, Suite::Normalization, Suite::Zeros];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Oracles => "oracles",
            Suite::Marginals => "marginals",
            Suite::Normalization => "normalization",
            Suite::Zeros => "zeros",
        }
    }

    /// Largest quantum number checked when none is given.
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Identities => 10,
            Suite::Oracles => 4,
            Suite::Marginals | Suite::Normalization => 3,
            Suite::Zeros => 0,
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Upper bound on the quantum numbers swept; `None` uses the suite default.
    pub n_max: Option<usize>,
    /// Replaces every check's default tolerance.
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub max_deviation: f64,
    pub tol: f64,
    pub passed: bool,
}

impl Check {
    fn new(name: impl Into<String>, max_deviation: f64, tol: f64) -> Self {
        Self { name: name.into(), max_deviation, tol, passed: max_deviation <= tol }
    }

    /// A check whose evaluation raised an error counts as failed with infinite deviation.
    fn from_result(name: impl Into<String>, r: Result<f64>, tol: f64) -> Self {
        match r {
            Ok(d) => Self::new(name, d, tol),
            Err(e) => Self { name: format!("{} ({e})", name.into()), max_deviation: f64::INFINITY, tol, passed: false },
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} max_dev={:.3e} tol={:.1e}", self.name, self.max_deviation, self.tol)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self { suite, checks, passed }
    }

    pub fn max_deviation(&self) -> f64 {
        self.checks.iter().map(|c| c.max_deviation).fold(0.0, f64::max)
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let n_max = opts.n_max.unwrap_or_else(|| suite.default_n_max());
    let checks = match suite {
        Suite::Identities => identities(n_max, opts.tol),
        Suite::Oracles => oracles(n_max, opts.tol),
        Suite::Marginals => marginals(n_max, opts.tol),
        Suite::Normalization => normalization(n_max, opts.tol),
        Suite::Zeros => zeros(opts.tol),
    };
    SuiteReport::new(suite, checks)
}

pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|&s| run_suite(s, opts)).collect()
}

pub const ORACLE_OMEGAS: [f64; 3] = [1.0, 1.732_050_807_568_877_2, 3.0];

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| (lo * (n - 1 - i) as f64 + hi * i as f64) / (n - 1) as f64).collect()
}

/// `|x - y| / max(1, |x|, |y|)`: the smallest `tol` for which `x` and `y` agree to
/// `max(tol absolute, tol relative)`.
pub fn mixed_deviation(x: f64, y: f64) -> f64 {
    (x - y).abs() / 1f64.max(x.abs()).max(y.abs())
}

fn identities(n_max: usize, tol: Option<f64>) -> Vec<Check> {
    let g = linspace(-2.0, 2.0, 21);
    let mut out = Vec::new();
    for n in 0..=n_max {
        let t = tol.unwrap_or(1e-9);
        let r = identity_hermite_laguerre_check(n, &g, &g, t).map(|r| r.relative_deviation);
        out.push(Check::from_result(format!("hermite-laguerre n={n}"), r, t));
    }
    for n in 0..=n_max {
        for w in [1.0, 3.0] {
            let t = tol.unwrap_or(1e-10);
            let r = identity_operator_halfodd_check(n, w, t).map(|r| r.relative_deviation);
            out.push(Check::from_result(format!("half-odd operator n={n} w={w}"), r, t));
        }
    }
    out
}

/// Worst mixed deviation between operator, series and quadrature over a 9x9 grid on
/// `[-3, 3]^2`.
pub fn three_path_deviation(n: usize, alpha: usize, omega_bar: f64) -> Result<f64> {
    let op = RelativeOperatorWigner::new(n, alpha, omega_bar)?;
    let cfg = QuadConfig::default();
    let axis = linspace(-3.0, 3.0, 9);
    let mut dev = 0.0f64;
    for &q in &axis {
        for &p in &axis {
            let pt = PhasePoint::new(q, p);
            let a = op.eval(pt)?.value;
            let b = rel_wigner_series(n, alpha, omega_bar, pt)?.value;
            let c = rel_wigner_quad(n, alpha as f64, omega_bar, pt, &cfg)?.value;
            dev = dev.max(mixed_deviation(a, b)).max(mixed_deviation(a, c)).max(mixed_deviation(b, c));
        }
    }
    Ok(dev)
}

/// Worst absolute deviation among operator path, literal sector closed form and the
/// combined-index closed form, for `alpha` 0 or 1, on the same grid.
pub fn g0_collapse_deviation(n: usize, alpha: usize, omega_bar: f64) -> Result<f64> {
    let op = RelativeOperatorWigner::new(n, alpha, omega_bar)?;
    let axis = linspace(-3.0, 3.0, 9);
    let mut dev = 0.0f64;
    for &q in &axis {
        for &p in &axis {
            let pt = PhasePoint::new(q, p);
            let a = op.eval(pt)?.value;
            let b = match alpha {
                0 => rel_wigner_g0_even_sector(n, omega_bar, pt)?.value,
                1 => rel_wigner_g0_odd_sector(n, omega_bar, pt)?.value,
                _ => return Err(Error::InvalidParameter(format!("alpha must be 0 or 1, got {alpha}"))),
            };
            let c = rel_wigner_g0(2 * n + alpha, omega_bar, pt)?.value;
            dev = dev.max((a - b).abs()).max((a - c).abs()).max((b - c).abs());
        }
    }
    Ok(dev)
}

fn oracles(n_max: usize, tol: Option<f64>) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for alpha in 0..=4 {
            for w in ORACLE_OMEGAS {
                let t = tol.unwrap_or(1e-8);
                out.push(Check::from_result(
                    format!("three-path n={n} alpha={alpha} w={w:.4}"),
                    three_path_deviation(n, alpha, w),
                    t,
                ));
            }
        }
        for alpha in 0..=1 {
            for w in ORACLE_OMEGAS {
                let t = tol.unwrap_or(1e-10);
                out.push(Check::from_result(
                    format!("g=0 collapse n={n} alpha={alpha} w={w:.4}"),
                    g0_collapse_deviation(n, alpha, w),
                    t,
                ));
            }
        }
    }
    out
}

fn integration_cfg() -> QuadConfig<f64> {
    QuadConfig::default().with_tolerances(1e-11, 1e-13)
}

/// `int W_rel(q, p) dp` by adaptive quadrature over the operator-path function.
pub fn rel_p_marginal(op: &RelativeOperatorWigner<f64>, q: f64) -> Result<f64> {
    let cfg = integration_cfg();
    let half = gaussian_window(0.5 / op.omega_bar(), &cfg)?;
    let mut err = None;
    let r = integrate_real(
        |p| match op.eval(PhasePoint::new(q, p)) {
            Ok(v) => v.value,
            Err(e) => {
                err.get_or_insert(e);
                f64::NAN
            }
        },
        -half,
        half,
        &cfg,
    );
    if let Some(e) = err {
        return Err(e);
    }
    Ok(r?.value.re)
}

/// `int int W_rel dq dp` by iterated quadrature.
pub fn rel_total_integral(n: usize, alpha: usize, omega_bar: f64) -> Result<f64> {
    let op = RelativeOperatorWigner::new(n, alpha, omega_bar)?;
    let cfg = integration_cfg();
    let half = gaussian_window(0.5 * omega_bar, &cfg)?;
    let mut err = None;
    let r = integrate_real(
        |q| match rel_p_marginal(&op, q) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                f64::NAN
            }
        },
        -half,
        half,
        &cfg,
    );
    if let Some(e) = err {
        return Err(e);
    }
    Ok(r?.value.re)
}

/// `int W_cm(Q, P) dP`.
pub fn cm_p_marginal(l: usize, q: f64) -> Result<f64> {
    let cfg = integration_cfg();
    let half = gaussian_window(2.0, &cfg)?;
    Ok(integrate_real(|p| cm_wigner(l, q, p).value, -half, half, &cfg)?.value.re)
}

/// `int int W_cm dQ dP`.
pub fn cm_total_integral(l: usize) -> Result<f64> {
    let cfg = integration_cfg();
    let half = gaussian_window(2.0, &cfg)?;
    let r = integrate_real(|q| cm_p_marginal(l, q).unwrap_or(f64::NAN), -half, half, &cfg)?;
    Ok(r.value.re)
}

pub const MARGINAL_SAMPLES: [f64; 4] = [0.25, 0.5, 1.0, 2.0];

fn marginals(n_max: usize, tol: Option<f64>) -> Vec<Check> {
    let t = tol.unwrap_or(1e-6);
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut out = Vec::new();
    for n in 0..=n_max {
        for alpha in 0..=3 {
            for w in [1.0, 3.0] {
                let r = (|| {
                    let op = RelativeOperatorWigner::new(n, alpha, w)?;
                    let psi = RelativeEigenfunction::new(n, alpha as f64, w)?;
                    let mut dev = 0.0f64;
                    for q in MARGINAL_SAMPLES {
                        dev = dev.max((rel_p_marginal(&op, q)? - two_pi * psi.eval(q).powi(2)).abs());
                    }
                    Ok(dev)
                })();
                out.push(Check::from_result(format!("relative p-marginal n={n} alpha={alpha} w={w}"), r, t));
            }
        }
        let r = (|| {
            let mut dev = 0.0f64;
            for q in MARGINAL_SAMPLES {
                let exact = std::f64::consts::FRAC_PI_2 * wavefunction_cm(n, q).powi(2);
                dev = dev.max((cm_p_marginal(n, q)? - exact).abs());
            }
            Ok(dev)
        })();
        out.push(Check::from_result(format!("centre-of-mass P-marginal l={n}"), r, t));
    }
    out
}

/// Full-line norm of the relative eigenfunction.
pub fn eigenfunction_norm(n: usize, alpha: f64, omega_bar: f64) -> Result<f64> {
    let psi = RelativeEigenfunction::new(n, alpha, omega_bar)?;
    let cfg = integration_cfg();
    let half = gaussian_window(0.5 * omega_bar, &cfg)?;
    Ok(integrate_real(|q| psi.eval(q).powi(2), -half, half, &cfg)?.value.re)
}

pub const ODE_SAMPLES: [f64; 3] = [0.5, 1.0, 2.0];

/// Largest ODE residual of the level-`n` eigenfunction over [`ODE_SAMPLES`].
pub fn max_ode_residual(n: usize, alpha: f64, omega_bar: f64) -> Result<f64> {
    let raw = RawParams::from_dimensionless(alpha, omega_bar)?;
    let sector = if alpha < 0.5 { SectorChoice::Negative } else { SectorChoice::Positive };
    let params = derive_params(raw, sector)?;
    let mut dev = 0.0f64;
    for z in ODE_SAMPLES {
        dev = dev.max(ode_residual(n, z, &params)?.abs());
    }
    Ok(dev)
}

fn normalization(n_max: usize, tol: Option<f64>) -> Vec<Check> {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut out = Vec::new();
    for n in 0..=n_max {
        for alpha in 0..=3 {
            for w in [1.0, 3.0] {
                let t = tol.unwrap_or(1e-6);
                let r = rel_total_integral(n, alpha, w).map(|v| (v - two_pi).abs());
                out.push(Check::from_result(format!("relative integral n={n} alpha={alpha} w={w}"), r, t));
                let t = tol.unwrap_or(1e-8);
                let r = eigenfunction_norm(n, alpha as f64, w).map(|v| (v - 1.0).abs());
                out.push(Check::from_result(format!("eigenfunction norm n={n} alpha={alpha} w={w}"), r, t));
                let t = tol.unwrap_or(1e-5);
                out.push(Check::from_result(
                    format!("ode residual n={n} alpha={alpha} w={w}"),
                    max_ode_residual(n, alpha as f64, w),
                    t,
                ));
            }
        }
        let t = tol.unwrap_or(1e-6);
        let r = cm_total_integral(n).map(|v| (v - std::f64::consts::FRAC_PI_2).abs());
        out.push(Check::from_result(format!("centre-of-mass integral l={n}"), r, t));
    }
    out
}

/// Radial values `r = q^2 w` of the first `count` sign changes of the `j`-th oscillator
/// function along the positive `q` axis, located by scanning and bisection.
pub fn axis_sign_changes(j: usize, omega_bar: f64, count: usize) -> Result<Vec<f64>> {
    let f = |q: f64| rel_wigner_g0(j, omega_bar, PhasePoint::new(q, 0.0)).map(|r| r.value);
    let step = 1e-3 / omega_bar.sqrt();
    let mut out = Vec::with_capacity(count);
    let (mut a, mut fa) = (0.0, f(0.0)?);
    while out.len() < count {
        let b = a + step;
        let fb = f(b)?;
        if fa.signum() != fb.signum() {
            let (mut lo, mut hi, mut flo) = (a, b, fa);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid)?;
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            let q = 0.5 * (lo + hi);
            out.push(omega_bar * q * q);
        }
        if b > 1e3 {
            return Err(Error::NoConvergence { error: out.len() as f64, tol: count as f64 });
        }
        (a, fa) = (b, fb);
    }
    Ok(out)
}

/// Largest relative gap `|r_found - r_k| / r_k` for each of `k = 1..=k_max`.
pub fn zero_location_gaps(j: usize, omega_bar: f64, k_max: usize) -> Result<Vec<f64>> {
    let found = axis_sign_changes(j, omega_bar, k_max)?;
    Ok(zero_ellipses(j, omega_bar, k_max)
        .iter()
        .zip(found)
        .map(|(e, r)| (r - e.radial_value).abs() / e.radial_value)
        .collect())
}

/// Relative error of the large-order form against the exact function at radial value `r`
/// on the `q` axis.
pub fn asymptotic_relative_error(j: usize, omega_bar: f64, r: f64) -> Result<f64> {
    let pt = PhasePoint::new((r / omega_bar).sqrt(), 0.0);
    let exact = rel_wigner_g0(j, omega_bar, pt)?.value;
    let approx = rel_wigner_asymptotic(j, omega_bar, pt)?;
    Ok((approx - exact).abs() / exact.abs())
}

fn zeros(tol: Option<f64>) -> Vec<Check> {
    let mut out = Vec::new();
    let t = tol.unwrap_or(0.02);
    match zero_location_gaps(20, 1.0, 4) {
        Ok(gaps) => {
            for (k, g) in gaps.into_iter().enumerate() {
                out.push(Check::new(format!("j=20 zero k={} within 2% in r", k + 1), g, t));
            }
        }
        Err(e) => out.push(Check::from_result("j=20 zeros", Err(e), t)),
    }
    let t = tol.unwrap_or(0.05);
    out.push(Check::from_result("j=20 asymptotic error at r=2", asymptotic_relative_error(20, 1.0, 2.0), t));
    let gromov = zero_ellipses(0, 1.0f64, 4).iter().all(|e| e.satisfies_gromov);
    out.push(Check::new("j=0 zero ellipses enclose area >= 1", if gromov { 0.0 } else { 1.0 }, 0.5));
    out
}
