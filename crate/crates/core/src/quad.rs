//! One-dimensional quadrature: globally adaptive Gauss-Kronrod (7/15) on finite intervals,
//! a Gaussian-window wrapper for the real line, and Gauss-Hermite rules.
//!
//! Integrands are complex-valued. Both components share one refinement decision driven by
//! the larger component error, so oscillatory `exp(i p y)` kernels are handled in a
//! single pass.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig<T> {
    pub rel_tol: T,
    pub abs_tol: T,
    /// Maximum bisection depth of any single panel.
    pub max_depth: usize,
    /// Half-width of the truncation window for Gaussian-weighted integrals, in units of
    /// `1/sqrt(decay_rate)`.
    pub window_halfwidth_sigmas: T,
    /// Panels the interval is split into before adaptation starts.
    pub initial_panels: usize,
    /// Angular frequency of an oscillatory factor in the integrand, if any. Raises the
    /// initial panel count so that no panel spans more than half a period.
    pub oscillation_frequency: T,
}

impl<T: Real> Default for QuadConfig<T> {
    fn default() -> Self {
        Self {
            rel_tol: T::quad_rel_tol(),
            abs_tol: T::quad_abs_tol(),
            max_depth: 50,
            window_halfwidth_sigmas: T::lit(12.0),
            initial_panels: 16,
            oscillation_frequency: T::zero(),
        }
    }
}

impl<T: Real> QuadConfig<T> {
    pub fn with_tolerances(mut self, rel_tol: T, abs_tol: T) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_frequency(mut self, omega: T) -> Self {
        self.oscillation_frequency = omega.abs();
        self
    }

    pub fn with_window(mut self, sigmas: T) -> Self {
        self.window_halfwidth_sigmas = sigmas;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.rel_tol > T::zero()) || !(self.abs_tol > T::zero()) {
            return Err(Error::InvalidParameter("quadrature tolerances must be positive".into()));
        }
        if !(self.window_halfwidth_sigmas > T::zero()) {
            return Err(Error::InvalidParameter("window half-width must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult<T> {
    pub value: Complex<T>,
    pub abs_error_estimate: T,
    pub evaluations: usize,
}

impl<T: Real> QuadResult<T> {
    pub fn re(&self) -> T {
        self.value.re
    }

    pub fn im(&self) -> T {
        self.value.im
    }
}

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (positive half, descending).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for XGK[1], XGK[3], XGK[5] and the centre.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Panel<T> {
    a: T,
    b: T,
    value: Complex<T>,
    error: T,
    depth: usize,
}

impl<T: Real> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<T: Real> Eq for Panel<T> {}
impl<T: Real> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

fn gk15<T, F>(f: &mut F, a: T, b: T, depth: usize) -> Panel<T>
where
    T: Real,
    F: FnMut(T) -> Complex<T>,
{
    let center = T::half() * (a + b);
    let half = T::half() * (b - a);
    let fc = f(center);
    let mut kron = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    let mut resabs = (fc.re.abs() + fc.im.abs()) * T::lit(WGK[7]);
    for k in 0..7 {
        let dx = half * T::lit(XGK[k]);
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        let s = f1 + f2;
        kron += s * T::lit(WGK[k]);
        resabs += (f1.re.abs() + f1.im.abs() + f2.re.abs() + f2.im.abs()) * T::lit(WGK[k]);
        if k % 2 == 1 {
            gauss += s * T::lit(WG[k / 2]);
        }
    }
    let value = kron * half;
    let diff = (kron - gauss) * half;
    let floor = T::lit(50.0) * T::epsilon() * resabs * half.abs();
    let error = diff.re.abs().max(diff.im.abs()).max(floor);
    Panel { a, b, value, error, depth }
}

/// Adaptive integration of `f` over `[a, b]`.
pub fn integrate_interval<T, F>(mut f: F, a: T, b: T, cfg: &QuadConfig<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T) -> Complex<T>,
{
    cfg.validate()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParameter(format!("integration bounds must satisfy a < b, got [{a}, {b}]")));
    }
    let width = b - a;
    let oscill = (cfg.oscillation_frequency * width / T::PI()).ceil().to_usize().unwrap_or(0);
    let panels = cfg.initial_panels.max(oscill).max(1);
    let step = width / T::from_usize_lossy(panels);

    let mut heap = BinaryHeap::with_capacity(panels * 4);
    let mut evaluations = 0usize;
    for k in 0..panels {
        let lo = a + step * T::from_usize_lossy(k);
        let hi = if k + 1 == panels { b } else { lo + step };
        heap.push(gk15(&mut f, lo, hi, 0));
        evaluations += 15;
    }
    let mut frozen: Vec<Panel<T>> = Vec::new();
    let mut total: Complex<T> = heap.iter().map(|p| p.value).fold(Complex::zero(), |s, v| s + v);
    let mut total_err: T = heap.iter().map(|p| p.error).sum();
    // hard cap on work regardless of depth
    let max_evaluations = 2_000_000usize;

    loop {
        let tol = cfg.abs_tol.max(cfg.rel_tol * total.norm());
        if total_err <= tol || evaluations >= max_evaluations {
            break;
        }
        let Some(worst) = heap.pop() else { break };
        if worst.depth >= cfg.max_depth {
            frozen.push(worst);
            continue;
        }
        let mid = T::half() * (worst.a + worst.b);
        let left = gk15(&mut f, worst.a, mid, worst.depth + 1);
        let right = gk15(&mut f, mid, worst.b, worst.depth + 1);
        evaluations += 30;
        total = total - worst.value + left.value + right.value;
        total_err = total_err - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
    }

    // resum from scratch to shed drift from the running updates
    let all = heap.iter().chain(frozen.iter());
    let (value, error) = all.fold((Complex::<T>::zero(), T::zero()), |(v, e), p| (v + p.value, e + p.error));
    let finite = value.re.is_finite() && value.im.is_finite() && error.is_finite();
    let tol = cfg.abs_tol.max(cfg.rel_tol * value.norm());
    if !finite || error > T::lit(10.0) * tol {
        return Err(Error::NoConvergence {
            error: error.to_f64().unwrap_or(f64::NAN),
            tol: tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(QuadResult { value, abs_error_estimate: error, evaluations })
}

/// Integrates over consecutive pieces `[breaks[i], breaks[i+1]]` and sums the results.
pub fn integrate_piecewise<T, F>(mut f: F, breaks: &[T], cfg: &QuadConfig<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T) -> Complex<T>,
{
    if breaks.len() < 2 {
        return Err(Error::InvalidParameter("need at least two breakpoints".into()));
    }
    let mut out = QuadResult { value: Complex::zero(), abs_error_estimate: T::zero(), evaluations: 0 };
    for w in breaks.windows(2) {
        let r = integrate_interval(&mut f, w[0], w[1], cfg)?;
        out.value += r.value;
        out.abs_error_estimate += r.abs_error_estimate;
        out.evaluations += r.evaluations;
    }
    Ok(out)
}

/// Half-width of the truncation window for a Gaussian factor `exp(-decay_rate y^2)`.
pub fn gaussian_window<T: Real>(decay_rate: T, cfg: &QuadConfig<T>) -> Result<T> {
    if !(decay_rate > T::zero()) || !decay_rate.is_finite() {
        return Err(Error::InvalidParameter(format!("decay rate must be positive, got {decay_rate}")));
    }
    Ok(cfg.window_halfwidth_sigmas / decay_rate.sqrt())
}

/// `int_R f(y) exp(-decay_rate y^2) dy`, truncated to the configured Gaussian window.
pub fn integrate_gaussian_weighted<T, F>(mut f: F, decay_rate: T, cfg: &QuadConfig<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T) -> Complex<T>,
{
    let half = gaussian_window(decay_rate, cfg)?;
    integrate_interval(|y| f(y) * (-decay_rate * y * y).exp(), -half, half, cfg)
}

/// Real-valued convenience wrapper around [`integrate_interval`].
pub fn integrate_real<T, F>(mut f: F, a: T, b: T, cfg: &QuadConfig<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    integrate_interval(|x| Complex::from(f(x)), a, b, cfg)
}

/// Nodes and weights of the `n`-point Gauss-Hermite rule for weight `exp(-x^2)`,
/// nodes ascending.
pub fn gauss_hermite<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let pim4 = T::PI().powf(T::lit(-0.25));
    let nt = T::from_usize_lossy(n);
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let m = n.div_ceil(2);
    let mut z = T::zero();
    for i in 0..m {
        z = match i {
            0 => {
                (T::two() * nt + T::one()).sqrt()
                    - T::lit(1.85575) * (T::two() * nt + T::one()).powf(T::lit(-1.0 / 6.0))
            }
            1 => z - T::lit(1.14) * nt.powf(T::lit(0.426)) / z,
            2 => T::lit(1.86) * z - T::lit(0.86) * nodes[0],
            3 => T::lit(1.91) * z - T::lit(0.91) * nodes[1],
            _ => T::two() * z - nodes[i - 2],
        };
        let mut pp = T::one();
        for _ in 0..100 {
            let mut p1 = pim4;
            let mut p2 = T::zero();
            for j in 1..=n {
                let jt = T::from_usize_lossy(j);
                let p3 = p2;
                p2 = p1;
                p1 = z * (T::two() / jt).sqrt() * p2 - ((jt - T::one()) / jt).sqrt() * p3;
            }
            pp = (T::two() * nt).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= T::lit(3.0) * T::epsilon() * z.abs().max(T::one()) {
                break;
            }
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        let w = T::two() / (pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}
