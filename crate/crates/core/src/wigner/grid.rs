use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{EvalResult, Method, PhasePoint, WignerSpec};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Rectangular sampling of phase space, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec<T> {
    pub q_min: T,
    pub q_max: T,
    pub p_min: T,
    pub p_max: T,
    pub n_q: usize,
    pub n_p: usize,
}

impl<T: Real> GridSpec<T> {
    pub fn new(q_min: T, q_max: T, p_min: T, p_max: T, n_q: usize, n_p: usize) -> Result<Self> {
        let g = Self { q_min, q_max, p_min, p_max, n_q, n_p };
        g.validate()?;
        Ok(g)
    }

    /// `[-half, half]^2` with `n` points per axis.
    pub fn square(half: T, n: usize) -> Result<Self> {
        Self::new(-half, half, -half, half, n, n)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_q < 2 || self.n_p < 2 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 2 points per axis, got {}x{}",
                self.n_q, self.n_p
            )));
        }
        let finite = [self.q_min, self.q_max, self.p_min, self.p_max].iter().all(|x| x.is_finite());
        if !finite || !(self.q_min < self.q_max) || !(self.p_min < self.p_max) {
            return Err(Error::InvalidParameter("grid bounds must be finite with min < max".into()));
        }
        Ok(())
    }

    // Written so that symmetric bounds give exactly negated coordinates.
    fn coord(lo: T, hi: T, n: usize, i: usize) -> T {
        let d = T::from_usize_lossy(n - 1);
        (lo * T::from_usize_lossy(n - 1 - i) + hi * T::from_usize_lossy(i)) / d
    }

    pub fn q(&self, i: usize) -> T {
        Self::coord(self.q_min, self.q_max, self.n_q, i)
    }

    pub fn p(&self, j: usize) -> T {
        Self::coord(self.p_min, self.p_max, self.n_p, j)
    }

    pub fn q_coords(&self) -> Vec<T> {
        (0..self.n_q).map(|i| self.q(i)).collect()
    }

    pub fn p_coords(&self) -> Vec<T> {
        (0..self.n_p).map(|j| self.p(j)).collect()
    }

    pub fn len(&self) -> usize {
        self.n_q * self.n_p
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The figure surfaces: `n = 0` with `alpha = 2` or `3`, at `w = 1` and `w = 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    Fig1a,
    Fig1b,
    Fig2a,
    Fig2b,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Fig1a, Preset::Fig1b, Preset::Fig2a, Preset::Fig2b];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1a => "fig1a",
            Preset::Fig1b => "fig1b",
            Preset::Fig2a => "fig2a",
            Preset::Fig2b => "fig2b",
        }
    }

    /// `(n, alpha, omega_bar)`.
    pub fn params(self) -> (usize, usize, usize) {
        match self {
            Preset::Fig1a => (0, 2, 1),
            Preset::Fig1b => (0, 2, 3),
            Preset::Fig2a => (0, 3, 1),
            Preset::Fig2b => (0, 3, 3),
        }
    }

    pub fn spec<T: Real>(self) -> WignerSpec<T> {
        let (n, alpha, w) = self.params();
        WignerSpec::relative(n, T::from_usize_lossy(alpha), T::from_usize_lossy(w), Method::Operator)
    }

    pub fn grid<T: Real>(self) -> GridSpec<T> {
        GridSpec::square(T::lit(4.0), 121).expect("preset grid is valid")
    }
}

impl std::str::FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown preset '{s}'")))
    }
}

impl std::fmt::Display for Preset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Grid results in row-major order: row `j` is `p = p_j`, column `i` is `q = q_i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridValues<T> {
    pub grid: GridSpec<T>,
    pub results: Vec<EvalResult<T>>,
}

impl<T: Real> GridValues<T> {
    pub fn get(&self, ip: usize, iq: usize) -> &EvalResult<T> {
        &self.results[ip * self.grid.n_q + iq]
    }

    pub fn value(&self, ip: usize, iq: usize) -> T {
        self.get(ip, iq).value
    }

    /// `n_p x n_q` matrix of values.
    pub fn values_matrix(&self) -> Vec<Vec<T>> {
        self.results.chunks(self.grid.n_q).map(|row| row.iter().map(|r| r.value).collect()).collect()
    }

    pub fn min_value(&self) -> T {
        self.results.iter().map(|r| r.value).fold(T::infinity(), T::min)
    }

    pub fn max_imag_residue(&self) -> T {
        self.results.iter().map(|r| r.imag_residue).fold(T::zero(), T::max)
    }

    pub fn max_quad_error(&self) -> T {
        self.results.iter().map(|r| r.quad_error).fold(T::zero(), T::max)
    }

    pub fn convention_dependent(&self) -> bool {
        self.results.iter().any(|r| r.convention_dependent)
    }

    /// Values along `p = 0` as `(q, W)` pairs, if the grid has a `p = 0` row.
    pub fn q_axis(&self) -> Option<Vec<(T, T)>> {
        let j = (0..self.grid.n_p).find(|&j| self.grid.p(j) == T::zero())?;
        Some((0..self.grid.n_q).map(|i| (self.grid.q(i), self.value(j, i))).collect())
    }

    /// Values along `q = 0` as `(p, W)` pairs, if the grid has a `q = 0` column.
    pub fn p_axis(&self) -> Option<Vec<(T, T)>> {
        let i = (0..self.grid.n_q).find(|&i| self.grid.q(i) == T::zero())?;
        Some((0..self.grid.n_p).map(|j| (self.grid.p(j), self.value(j, i))).collect())
    }
}

/// Positive coordinates of strict interior local extrema of a sampled profile, ordered from
/// the centre outwards.
pub fn positive_extrema<T: Real>(profile: &[(T, T)]) -> Vec<T> {
    let mut out: Vec<T> = profile
        .windows(3)
        .filter(|w| {
            let (a, b, c) = (w[0].1, w[1].1, w[2].1);
            w[1].0 > T::zero() && ((b > a && b > c) || (b < a && b < c))
        })
        .map(|w| w[1].0)
        .collect();
    out.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    out
}

/// Evaluates `spec` on every grid point. Points are computed in parallel from one prepared
/// (cached) evaluator; the output order does not depend on scheduling.
pub fn grid_eval<T: Real>(spec: &WignerSpec<T>, grid: &GridSpec<T>) -> Result<GridValues<T>> {
    grid.validate()?;
    let prepared = spec.prepare()?;
    let results = (0..grid.len())
        .into_par_iter()
        .map(|k| {
            let (ip, iq) = (k / grid.n_q, k % grid.n_q);
            prepared.eval(PhasePoint::new(grid.q(iq), grid.p(ip)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GridValues { grid: *grid, results })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(0.0, 1.0, 0.0, 1.0, 1, 5).is_err());
        assert!(GridSpec::new(1.0, 1.0, 0.0, 1.0, 3, 5).is_err());
        assert!(GridSpec::new(0.0, f64::NAN, 0.0, 1.0, 3, 5).is_err());
        let g = GridSpec::square(4.0f64, 121).unwrap();
        assert_eq!(g.q(0), -4.0);
        assert_eq!(g.q(120), 4.0);
        assert_eq!(g.q(60), 0.0);
        for i in 0..121 {
            assert_eq!(g.q(i), -g.q(120 - i));
        }
    }

    #[test]
    fn center_value_and_symmetry() {
        let spec = WignerSpec::relative(0, 2.0f64, 1.0, Method::Operator);
        let grid = GridSpec::square(4.0, 101).unwrap();
        let v = grid_eval(&spec, &grid).unwrap();
        assert!((v.value(50, 50) - 1.0).abs() < 1e-12);
        for ip in 0..101 {
            for iq in 0..101 {
                let a = v.value(ip, iq);
                let b = v.value(100 - ip, 100 - iq);
                assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
            }
        }
        assert_eq!(v.values_matrix().len(), 101);
    }

    #[test]
    fn preset_lookup() {
        assert_eq!("fig2b".parse::<Preset>().unwrap().params(), (0, 3, 3));
        assert!("fig3".parse::<Preset>().is_err());
        let g: GridSpec<f64> = Preset::Fig1a.grid();
        assert_eq!((g.n_q, g.n_p, g.q_min, g.p_max), (121, 121, -4.0, 4.0));
    }

    #[test]
    fn extrema_of_profile() {
        let prof: Vec<(f64, f64)> = (0..=40)
            .map(|i| {
                let x = -2.0 + 0.1 * i as f64;
                (x, (3.0 * x).cos())
            })
            .collect();
        let e = positive_extrema(&prof);
        assert_eq!(e.len(), 1);
        assert!((e[0] - std::f64::consts::PI / 3.0).abs() < 0.06);
    }
}
