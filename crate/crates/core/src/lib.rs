//! Two-particle Wigner functions for the one-dimensional Calogero–Sutherland model.
//!
//! The two-body problem separates into a free oscillator for the centre of mass and a
//! relative motion in a harmonic trap with an inverse-square coupling. This crate evaluates
//! the Wigner function of each factor in closed form, by an exact operator algebra on
//! polynomial-times-Gaussian functions, by an explicit finite series, and by direct
//! quadrature of the overlap integral; the last one serves as an independent oracle for
//! the other two.
//!
//! Everything is generic over the floating-point type through [`Real`]; the `*64` and
//! `*32` aliases below fix the common choices.
//!
//! ```
//! use cswigner::{Method, PhasePoint, WignerSpec64};
//!
//! let spec = WignerSpec64::relative(0, 2.0, 1.0, Method::Operator);
//! let w = spec.prepare().unwrap().eval(PhasePoint::origin()).unwrap();
//! assert!((w.value - 1.0).abs() < 1e-12);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0)` deliberately rejects NaN

pub mod csm;
pub mod error;
pub mod polygauss;
pub mod quad;
pub mod scalar;
pub mod specfun;
pub mod verify;
pub mod wigner;

pub use error::{Error, Result};
pub use scalar::Real;
pub use wigner::{EvalResult, GridSpec, GridValues, Kind, Method, PhasePoint, Preset, WignerSpec};

pub type BiPoly64 = polygauss::BiPoly<f64>;
pub type BiPoly32 = polygauss::BiPoly<f32>;
pub type GaussianAnsatz64 = polygauss::GaussianAnsatz<f64>;
pub type GaussianAnsatz32 = polygauss::GaussianAnsatz<f32>;
pub type OperatorPoly64 = polygauss::OperatorPoly<f64>;
pub type QuadConfig64 = quad::QuadConfig<f64>;
pub type QuadConfig32 = quad::QuadConfig<f32>;
pub type ModelParams64 = csm::ModelParams<f64>;
pub type RawParams64 = csm::RawParams<f64>;
pub type PhasePoint64 = PhasePoint<f64>;
pub type PhasePoint32 = PhasePoint<f32>;
pub type EvalResult64 = EvalResult<f64>;
pub type WignerSpec64 = WignerSpec<f64>;
pub type WignerSpec32 = WignerSpec<f32>;
pub type GridSpec64 = GridSpec<f64>;
pub type GridValues64 = GridValues<f64>;
