//! Computational dynamics on surfaces: the two-torus, a genus-two surface
//! built by gluing two punctured tori along an inversion, smooth maps with
//! derivative data, invariant curve computation, Taylor-order tangency
//! grading, exact polynomial root counting and finite-horizon expansivity
//! measurements.
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm`
//! feature to build without the standard library. All verdicts produced by
//! the measurement routines are finite-horizon: a report saying "consistent
//! with N-expansive at horizon T" is a statement about the sampled orbits,
//! never a proof about the map.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("nexp-core requires either the `std` or the `libm` feature");

pub mod expansivity;
pub mod float;
pub mod foliation;
pub mod geometry;
pub mod jets;
pub mod manifolds;
pub mod maps;
pub mod roots;
pub mod sampling;
pub mod tangency;

pub use geometry::{ChartId, ChartPoint, GluedSurface, SurfaceDomain, Torus};
pub use maps::SmoothMap;

/// Errors produced by construction and evaluation routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A point lies outside the domain of the requested operation.
    Domain(&'static str),
    /// A constructor was handed parameters that break a documented
    /// precondition (non-unimodular matrix, invertibility loss, ...).
    Precondition(&'static str),
    /// An iteration or solve did not converge within its budget.
    Convergence(&'static str),
    /// A curve left the atlas during iteration; carries the step at which
    /// it escaped.
    CurveEscaped { step: i64 },
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Convergence(msg) => write!(f, "failed to converge: {msg}"),
            Error::CurveEscaped { step } => write!(f, "curve escaped the atlas at step {step}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
