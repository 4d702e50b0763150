//! Exact capacities of quantum erasure-type channels, and the machinery to
//! verify them numerically: dense Kraus-channel simulation, entropic
//! information measures, constructive protocols, and a GF(2) stabilizer
//! Monte Carlo for erasure correction at known locations.
//!
//! Dense-state math is generic over the real scalar via [`RealScalar`]
//! (`f32` or `f64`); the `*64` aliases below are the working types.

pub mod capacities;
pub mod channels;
pub mod error;
pub mod gf2;
pub mod info;
pub mod linalg;
pub mod protocols;
pub mod rng;
pub mod scalar;
pub mod stab;

pub use error::{Error, Result};
pub use scalar::RealScalar;

/// Concrete aliases for the default double-precision instantiation.
pub type DensityMatrix64 = linalg::DensityMatrix<f64>;
pub type PureState64 = linalg::PureState<f64>;
pub type KrausChannel64 = channels::KrausChannel<f64>;
pub type Ensemble64 = info::Ensemble<f64>;
pub type ClassicalChannel64 = info::ClassicalChannel<f64>;
pub type CapacityPoint64 = capacities::CapacityPoint<f64>;

/// Single-precision aliases, mostly exercised to keep the core generic.
pub type DensityMatrix32 = linalg::DensityMatrix<f32>;
pub type PureState32 = linalg::PureState<f32>;
pub type KrausChannel32 = channels::KrausChannel<f32>;
