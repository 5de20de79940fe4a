//! Extremal-eigenvalue distributions of beta-Jacobi ensembles.
//!
//! The crate evaluates the exact smallest/largest-eigenvalue densities of the
//! beta-Jacobi ensemble through multivariate hypergeometric series at
//! scalar-identity arguments, the two special-case exact laws (`a = 2/beta - 2`
//! and `beta (a+1)/2` a positive integer), and the four hard-edge limit laws.
//! A bidiagonal matrix-model sampler and a Haar-corner sampler provide
//! Monte-Carlo validation through a Kolmogorov-Smirnov harness.
//!
//! The numeric kernels (`partitions`, `jack`, `hyperg`, `constants`, `quad`,
//! `densities`) are generic over the scalar type through the [`Real`] trait;
//! the Monte-Carlo machinery (`sampler`, `experiments`) is `f64`.

pub mod constants;
pub mod densities;
mod error;
pub mod experiments;
pub mod hyperg;
pub mod jack;
pub mod partitions;
pub mod quad;
pub mod sampler;
mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

/// `f64` ensemble parameters, the workhorse instantiation.
pub type JacobiParams64 = constants::JacobiParams<f64>;
/// `f64` signed log-magnitude value.
pub type LogValue64 = constants::LogValue<f64>;
/// `f64` truncated-series result.
pub type SeriesValue64 = hyperg::SeriesValue<f64>;
/// `f64` eigenvalue law.
pub type Law64 = densities::Law<f64>;
