//! Hypergeometric series of scalar-identity matrix argument, plus the
//! classical one-variable special functions the limit laws require.
//!
//! Superscript convention: `MhgParams::gamma` is fed *literally* into the
//! Pochhammer and Jack-polynomial formulas (spacing `gamma/2` between rows,
//! `2/gamma` in the cell products). It is never converted to the `2/gamma`
//! Jack-parameter convention internally; callers pass whatever value the
//! formula's superscript denotes. The single-part projection identity
//! (`(gamma/2)_kappa = 0` beyond one part) is the numerical arbiter of that
//! reading and is pinned by tests.

mod bessel;
mod classical;
mod incomplete;
mod mhg;

pub use bessel::{bessel_i, bessel_k, bessel_k_ln};
pub use classical::{
    connection_2f1, gauss_2f1, gauss_2f1_at_one, kummer_1f1, of1, tricomi_u,
};
pub use incomplete::{reg_inc_beta, reg_inc_gamma_lower, reg_inc_gamma_upper};
pub use mhg::{eval_series, eval_series_log, level_sums, mhg, mhg_at_one_2f1, LevelSums, MhgParams, SeriesValue};
