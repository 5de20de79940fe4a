use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors surfaced by the evaluation and sampling layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter lies outside the validity domain of the requested law or
    /// function. The message names the violated bound.
    #[error("domain error: {0}")]
    Domain(String),

    /// A truncated series hit its degree budget with a tail estimate above
    /// the requested tolerance.
    #[error(
        "series did not converge: degree {degree}, |tail| ~ {tail_estimate:.3e}, \
         partial value {value:.6e}"
    )]
    NonConvergence {
        degree: usize,
        tail_estimate: f64,
        value: f64,
    },

    /// A lower-parameter Pochhammer vanished without a matching upper zero,
    /// so a series term divides by zero.
    #[error("ill-conditioned hypergeometric parameters: {0}")]
    IllConditioned(String),

    /// The 2F1 connection formula degenerates (c - a - b integral); the
    /// logarithmic branch is out of scope and the caller must fall back.
    #[error("logarithmic case of the 2F1 connection formula: c - a - b = {0}")]
    LogarithmicCase(f64),

    /// Numerical integration failed to reach the requested tolerance.
    #[error("quadrature failure: achieved tolerance {achieved:.3e}, requested {requested:.3e}")]
    QuadratureFailure { achieved: f64, requested: f64 },

    /// A sampler draw remained degenerate after the documented retries.
    #[error("degenerate sample after {0} retries")]
    Degenerate(usize),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
