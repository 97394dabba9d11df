use thiserror::Error;

/// Errors raised by evaluation, registry lookup and certification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge within {terms} terms")]
    Convergence { terms: usize },

    #[error("quadrature tolerance {target:e} not met: estimate {achieved:e} after {panels} panels")]
    ToleranceNotMet { target: f64, achieved: f64, panels: usize },

    #[error("unknown bound id `{0}`")]
    UnknownBound(String),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("bounds do not share one target and side: {0}")]
    MixedTargets(String),

    #[error("series and quadrature disagree for {what}: |{series} - {quadrature}| exceeds {allowed:e}")]
    RouteDisagreement { what: String, series: f64, quadrature: f64, allowed: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by bad input rather than numerical failure.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::UnknownBound(_) | Error::UnknownClaim(_) | Error::MixedTargets(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
