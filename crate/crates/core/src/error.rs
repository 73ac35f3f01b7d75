use thiserror::Error;

/// Errors raised by the numeric core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A constructor was handed NaN or an infinity.
    #[error("non-finite value {value} in field `{field}`")]
    NonFinite { field: &'static str, value: f64 },

    /// A value was outside the mathematical domain of the operation.
    #[error("{0}")]
    Domain(&'static str),

    /// A would-be unit quaternion whose norm is too far from 1.
    #[error("norm {norm} is not within {tolerance:e} of 1")]
    NotUnit { norm: f64, tolerance: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_finite(field: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { field, value })
    }
}
