//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when building or manipulating series.
///
/// Structural mistakes (indexing past a truncation order, inverting a
/// non-unit, a theta series that does not truncate) are reported here;
/// plain programming errors (e.g. mismatched coefficient vector lengths
/// in a constructor) panic instead.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    /// Asked for a coefficient beyond the known truncation order.
    #[error("coefficient of q^{wanted} requested, but series is only known through q^{precision}")]
    PrecisionExceeded { wanted: i64, precision: i64 },

    /// Tried to invert a series whose constant term is not a unit.
    #[error("cannot invert series: constant term {constant} is not a unit")]
    NonUnitConstant { constant: String },

    /// A two-variable theta series f(a, b) only converges formally when the
    /// exponents grow, i.e. when r + s > 0 for a = ±q^r, b = ±q^s.
    #[error("theta series with r = {r}, s = {s} does not truncate (need r + s > 0)")]
    NonTruncatingTheta { r: i64, s: i64 },

    /// A Laurent series was required to be an ordinary power series but a
    /// nonzero coefficient survived at a negative exponent.
    #[error("nonzero coefficient {coefficient} at negative exponent {exponent}")]
    NegativeExponent { exponent: i64, coefficient: String },

    /// A parameter was outside the range a function is defined for.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested truncation order is too small for the operation
    /// (e.g. dissecting into m classes needs at least m coefficients).
    #[error("precision {precision} too small: {reason}")]
    PrecisionTooSmall { precision: i64, reason: String },

    /// Failed to parse a q-expression.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, SeriesError>;
