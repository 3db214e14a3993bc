//! Error types shared across the crate.

use std::fmt;

/// Errors raised by series arithmetic and the verification layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by a series that is identically zero up to its truncation order.
    DivisionByZeroSeries,
    /// A quotient coefficient failed to be an integer. Every quotient this
    /// crate computes (J functions, theta ratios, Euler-power quotients) is
    /// integral by theory, so this firing signals a bug upstream.
    NonIntegerQuotient { exponent: i64 },
    /// The dividend has a nonzero term below the divisor's valuation, so the
    /// quotient would need negative exponents.
    DividendValuationTooLow { dividend: i64, divisor: i64 },
    /// A stored exponent is not representable at the requested scale.
    IncompatibleScale { scale: i64, requested: i64, exponent: i64 },
    /// The given modulus is not a prime number.
    NotPrime(i64),
    /// 2 and 3 are prime but outside the supported family N = |6m - 1|.
    UnsupportedPrime(i64),
    /// A cyclotomic coefficient expected to be a rational integer is not.
    NonRationalCoefficient { exponent: i64 },
    /// No identity check is registered under the given id.
    UnknownCheck(String),
    /// A quantity the theory guarantees (e.g. integrality of the product
    /// exponent Z) failed to hold.
    InternalInconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZeroSeries => {
                write!(f, "division by a series that is zero up to its truncation order")
            }
            Error::NonIntegerQuotient { exponent } => {
                write!(f, "quotient coefficient at exponent {} is not an integer", exponent)
            }
            Error::DividendValuationTooLow { dividend, divisor } => write!(
                f,
                "dividend valuation {} is below divisor valuation {}",
                dividend, divisor
            ),
            Error::IncompatibleScale { scale, requested, exponent } => write!(
                f,
                "exponent {} at scale {} is not representable at scale {}",
                exponent, scale, requested
            ),
            Error::NotPrime(n) => write!(f, "{} is not prime", n),
            Error::UnsupportedPrime(n) => {
                write!(f, "prime {} is not supported; the expansion needs a prime > 3", n)
            }
            Error::NonRationalCoefficient { exponent } => write!(
                f,
                "cyclotomic coefficient at exponent {} is not a rational integer",
                exponent
            ),
            Error::UnknownCheck(id) => write!(f, "unknown identity check '{}'", id),
            Error::InternalInconsistency(msg) => write!(f, "internal inconsistency: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
