use thiserror::Error;

/// Errors raised by the library. All of them are caller errors: bad
/// arguments, malformed input text, or sizes beyond an enumeration guard.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid pattern `{0}` (expected one of 123, 132, 213, 231, 312, 321)")]
    InvalidPattern(String),

    #[error("malformed Dyck path: {0}")]
    MalformedDyckPath(String),

    #[error("cannot parse fraction `{0}`")]
    ParseFraction(String),

    #[error("unknown distribution `{0}` (expected uniform, low, low-decreasing or avXYZ)")]
    UnknownDistribution(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what,
            value: value as u64,
            min: min as u64,
            max: max as u64,
        })
    }
}
