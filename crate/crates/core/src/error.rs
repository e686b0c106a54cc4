use alloc::string::String;

/// Everything that can go wrong between reading a case and emitting a report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("exponent {exponent} outside semigroup")]
    ExponentOutsideSemigroup { exponent: u64 },

    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("negative integer {0} cannot be a semigroup element")]
    NegativeInput(i64),

    #[error("{0} is not a prime suitable as field characteristic")]
    InvalidCharacteristic(u64),

    #[error("zero ideal: at least one generator must be nonzero")]
    ZeroIdeal,

    #[error("no principal reduction found within bound {bound}")]
    NoReduction { bound: u32 },

    #[error("supplied element {element} is not a reduction within bound {bound}")]
    NotAReduction { element: String, bound: u32 },

    #[error("increase truncation: {0}")]
    TruncationInsufficient(String),

    #[error("truncation did not certify: {0}")]
    TruncationNotCertified(String),

    #[error("internal inconsistency in {check}: {detail}")]
    Inconsistency { check: &'static str, detail: String },
}

/// Coarse classes used for reporting and exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorCategory {
    Parse,
    Semigroup,
    NoReduction,
    Truncation,
    Internal,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Parse { .. } | Error::ExponentOutsideSemigroup { .. } | Error::ZeroIdeal => {
                ErrorCategory::Parse
            }
            Error::InvalidSemigroup(_)
            | Error::NegativeInput(_)
            | Error::InvalidCharacteristic(_) => ErrorCategory::Semigroup,
            Error::NoReduction { .. } | Error::NotAReduction { .. } => ErrorCategory::NoReduction,
            Error::TruncationInsufficient(_) | Error::TruncationNotCertified(_) => {
                ErrorCategory::Truncation
            }
            Error::Inconsistency { .. } => ErrorCategory::Internal,
        }
    }

    pub(crate) fn inconsistency(check: &'static str, detail: impl Into<String>) -> Self {
        Error::Inconsistency {
            check,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
