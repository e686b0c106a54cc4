//! Case files, reports, sweeps and fixture self-checks on top of
//! `fibercone-core`.

pub mod casefile;
pub mod report;
pub mod selftest;
pub mod sweep;

use fibercone_core::ErrorCategory;

/// Process exit status for an error category.
pub fn exit_code(category: ErrorCategory) -> i32 {
    match category {
        ErrorCategory::Parse | ErrorCategory::Semigroup => 2,
        ErrorCategory::NoReduction => 3,
        ErrorCategory::Truncation => 4,
        ErrorCategory::Internal => 5,
    }
}
