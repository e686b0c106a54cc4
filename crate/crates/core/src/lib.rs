//! Exact structure of the fiber cone `F(I)` of an ideal with analytic spread one
//! in a numerical semigroup ring `k[[t^S]]` over a prime field.
//!
//! The crate computes the decomposition of `F(I)` as a graded module over the
//! polynomial subring `F(J)` of a principal reduction `J = (a)`, the numerical
//! invariants that come with it (reduction number, the `f_{k,l}` table, the free
//! and torsion multiplicities), the Hilbert numerator, and the
//! Cohen-Macaulay / Buchsbaum / Gorenstein classification.
//!
//! Everything is exact arithmetic over `GF(p)`. Ideals are handled as subspaces
//! of a truncation `A / (t^{>N})` of the ring; [`analysis::analyze`] chooses and
//! certifies the truncation.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod corpus;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod semigroup;
pub mod series;

pub use analysis::{analyze, certified_limit, Analysis, CaseSpec, Options};
pub use error::{Error, ErrorCategory};
pub use field::{FieldElement, PrimeField};
pub use linalg::{Ambient, Ideal, Subspace};
pub use semigroup::NumericalSemigroup;
pub use series::SeriesElement;
