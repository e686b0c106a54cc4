//! Reduction search and the structure invariants of `F(I)` over `F(J)`.

pub mod classify;
pub mod comparison;
pub mod hilbert;
pub mod properties;
pub mod reduction;
pub mod tables;

pub use classify::{classify, Classification, Decomposition};
pub use comparison::{compare, Comparison, Verdict};
pub use hilbert::{hilbert_data, HilbertData};
pub use properties::{check_properties, PropertyTally};
pub use reduction::{find_reduction, random_reductions, reduction_number, ReductionCandidate};
pub use tables::{compute_tables, InvariantTable, TriTable};

/// Highest power of `I` touched by the analysis of an ideal with reduction
/// number `r`: the canonical tables need `r + 2`, the `λ(F/a^{r+1}F)`
/// identity and the rank chain need `2r`.
pub fn top_degree(r: u32) -> u32 {
    (2 * r).max(r + 2)
}

/// Smallest reporting degree `N` at which every subspace used for reduction
/// number `r` is a faithful truncation.
///
/// For a reduction `a` of valuation `v`, `a^n t^m A ⊆ m I^n` contains every
/// element of valuation `>= n v + m + c`, so all ideals up to `m I^D`
/// contain `t^{>N}` as soon as `N >= D v + m + c - 1`. Sums, intersections and
/// colons of such ideals are then computed exactly.
pub fn required_limit(valuation: u32, multiplicity: u32, conductor: u32, r: u32) -> u32 {
    (top_degree(r) * valuation + multiplicity + conductor).saturating_sub(1)
}

/// Largest `n` for which `I^{n+1} = a I^n` can be decided at reporting
/// degree `limit`, or `None` if not even `n = 0` can.
pub fn search_depth(limit: u32, valuation: u32, conductor: u32) -> Option<u32> {
    // needs (n + 1) v + c - 1 <= N
    let room = (limit as u64 + 1).checked_sub(conductor as u64)?;
    if valuation == 0 {
        return Some(u32::MAX);
    }
    (room / valuation as u64).checked_sub(1).map(|n| n.min(u32::MAX as u64) as u32)
}
