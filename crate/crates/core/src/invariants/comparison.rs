//! Recomputing the tables for several reductions of the same ideal.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::tables::InvariantTable;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The full torsion tables agree for every reduction tried.
    Invariant,
    /// Some reductions give different torsion tables.
    Dependent,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Invariant => "reduction-invariant",
            Verdict::Dependent => "reduction-dependent",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    /// Display form of each reduction, in the order compared.
    pub reductions: Vec<String>,
    pub tables: Vec<InvariantTable>,
    pub verdict: Verdict,
}

/// Compares tables computed for different reductions.
///
/// The reduction number, `α_i` and `f_{k,r-k}` do not depend on the
/// reduction; a disagreement is an error. The torsion tables may differ, but
/// only when `F(I)` is not Buchsbaum.
pub fn compare(reductions: Vec<String>, tables: Vec<InvariantTable>, buchsbaum: bool) -> Result<Comparison> {
    assert_eq!(reductions.len(), tables.len());
    let first = &tables[0];
    let mut verdict = Verdict::Invariant;
    for (name, t) in reductions.iter().zip(&tables).skip(1) {
        if t.r != first.r || t.mu != first.mu {
            return Err(Error::inconsistency(
                "reduction comparison",
                format!("reduction {name} gives r = {}, μ = {:?}", t.r, t.mu),
            ));
        }
        if t.alpha_free != first.alpha_free {
            return Err(Error::inconsistency(
                "reduction comparison",
                format!("reduction {name} gives α = {:?} instead of {:?}", t.alpha_free, first.alpha_free),
            ));
        }
        if t.torsion_dims != first.torsion_dims {
            return Err(Error::inconsistency(
                "reduction comparison",
                format!(
                    "reduction {name} gives f(k,r-k) = {:?} instead of {:?}",
                    t.torsion_dims, first.torsion_dims
                ),
            ));
        }
        if t.alpha_torsion != first.alpha_torsion {
            verdict = Verdict::Dependent;
        }
    }
    if buchsbaum && verdict == Verdict::Dependent {
        return Err(Error::inconsistency(
            "reduction comparison",
            "Buchsbaum fiber cone with reduction-dependent decomposition",
        ));
    }
    Ok(Comparison {
        reductions,
        tables,
        verdict,
    })
}
