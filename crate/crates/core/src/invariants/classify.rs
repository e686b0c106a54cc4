//! The cyclic decomposition of `F(I)` over `F(J)` and the
//! Cohen-Macaulay / Buchsbaum / Gorenstein classification.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::tables::{InvariantTable, TriTable};
use crate::error::{Error, Result};
use crate::linalg::{Ideal, Subspace};
use crate::series::SeriesElement;

/// `F(I) ≅ ⊕ F(J)(-b)^{α_b} ⊕ ⊕ ((F(J)/a^c F(J))(-d))^{α_{d,c}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `α_i` at shift `i`.
    pub free: Vec<i64>,
    pub torsion: TriTable,
}

impl Decomposition {
    pub fn from_tables(t: &InvariantTable) -> Self {
        Decomposition {
            free: t.alpha_free.clone(),
            torsion: t.alpha_torsion.clone(),
        }
    }

    /// Free shifts `b_1 <= … <= b_e` with repetition.
    pub fn free_shifts(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &m) in self.free.iter().enumerate() {
            out.extend(core::iter::repeat_n(i as u32, m as usize));
        }
        out
    }

    /// Torsion summands `(d, c)` with repetition, sorted.
    pub fn torsion_summands(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (i, j, m) in self.torsion.entries() {
            out.extend(core::iter::repeat_n((i, j), m as usize));
        }
        out
    }

    pub fn rank(&self) -> i64 {
        self.free.iter().sum()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_zero()
    }

    /// Checks `e = μ(I^r)`, `b_e = r` and `c + d <= r`.
    pub fn validate(&self, tables: &InvariantTable) -> Result<()> {
        let r = tables.r;
        if self.rank() != tables.mu_at(r as i64) {
            return Err(Error::inconsistency(
                "decomposition rank",
                format!("Σα_i = {} but μ(I^r) = {}", self.rank(), tables.mu_at(r as i64)),
            ));
        }
        if self.free_shifts().last() != Some(&r) {
            return Err(Error::inconsistency("decomposition", "largest free shift differs from r"));
        }
        if let Some(&(d, c)) = self.torsion_summands().iter().find(|&&(d, c)| c + d > r) {
            return Err(Error::inconsistency(
                "decomposition",
                format!("torsion summand with c + d = {} > r", c + d),
            ));
        }
        Ok(())
    }
}

fn free_summand(shift: usize) -> String {
    if shift == 0 {
        "F(J)".into()
    } else {
        format!("F(J)(\u{2212}{shift})")
    }
}

fn torsion_summand(d: u32, c: u32) -> String {
    let quotient = if c == 1 {
        String::from("F(J)/aF(J)")
    } else {
        format!("F(J)/a^{c}F(J)")
    };
    format!("({quotient})(\u{2212}{d})")
}

fn with_multiplicity(summand: String, m: i64) -> String {
    if m == 1 {
        summand
    } else if summand.starts_with("F(J)(") || summand.starts_with("(F(J)/") {
        format!("({summand})^{m}")
    } else {
        format!("{summand}^{m}")
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &m) in self.free.iter().enumerate() {
            if m > 0 {
                parts.push(with_multiplicity(free_summand(i), m));
            }
        }
        for (i, j, m) in self.torsion.entries() {
            if m > 0 {
                parts.push(with_multiplicity(torsion_summand(i, j), m));
            }
        }
        for (n, p) in parts.iter().enumerate() {
            if n > 0 {
                f.write_str(" \u{2295} ")?;
            }
            f.write_str(p)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub cohen_macaulay: bool,
    pub buchsbaum: bool,
    pub gorenstein: bool,
    /// `e(F(I)) = μ(I^r)`.
    pub e: u64,
    pub reg: u32,
    /// Largest `n` with `μ(I^n) ≠ μ(I^r)`, `-1` if there is none.
    pub fp: i64,
    pub torsion_length: u64,
    /// `λ(F/aF) - e(aF, F) = Σ_k f_{k,1}`.
    pub buchsbaum_constant: u64,
    /// Present iff Cohen-Macaulay.
    pub cm_type: Option<u64>,
    pub a_invariant: Option<i64>,
    /// Shifts `i - 1` of `ω ≅ ⊕ F(J)(i-1)^{h_i}`, with repetition.
    pub canonical_shape: Option<Vec<i64>>,
}

/// `F_+ · H^0 = 0`: every generator of `I` maps `T_k` into `m I^{k+1}`.
pub fn is_buchsbaum(ideal: &mut Ideal, pieces: &[Subspace]) -> bool {
    ideal.prepare(pieces.len() + 1);
    let amb = ideal.ambient().clone();
    pieces.iter().enumerate().all(|(k, t)| {
        let target = ideal.maximal_product(k + 2);
        ideal
            .generators()
            .iter()
            .all(|g| amb.contains(target, &amb.mul_element(t, g)))
    })
}

/// `a I^{i-1} + m I^i`, with `I^{-1} = 0`.
fn a_lower_plus_m(ideal: &Ideal, a: &SeriesElement, i: usize) -> Subspace {
    let amb = ideal.ambient();
    let m = ideal.maximal_product(i);
    if i == 0 {
        return m.clone();
    }
    amb.sum(&amb.mul_element(ideal.power(i - 1), a), m)
}

/// `I^i ∩ (a I^i + m I^{i+1} : I)`.
fn socle_lift(ideal: &Ideal, a: &SeriesElement, i: usize) -> Subspace {
    let amb = ideal.ambient();
    let inner = amb.sum(&amb.mul_element(ideal.power(i), a), ideal.maximal_product(i + 1));
    let col = amb.colon_ideal(&inner, ideal.generators());
    amb.intersect(ideal.power(i), &col)
}

/// `type(F(I))` for Cohen-Macaulay `F(I)`:
/// `Σ_{i=1}^{r-1} λ((I^i ∩ (aI^i + mI^{i+1} : I)) / (aI^{i-1} + mI^i)) + λ(I^r / (aI^{r-1} + mI^r))`.
pub fn cm_type(ideal: &mut Ideal, a: &SeriesElement, r: u32) -> Result<u64> {
    let r = r as usize;
    ideal.prepare(r + 1);
    let amb = ideal.ambient().clone();
    let mut total = 0;
    for i in 1..r {
        total += amb.quotient_length(&socle_lift(ideal, a, i), &a_lower_plus_m(ideal, a, i))?;
    }
    total += amb.quotient_length(ideal.power(r), &a_lower_plus_m(ideal, a, r))?;
    Ok(total)
}

/// The second Gorenstein criterion: `μ(I^r) = μ(I^{r-1}) + 1` and, for
/// `1 <= n <= r-1`, `I^n ∩ (m I^{n+1} : a) = m I^n` and
/// `I^n ∩ (a I^n + m I^{n+1} : I) = a I^{n-1} + m I^n`.
pub fn gorenstein_by_colons(ideal: &mut Ideal, a: &SeriesElement, tables: &InvariantTable) -> bool {
    let r = tables.r as usize;
    if tables.mu_at(r as i64) != tables.mu_at(r as i64 - 1) + 1 {
        return false;
    }
    ideal.prepare(r + 1);
    let amb = ideal.ambient().clone();
    (1..r).all(|n| {
        let col = amb.colon_power(ideal.maximal_product(n + 1), a, 1);
        amb.intersect(ideal.power(n), &col) == *ideal.maximal_product(n)
            && socle_lift(ideal, a, n) == a_lower_plus_m(ideal, a, n)
    })
}

/// Classifies `F(I)` from the tables and the torsion pieces of one reduction.
pub fn classify(
    ideal: &mut Ideal,
    a: &SeriesElement,
    tables: &InvariantTable,
    pieces: &[Subspace],
) -> Result<Classification> {
    let r = tables.r;
    let torsion_length = tables.torsion_length();
    let cohen_macaulay = torsion_length == 0;
    let buchsbaum = is_buchsbaum(ideal, pieces);
    if cohen_macaulay && !buchsbaum {
        return Err(Error::inconsistency("classification", "Cohen-Macaulay but not Buchsbaum"));
    }
    let e = tables.mu_at(r as i64) as u64;
    let fp = (-1..=r as i64)
        .rev()
        .find(|&n| tables.mu_at(n) != tables.mu_at(r as i64))
        .unwrap_or(-1);
    let buchsbaum_constant = (1..r as i64).map(|k| tables.f.get(k, 1)).sum::<i64>() as u64;

    let (cm_type_value, a_invariant, canonical_shape) = if cohen_macaulay {
        let t = cm_type(ideal, a, r)?;
        let h = tables.h_vector();
        let mut shape = Vec::new();
        for (i, &m) in h.iter().enumerate() {
            shape.extend(core::iter::repeat_n(i as i64 - 1, m.max(0) as usize));
        }
        (Some(t), Some(r as i64 - 1), Some(shape))
    } else {
        (None, None, None)
    };
    let gorenstein = cm_type_value == Some(1);
    if cohen_macaulay && gorenstein != gorenstein_by_colons(ideal, a, tables) {
        return Err(Error::inconsistency(
            "Gorenstein criteria",
            format!("type = {cm_type_value:?} disagrees with the colon criterion"),
        ));
    }
    if gorenstein {
        let h = tables.h_vector();
        let rev: Vec<i64> = h.iter().rev().copied().collect();
        if h != rev {
            return Err(Error::inconsistency(
                "Gorenstein symmetry",
                format!("h-vector {h:?} is not palindromic"),
            ));
        }
    }
    Ok(Classification {
        cohen_macaulay,
        buchsbaum,
        gorenstein,
        e,
        reg: r,
        fp,
        torsion_length,
        buchsbaum_constant,
        cm_type: cm_type_value,
        a_invariant,
        canonical_shape,
    })
}
