//! Identities and theorems that every analyzed instance must satisfy,
//! evaluated on the computed subspaces and tables.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::classify::{Classification, Decomposition};
use super::hilbert::HilbertData;
use super::tables::InvariantTable;
use super::top_degree;
use crate::error::{Error, Result};
use crate::linalg::Ideal;
use crate::series::SeriesElement;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyCount {
    pub name: &'static str,
    pub checked: u32,
    pub violations: Vec<String>,
}

/// Per-property counts of evaluated instances and violations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyTally {
    pub counts: Vec<PropertyCount>,
}

impl PropertyTally {
    fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let idx = match self.counts.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.counts.push(PropertyCount {
                    name,
                    ..Default::default()
                });
                self.counts.len() - 1
            }
        };
        let c = &mut self.counts[idx];
        c.checked += 1;
        if !ok {
            c.violations.push(detail());
        }
    }

    pub fn violation_count(&self) -> usize {
        self.counts.iter().map(|c| c.violations.len()).sum()
    }

    /// The first violation as an error.
    pub fn into_result(self) -> Result<PropertyTally> {
        for c in &self.counts {
            if let Some(v) = c.violations.first() {
                return Err(Error::inconsistency(c.name, v.clone()));
            }
        }
        Ok(self)
    }

    /// Adds the counts of another tally.
    pub fn merge(&mut self, other: &PropertyTally) {
        for c in &other.counts {
            match self.counts.iter_mut().find(|x| x.name == c.name) {
                Some(x) => {
                    x.checked += c.checked;
                    x.violations.extend(c.violations.iter().cloned());
                }
                None => self.counts.push(c.clone()),
            }
        }
    }
}

/// Evaluates every property for one instance and one reduction.
pub fn check_properties(
    ideal: &mut Ideal,
    a: &SeriesElement,
    tables: &InvariantTable,
    decomposition: &Decomposition,
    classification: &Classification,
    hilbert: &HilbertData,
) -> Result<PropertyTally> {
    let r = tables.r as usize;
    ideal.prepare(top_degree(tables.r) as usize);
    let amb = ideal.ambient().clone();
    let ring = amb.ring().clone();
    let a = ring.embed(a);
    let apow = |n: usize| ring.power(&a, n as u32);
    let mu = |n: i64| tables.mu_at(n);
    let mut t = PropertyTally::default();

    // (m I^l : a^l) = m, and (m I^{k+l} : a^l) = m I^k for k >= r
    for l in 1..=r.max(1) {
        let c = amb.colon_power(ideal.maximal_product(l), &a, l as u32);
        t.record("colon at k = 0", c == amb.maximal_ideal(), || format!("(mI^{l} : a^{l}) ≠ m"));
    }
    for l in 1..=2 {
        let c = amb.colon_power(ideal.maximal_product(r + l), &a, l as u32);
        t.record("colon beyond r", &c == ideal.maximal_product(r), || {
            format!("(mI^{} : a^{l}) ≠ mI^{r}", r + l)
        });
    }
    // ascending chain (m I^{k+1} : a) ⊆ … ⊆ (m I^r : a^{r-k}), stable afterwards
    for k in 1..r {
        let mut prev = amb.colon_power(ideal.maximal_product(k + 1), &a, 1);
        for l in 2..=r - k + 2 {
            let next = amb.colon_power(ideal.maximal_product(k + l), &a, l as u32);
            let ok = if l <= r - k { amb.contains(&next, &prev) } else { next == prev };
            t.record("colon chain", ok, || format!("chain at k = {k}, l = {l}"));
            prev = next;
        }
    }

    // λ(I^n/(mI^n + a^{n-i}I^i)) = μ(I^n) - μ(I^i) + λ((a^{n-i}I^i ∩ mI^n)/a^{n-i}mI^i)
    for n in 1..=r {
        for i in 0..n {
            let b = apow(n - i);
            let bi = amb.mul_element(ideal.power(i), &b);
            let lhs = amb.quotient_length(ideal.power(n), &amb.sum(ideal.maximal_product(n), &bi))?;
            let inter = amb.intersect(&bi, ideal.maximal_product(n));
            let bmi = amb.mul_element(ideal.maximal_product(i), &b);
            let rhs = mu(n as i64) - mu(i as i64) + amb.quotient_length(&inter, &bmi)? as i64;
            t.record("length identity", lhs as i64 == rhs, || {
                format!("n = {n}, i = {i}: {lhs} ≠ {rhs}")
            });
        }
    }

    // λ(F/aF) computed degree by degree
    let mut f_over_af = 0i64;
    for n in 0..=r {
        let denom = if n == 0 {
            ideal.maximal_product(0).clone()
        } else {
            amb.sum(ideal.maximal_product(n), &amb.mul_element(ideal.power(n - 1), &a))
        };
        f_over_af += amb.quotient_length(ideal.power(n), &denom)? as i64;
    }
    let sum_f1: i64 = (1..r as i64).map(|k| tables.f.get(k, 1)).sum();
    let sum_ext: i64 = tables.torsion_length() as i64;
    let e = mu(r as i64);
    t.record("λ(F/aF)", f_over_af == e + sum_f1, || {
        format!("λ(F/aF) = {f_over_af} but μ(I^r) + Σf(k,1) = {}", e + sum_f1)
    });
    t.record("Buchsbaum constant", classification.buchsbaum_constant as i64 == f_over_af - e, || {
        format!("C = {} but λ(F/aF) - e = {}", classification.buchsbaum_constant, f_over_af - e)
    });

    // λ(F/a^{r+1}F) computed degree by degree
    let b = apow(r + 1);
    let mut f_over_arf = 0i64;
    for k in 0..=2 * r {
        let denom = if k > r {
            amb.sum(ideal.maximal_product(k), &amb.mul_element(ideal.power(k - r - 1), &b))
        } else {
            ideal.maximal_product(k).clone()
        };
        f_over_arf += amb.quotient_length(ideal.power(k), &denom)? as i64;
    }
    let expect = e * (r as i64 + 1) + sum_ext;
    t.record("λ(F/a^(r+1)F)", f_over_arf == expect, || {
        format!("λ(F/a^(r+1)F) = {f_over_arf} but μ(I^r)(r+1) + Σf(k,r-k) = {expect}")
    });

    for n in 1..=r as i64 {
        t.record("μ(I^n) >= n+1", mu(n) > n, || format!("μ(I^{n}) = {} <= {n}", mu(n)));
    }

    let c = classification;
    t.record(
        "Gorenstein ⇒ CM ⇒ Buchsbaum",
        (!c.gorenstein || c.cohen_macaulay) && (!c.cohen_macaulay || c.buchsbaum),
        || format!("G = {}, CM = {}, B = {}", c.gorenstein, c.cohen_macaulay, c.buchsbaum),
    );
    t.record("CM ⟺ no torsion", c.cohen_macaulay == (c.torsion_length == 0), || {
        format!("CM = {} with torsion length {}", c.cohen_macaulay, c.torsion_length)
    });
    t.record("Q(1) = e", hilbert.multiplicity == e && c.e as i64 == e, || {
        format!("Q(1) = {}, e = {e}", hilbert.multiplicity)
    });
    t.record("reg = r", c.reg as usize == r, || format!("reg = {} but r = {r}", c.reg));

    if r == 1 {
        let ok = decomposition.is_free() && decomposition.free == [1, mu(1) - 1];
        t.record("r = 1 ⇒ free", ok, || format!("decomposition {decomposition}"));
    }
    if r == 2 {
        t.record("r = 2 ⇒ Buchsbaum", c.buchsbaum, || String::from("not Buchsbaum"));
    }
    if mu(1) == 2 {
        let ok = c.gorenstein && decomposition.is_free() && decomposition.free.iter().all(|&m| m == 1);
        t.record("two-generated ⇒ Gorenstein", ok, || format!("decomposition {decomposition}"));
    }
    if c.cohen_macaulay {
        let increasing = (1..=r as i64).all(|n| mu(n) > mu(n - 1));
        t.record("CM ⇒ μ increasing, fp = r-1", increasing && c.fp == r as i64 - 1, || {
            format!("μ = {:?}, fp = {}", tables.mu, c.fp)
        });
        let top = c.canonical_shape.as_ref().and_then(|s| s.last().copied());
        t.record(
            "canonical shape",
            c.a_invariant == Some(r as i64 - 1) && top == Some(r as i64 - 1),
            || format!("a-invariant {:?}, shape {:?}", c.a_invariant, c.canonical_shape),
        );
    }
    if c.gorenstein {
        let h = tables.h_vector();
        let sym = h.iter().eq(h.iter().rev());
        t.record("Gorenstein ⇒ palindromic h", sym, || format!("h = {h:?}"));
    }
    Ok(t)
}
