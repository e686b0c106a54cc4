//! Subspaces of the truncated ring `A / (t^{>N})` in the monomial basis, and
//! the ideal calculus built on them: spans, products, sums, intersections,
//! colons and quotient lengths.
//!
//! A [`Subspace`] is stored as a *tail* `τ` together with a reduced
//! row-echelon basis supported on exponents `< τ`: the subspace is the span of
//! those rows and of every monomial `t^s` with `s ∈ S`, `τ <= s <= N`. All
//! `m`-primary ideals have such a tail, which keeps the dense part of every
//! computation as small as the ideal's co-length rather than the truncation
//! degree.

mod echelon;
mod ideal;

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::semigroup::NumericalSemigroup;
use crate::series::{SeriesElement, SeriesRing};

pub use echelon::SparseVec;
pub(crate) use echelon::{kernel, Rref};
pub use ideal::Ideal;

/// A finite-dimensional subspace of `A / (t^{>N})`, canonical for a given
/// ambient: equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    limit: u32,
    tail: u32,
    rows: Vec<SparseVec>,
}

impl Subspace {
    /// Every `t^s`, `s ∈ S`, `s >= tail()` belongs to the subspace.
    pub fn tail(&self) -> u32 {
        self.tail
    }

    /// Echelon rows below the tail, sorted by pivot.
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Leading exponents of a basis: row pivots, then the tail monomials.
    pub fn pivot_exponents(&self, semigroup: &NumericalSemigroup) -> Vec<u32> {
        let mut p: Vec<u32> = self.rows.iter().map(|r| r[0].0).collect();
        p.extend(semigroup.members_in(self.tail, self.limit.saturating_add(1)));
        p
    }

    /// Smallest exponent occurring in the subspace.
    pub fn valuation(&self) -> Option<u32> {
        self.rows.first().map(|r| r[0].0).or(if self.tail <= self.limit {
            Some(self.tail)
        } else {
            None
        })
    }
}

struct AmbientInner {
    ring: SeriesRing,
    limit: u32,
}

/// The truncated ring `A / (t^{>N})` seen as a vector space, plus the working
/// ring (degree `W >= N`) whose elements act on it.
#[derive(Clone)]
pub struct Ambient {
    inner: Arc<AmbientInner>,
}

impl core::fmt::Debug for Ambient {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Ambient")
            .field("semigroup", self.semigroup())
            .field("p", &self.field().characteristic())
            .field("limit", &self.limit())
            .field("working_degree", &self.ring().truncation())
            .finish()
    }
}

impl Ambient {
    /// `limit` is the reporting degree `N`; `ring` must have working degree
    /// at least `N`.
    pub fn new(ring: SeriesRing, limit: u32) -> Self {
        assert!(ring.truncation() >= limit, "working degree below reporting degree");
        Ambient {
            inner: Arc::new(AmbientInner { ring, limit }),
        }
    }

    pub fn ring(&self) -> &SeriesRing {
        &self.inner.ring
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        self.inner.ring.semigroup()
    }

    pub fn field(&self) -> PrimeField {
        self.inner.ring.field()
    }

    pub fn limit(&self) -> u32 {
        self.inner.limit
    }

    fn cap(&self) -> u32 {
        self.inner.limit + 1
    }

    fn check(&self, u: &Subspace) {
        assert_eq!(u.limit, self.limit(), "subspace from a different ambient");
    }

    fn check_element(&self, g: &SeriesElement) {
        assert!(
            g.truncation() >= self.limit(),
            "element truncated below the reporting degree"
        );
    }

    pub fn dim(&self, u: &Subspace) -> u64 {
        self.check(u);
        u.rows.len() as u64 + self.semigroup().count_between(u.tail, self.limit())
    }

    /// All of `A / (t^{>N})`.
    pub fn whole(&self) -> Subspace {
        self.canonical(Vec::new(), 0)
    }

    pub fn zero(&self) -> Subspace {
        self.canonical(Vec::new(), self.cap())
    }

    /// The maximal ideal `m = (t^s : s ∈ S, s > 0)`.
    pub fn maximal_ideal(&self) -> Subspace {
        self.canonical(Vec::new(), self.semigroup().multiplicity())
    }

    /// Span of arbitrary vectors together with all monomials from `tail` on.
    pub fn span(&self, vectors: impl IntoIterator<Item = SparseVec>, tail: u32) -> Subspace {
        let tail = tail.min(self.cap());
        let mut rref = Rref::new(self.field(), tail);
        for v in vectors {
            rref.insert(&v);
        }
        self.canonical(rref.into_rows(), tail)
    }

    // Moves monomial rows directly below the tail into the tail.
    fn canonical(&self, mut rows: Vec<SparseVec>, mut tail: u32) -> Subspace {
        let s = self.semigroup();
        tail = tail.min(self.cap());
        // The tail can never start inside a semigroup gap.
        while tail > 0 && tail <= self.limit() && !s.contains(tail) {
            tail += 1;
        }
        while let Some(prev) = s.prev_member(tail) {
            match rows.last() {
                Some(last) if last[0].0 == prev => {
                    debug_assert_eq!(last.len(), 1);
                    rows.pop();
                    tail = prev;
                }
                _ => break,
            }
        }
        Subspace {
            limit: self.limit(),
            tail,
            rows,
        }
    }

    /// Coordinate vector of an element, truncated at the reporting degree.
    pub fn vector(&self, x: &SeriesElement) -> SparseVec {
        x.terms().iter().copied().take_while(|t| t.0 <= self.limit()).collect()
    }

    /// Basis vectors of `u` with valuation below `bound`: the rows and the
    /// tail monomials in `[tail, bound)`.
    fn basis_below(&self, u: &Subspace, bound: u32) -> Vec<SparseVec> {
        let mut out: Vec<SparseVec> = u
            .rows
            .iter()
            .filter(|r| r[0].0 < bound)
            .cloned()
            .collect();
        out.extend(
            self.semigroup()
                .members_in(u.tail, bound.min(self.cap()))
                .map(|s| alloc::vec![(s, 1)]),
        );
        out
    }

    /// `g · v`, dropping exponents `>= bound`.
    fn shift_mul(&self, g: &SeriesElement, v: &[(u32, u32)], bound: u32) -> SparseVec {
        let f = self.field();
        let mut acc: Vec<(u32, u32)> = Vec::with_capacity(g.terms().len() * v.len());
        for &(ev, cv) in v {
            for &(eg, cg) in g.terms() {
                let e = ev as u64 + eg as u64;
                if e >= bound as u64 {
                    break;
                }
                acc.push((e as u32, f.mul(cv, cg)));
            }
        }
        acc.sort_unstable_by_key(|t| t.0);
        let mut out: SparseVec = Vec::with_capacity(acc.len());
        for (e, c) in acc {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = f.add(last.1, c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        out
    }

    // Tail guaranteed for g·U: it contains every element of valuation at
    // least val(g) + max(tail(U), conductor).
    fn product_tail(&self, u: &Subspace, g: &SeriesElement) -> Option<u32> {
        let vg = g.valuation()?;
        let t = vg as u64 + u.tail.max(self.semigroup().conductor()) as u64;
        Some(t.min(self.cap() as u64) as u32)
    }

    /// `g · U`.
    pub fn mul_element(&self, u: &Subspace, g: &SeriesElement) -> Subspace {
        self.mul_elements(u, core::slice::from_ref(g))
    }

    /// `Σ g_i · U` for the listed elements; equals `I·U` when the `g_i`
    /// generate the ideal `I`.
    pub fn mul_elements(&self, u: &Subspace, gens: &[SeriesElement]) -> Subspace {
        self.check(u);
        if u.tail > self.limit() && u.rows.is_empty() {
            return self.zero();
        }
        let mut tail = self.cap();
        for g in gens {
            self.check_element(g);
            if let Some(t) = self.product_tail(u, g) {
                tail = tail.min(t);
            }
        }
        let mut vectors = Vec::new();
        for g in gens {
            let Some(vg) = g.valuation() else { continue };
            if vg >= tail {
                continue;
            }
            for b in self.basis_below(u, tail - vg) {
                vectors.push(self.shift_mul(g, &b, tail));
            }
        }
        self.span(vectors, tail)
    }

    /// The ideal generated by `gens` (truncated).
    pub fn span_ideal(&self, gens: &[SeriesElement]) -> Result<Subspace> {
        if gens.iter().all(|g| g.valuation().is_none_or(|v| v > self.limit())) {
            return Err(Error::ZeroIdeal);
        }
        Ok(self.mul_elements(&self.whole(), gens))
    }

    /// `m · U`.
    pub fn mul_maximal(&self, u: &Subspace) -> Subspace {
        let ring = self.ring();
        let gens: Vec<SeriesElement> = self
            .semigroup()
            .generators()
            .iter()
            .filter(|&&g| g <= self.limit())
            .map(|&g| ring.monomial(g).expect("generator in semigroup"))
            .collect();
        self.mul_elements(u, &gens)
    }

    pub fn sum(&self, u: &Subspace, v: &Subspace) -> Subspace {
        self.check(u);
        self.check(v);
        let tail = u.tail.min(v.tail);
        self.span(u.rows.iter().chain(v.rows.iter()).cloned(), tail)
    }

    pub fn intersect(&self, u: &Subspace, v: &Subspace) -> Subspace {
        self.check(u);
        self.check(v);
        let tail = u.tail.max(v.tail);
        let ub = self.basis_below(u, tail);
        let mut vr = Rref::new(self.field(), tail);
        for b in self.basis_below(v, tail) {
            vr.insert(&b);
        }
        let residuals: Vec<SparseVec> = ub.iter().map(|b| vr.reduce(b)).collect();
        let f = self.field();
        let vectors = kernel(f, tail, &residuals).into_iter().map(|combo| {
            let mut acc: SparseVec = Vec::new();
            for (i, c) in combo {
                acc = echelon::axpy(f, &acc, f.neg(c), &ub[i as usize]);
            }
            acc
        });
        self.span(vectors, tail)
    }

    /// `(M : b) = {x : b·x ∈ M}`.
    pub fn colon_element(&self, m: &Subspace, b: &SeriesElement) -> Subspace {
        self.check(m);
        self.check_element(b);
        let Some(vb) = b.valuation() else {
            panic!("colon by the zero element");
        };
        let tail = m.tail.saturating_sub(vb);
        // val(b x) = val(b) + val(x) must reach val(M)
        let floor = m.valuation().unwrap_or(m.tail).saturating_sub(vb).min(tail);
        let unknowns: Vec<u32> = self.semigroup().members_in(floor, tail).collect();
        let mut mr = Rref::from_rref(self.field(), m.tail, &m.rows);
        let residuals: Vec<SparseVec> = unknowns
            .iter()
            .map(|&s| {
                let img = self.shift_mul(b, &[(s, 1)], m.tail);
                mr.reduce(&img)
            })
            .collect();
        let vectors = kernel(self.field(), m.tail, &residuals).into_iter().map(|combo| {
            combo
                .into_iter()
                .map(|(i, c)| (unknowns[i as usize], c))
                .collect::<SparseVec>()
        });
        self.span(vectors, tail)
    }

    /// `(M : a^l)`.
    pub fn colon_power(&self, m: &Subspace, a: &SeriesElement, l: u32) -> Subspace {
        let ring = self.ring();
        let b = ring.power(&ring.embed(a), l);
        self.colon_element(m, &b)
    }

    /// `(M : I)` for `I = (gens)`, the intersection of the element colons.
    pub fn colon_ideal(&self, m: &Subspace, gens: &[SeriesElement]) -> Subspace {
        let mut acc = self.whole();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let c = self.colon_element(m, g);
            acc = self.intersect(&acc, &c);
        }
        acc
    }

    /// Residual of a vector modulo `u`; zero iff the vector lies in `u`.
    pub fn reduce(&self, u: &Subspace, v: &[(u32, u32)]) -> SparseVec {
        self.check(u);
        let mut r = Rref::from_rref(self.field(), u.tail, &u.rows);
        r.reduce(v)
    }

    pub fn contains_vector(&self, u: &Subspace, v: &[(u32, u32)]) -> bool {
        self.reduce(u, v).is_empty()
    }

    /// `V ⊆ U`.
    pub fn contains(&self, u: &Subspace, v: &Subspace) -> bool {
        self.check(u);
        self.check(v);
        let mut r = Rref::from_rref(self.field(), u.tail, &u.rows);
        if v.tail < u.tail
            && self
                .semigroup()
                .members_in(v.tail, u.tail)
                .any(|s| !r.reduce(&[(s, 1)]).is_empty())
        {
            return false;
        }
        v.rows.iter().all(|row| r.reduce(row).is_empty())
    }

    pub fn equal(&self, u: &Subspace, v: &Subspace) -> bool {
        self.check(u);
        self.check(v);
        u == v
    }

    /// `λ(U/V) = dim U - dim V`; `V ⊆ U` is required.
    pub fn quotient_length(&self, u: &Subspace, v: &Subspace) -> Result<u64> {
        if !self.contains(u, v) {
            return Err(Error::inconsistency(
                "quotient length",
                "denominator is not contained in numerator",
            ));
        }
        Ok(self.dim(u) - self.dim(v))
    }
}

#[cfg(test)]
mod tests;
