//! Truncated elements of `A = k[[t^S]]` over `GF(p)`.
//!
//! Elements are sparse maps exponent → nonzero coefficient, stored as a vector
//! sorted by exponent. Every exponent lies in `S` and does not exceed the
//! working degree of the ring.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::semigroup::NumericalSemigroup;

/// Context shared by the elements of one truncated ring `A / (t^{>W})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRing {
    semigroup: Arc<NumericalSemigroup>,
    field: PrimeField,
    truncation: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesElement {
    terms: Vec<(u32, u32)>,
    truncation: u32,
}

impl SeriesElement {
    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> &[(u32, u32)] {
        &self.terms
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least exponent with nonzero coefficient; `None` stands for `+∞`.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn coefficient(&self, exponent: u32) -> FieldElement {
        match self.terms.binary_search_by_key(&exponent, |t| t.0) {
            Ok(i) => FieldElement::raw(self.terms[i].1),
            Err(_) => FieldElement::ZERO,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Same element viewed at a different working degree; terms above the new
    /// degree are dropped.
    pub fn with_truncation(&self, truncation: u32) -> SeriesElement {
        SeriesElement {
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|t| t.0 <= truncation)
                .collect(),
            truncation,
        }
    }
}

impl fmt::Display for SeriesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, &(e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "t^{e}")?;
        }
        Ok(())
    }
}

impl SeriesRing {
    pub fn new(semigroup: Arc<NumericalSemigroup>, field: PrimeField, truncation: u32) -> Self {
        SeriesRing {
            semigroup,
            field,
            truncation,
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn semigroup_arc(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn zero(&self) -> SeriesElement {
        SeriesElement {
            terms: Vec::new(),
            truncation: self.truncation,
        }
    }

    /// `t^exponent`; zero when the exponent exceeds the working degree.
    pub fn monomial(&self, exponent: u32) -> Result<SeriesElement> {
        if !self.semigroup.contains(exponent) {
            return Err(Error::ExponentOutsideSemigroup {
                exponent: exponent as u64,
            });
        }
        Ok(self.build_terms(alloc::vec![(exponent, 1)]))
    }

    /// Builds an element from arbitrary `(exponent, coefficient)` pairs:
    /// coefficients are reduced, like terms combined, high terms dropped.
    pub fn from_terms(&self, terms: &[(u32, i64)]) -> Result<SeriesElement> {
        let mut raw = Vec::with_capacity(terms.len());
        for &(e, c) in terms {
            if !self.semigroup.contains(e) {
                return Err(Error::ExponentOutsideSemigroup { exponent: e as u64 });
            }
            raw.push((e, self.field.reduce(c)));
        }
        Ok(self.build_terms(raw))
    }

    fn build_terms(&self, mut raw: Vec<(u32, u32)>) -> SeriesElement {
        raw.retain(|t| t.0 <= self.truncation);
        raw.sort_unstable_by_key(|t| t.0);
        let mut terms: Vec<(u32, u32)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 = self.field.add(last.1, c),
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|t| t.1 != 0);
        SeriesElement {
            terms,
            truncation: self.truncation,
        }
    }

    /// Re-homes an element (possibly from a ring with a different working
    /// degree) into this ring.
    pub fn embed(&self, x: &SeriesElement) -> SeriesElement {
        x.with_truncation(self.truncation)
    }

    fn check(&self, x: &SeriesElement) {
        assert_eq!(
            x.truncation, self.truncation,
            "series element from a ring with a different working degree"
        );
    }

    pub fn add(&self, x: &SeriesElement, y: &SeriesElement) -> SeriesElement {
        self.check(x);
        self.check(y);
        let f = self.field;
        let mut out = Vec::with_capacity(x.terms.len() + y.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < x.terms.len() || j < y.terms.len() {
            let take_x = j == y.terms.len() || (i < x.terms.len() && x.terms[i].0 < y.terms[j].0);
            let take_y = i == x.terms.len() || (j < y.terms.len() && y.terms[j].0 < x.terms[i].0);
            if take_x {
                out.push(x.terms[i]);
                i += 1;
            } else if take_y {
                out.push(y.terms[j]);
                j += 1;
            } else {
                let c = f.add(x.terms[i].1, y.terms[j].1);
                if c != 0 {
                    out.push((x.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        SeriesElement {
            terms: out,
            truncation: self.truncation,
        }
    }

    pub fn neg(&self, x: &SeriesElement) -> SeriesElement {
        self.check(x);
        SeriesElement {
            terms: x.terms.iter().map(|&(e, c)| (e, self.field.neg(c))).collect(),
            truncation: self.truncation,
        }
    }

    pub fn sub(&self, x: &SeriesElement, y: &SeriesElement) -> SeriesElement {
        self.add(x, &self.neg(y))
    }

    pub fn scalar_mul(&self, c: FieldElement, x: &SeriesElement) -> SeriesElement {
        self.check(x);
        let c = c.value() % self.field.characteristic();
        if c == 0 {
            return self.zero();
        }
        SeriesElement {
            terms: x.terms.iter().map(|&(e, v)| (e, self.field.mul(c, v))).collect(),
            truncation: self.truncation,
        }
    }

    pub fn mul(&self, x: &SeriesElement, y: &SeriesElement) -> SeriesElement {
        self.check(x);
        self.check(y);
        let w = self.truncation as u64;
        let mut raw = Vec::with_capacity(x.terms.len() * y.terms.len());
        for &(ex, cx) in &x.terms {
            for &(ey, cy) in &y.terms {
                let e = ex as u64 + ey as u64;
                if e > w {
                    // y is sorted; later terms only get larger
                    break;
                }
                raw.push((e as u32, self.field.mul(cx, cy)));
            }
        }
        self.build_terms(raw)
    }

    pub fn power(&self, x: &SeriesElement, n: u32) -> SeriesElement {
        self.check(x);
        let mut acc = self.build_terms(alloc::vec![(0, 1)]);
        let mut base = x.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Reads a sum of terms `[coeff *] t^exp`. Coefficients are integers
    /// (optionally signed) and default to 1; `t` alone means `t^1` and a bare
    /// integer is a constant term.
    pub fn parse(&self, text: &str) -> Result<SeriesElement> {
        let terms = parse_terms(text)?;
        let mut raw = Vec::with_capacity(terms.len());
        for t in terms {
            if t.exponent > u32::MAX as u64 || !self.semigroup.contains(t.exponent as u32) {
                return Err(Error::ExponentOutsideSemigroup {
                    exponent: t.exponent,
                });
            }
            raw.push((t.exponent as u32, self.field.reduce(t.coefficient)));
        }
        Ok(self.build_terms(raw))
    }
}

/// Parses `text` in the element grammar into an element of `k[[t^S]]`
/// truncated at `truncation`.
pub fn parse(
    text: &str,
    semigroup: &NumericalSemigroup,
    field: PrimeField,
    truncation: u32,
) -> Result<SeriesElement> {
    SeriesRing::new(Arc::new(semigroup.clone()), field, truncation).parse(text)
}

struct ParsedTerm {
    coefficient: i64,
    exponent: u64,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .ok_or_else(|| self.error("integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected integer"));
        }
        Ok(v)
    }
}

fn parse_terms(text: &str) -> Result<Vec<ParsedTerm>> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut out = Vec::new();
    if cur.peek().is_none() {
        return Err(cur.error("empty expression"));
    }
    let mut first = true;
    loop {
        let mut negative = false;
        if cur.eat(b'+') {
            if first {
                return Err(cur.error("leading '+'"));
            }
        } else if cur.eat(b'-') {
            negative = true;
        } else if !first {
            return Err(cur.error("expected '+' or '-' between terms"));
        }
        first = false;

        let coefficient: i64;
        let exponent: u64;
        match cur.peek() {
            Some(b't') => {
                coefficient = 1;
                exponent = parse_power(&mut cur)?;
            }
            Some(b) if b.is_ascii_digit() => {
                let c = cur.integer()?;
                let c = i64::try_from(c).map_err(|_| cur.error("coefficient too large"))?;
                coefficient = c;
                if cur.eat(b'*') {
                    if cur.peek() != Some(b't') {
                        return Err(cur.error("expected 't' after '*'"));
                    }
                    exponent = parse_power(&mut cur)?;
                } else {
                    exponent = 0;
                }
            }
            Some(_) => return Err(cur.error("expected term")),
            None => return Err(cur.error("unexpected end of expression")),
        }
        out.push(ParsedTerm {
            coefficient: if negative { -coefficient } else { coefficient },
            exponent,
        });
        if cur.peek().is_none() {
            return Ok(out);
        }
    }
}

// `t` or `t^n`, cursor positioned on `t`.
fn parse_power(cur: &mut Cursor<'_>) -> Result<u64> {
    cur.eat(b't');
    if cur.eat(b'^') {
        cur.integer()
    } else {
        Ok(1)
    }
}

/// Renders a list of elements as `a, b, c`.
pub fn join(elements: &[SeriesElement]) -> String {
    let mut s = String::new();
    for (i, e) in elements.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{e}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(gens: &[u32], p: u64, w: u32) -> SeriesRing {
        SeriesRing::new(
            Arc::new(NumericalSemigroup::new(gens).unwrap()),
            PrimeField::new(p).unwrap(),
            w,
        )
    }

    #[test]
    fn parse_examples() {
        let r = ring(&[8, 15, 28, 50, 57], 32003, 200);
        assert_eq!(r.parse("t^8 + t^57").unwrap().terms(), &[(8, 1), (57, 1)]);
        let r = ring(&[6, 11, 15, 31], 5, 100);
        assert_eq!(r.parse("3*t^6").unwrap().terms(), &[(6, 3)]);
        assert!(r.parse("t^6 + 4*t^6").unwrap().is_zero());
        assert_eq!(r.parse("t^6 - t^11").unwrap().terms(), &[(6, 1), (11, 4)]);
        assert_eq!(r.parse("t^0").unwrap().terms(), &[(0, 1)]);
        assert_eq!(r.parse("t^200").unwrap().terms(), &[]);
    }

    #[test]
    fn parse_errors() {
        let r = ring(&[6, 11, 15, 31], 32003, 100);
        assert_eq!(
            r.parse("t^7"),
            Err(Error::ExponentOutsideSemigroup { exponent: 7 })
        );
        match r.parse("t^6 + * t^11") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(r.parse(""), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("t^6 t^11"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("t^"), Err(Error::Parse { .. })));
    }

    #[test]
    fn multiplication_examples() {
        let r = ring(&[8, 15, 28, 50, 57], 32003, 100);
        let a = r.parse("t^8 + t^57").unwrap();
        let t8 = r.monomial(8).unwrap();
        assert_eq!(r.mul(&a, &t8).terms(), &[(16, 1), (65, 1)]);
        // t^114 falls beyond the working degree
        assert_eq!(r.mul(&a, &a).terms(), &[(16, 1), (65, 2)]);
        let r6 = ring(&[6, 11, 15, 31], 32003, 100);
        let t6 = r6.monomial(6).unwrap();
        let t11 = r6.monomial(11).unwrap();
        assert_eq!(r6.mul(&t6, &t11).terms(), &[(17, 1)]);
        assert_eq!(r6.power(&t6, 3).terms(), &[(18, 1)]);
        assert_eq!(r6.power(&t6, 0).terms(), &[(0, 1)]);
        assert!(r6.add(&t6, &r6.neg(&t6)).is_zero());
        assert_eq!(a.valuation(), Some(8));
        assert_eq!(r.zero().valuation(), None);
    }

    #[test]
    #[should_panic(expected = "different working degree")]
    fn mismatched_rings_are_rejected() {
        let r1 = ring(&[2, 3], 7, 10);
        let r2 = ring(&[2, 3], 7, 20);
        let x = r1.monomial(2).unwrap();
        let y = r2.monomial(3).unwrap();
        r1.mul(&x, &y);
    }

    fn terms() -> impl Strategy<Value = Vec<(u32, i64)>> {
        prop::collection::vec((0u32..40, -20i64..20), 0..6)
    }

    fn build(r: &SeriesRing, ts: Vec<(u32, i64)>) -> SeriesElement {
        let ts: Vec<(u32, i64)> = ts
            .into_iter()
            .filter(|t| r.semigroup().contains(t.0))
            .collect();
        r.from_terms(&ts).unwrap()
    }

    proptest! {
        #[test]
        fn ring_axioms(xs in terms(), ys in terms(), zs in terms()) {
            let r = ring(&[4, 7, 9], 101, 60);
            let (x, y, z) = (build(&r, xs), build(&r, ys), build(&r, zs));
            prop_assert_eq!(r.mul(&x, &y), r.mul(&y, &x));
            prop_assert_eq!(r.mul(&r.mul(&x, &y), &z), r.mul(&x, &r.mul(&y, &z)));
            prop_assert_eq!(r.mul(&x, &r.add(&y, &z)), r.add(&r.mul(&x, &y), &r.mul(&x, &z)));
            prop_assert_eq!(r.add(&r.add(&x, &y), &z), r.add(&x, &r.add(&y, &z)));
            if let (Some(vx), Some(vy)) = (x.valuation(), y.valuation()) {
                if vx + vy <= r.truncation() {
                    prop_assert_eq!(r.mul(&x, &y).valuation(), Some(vx + vy));
                }
            }
        }

        #[test]
        fn powers_add_exponents(exps in prop::collection::vec(0u32..30, 1..4), m in 0u32..4, n in 0u32..4) {
            let r = ring(&[3, 5], 32003, 200);
            let ts: Vec<(u32, i64)> = exps.iter().filter(|&&e| r.semigroup().contains(e)).map(|&e| (e, 1)).collect();
            let x = r.from_terms(&ts).unwrap();
            prop_assume!(x.terms().iter().all(|t| t.0 * (m + n) <= 200));
            prop_assert_eq!(r.power(&x, m + n), r.mul(&r.power(&x, m), &r.power(&x, n)));
        }
    }

    #[test]
    fn display_round_trips_through_parse() {
        let r = ring(&[8, 15, 28, 50, 57], 32003, 200);
        let x = r.from_terms(&[(8, 1), (57, 3), (15, -1)]).unwrap();
        assert_eq!(r.parse(&alloc::format!("{x}")).unwrap(), x);
        assert_eq!(join(&[x.clone(), r.zero()]), alloc::format!("{x}, 0"));
    }
}
