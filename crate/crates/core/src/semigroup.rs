//! Numerical semigroups: the exponent sets of the ambient rings `k[[t^S]]`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A numerical semigroup `S ⊆ ℕ` given by generators with `gcd = 1`.
///
/// Generators are kept sorted and deduplicated. Redundant generators are
/// allowed and kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    conductor: u32,
    // membership of 0..conductor
    small: Vec<bool>,
    // prefix[i] = |S ∩ [0, i)| for i <= conductor
    prefix: Vec<u32>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[u32]) -> Result<Self> {
        let mut gens: Vec<u32> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::InvalidSemigroup("no generators".into()));
        }
        if gens[0] == 0 {
            return Err(Error::InvalidSemigroup("generators must be positive".into()));
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::InvalidSemigroup(format!(
                "gcd of generators is {g}, expected 1"
            )));
        }

        // Sieve until `min` consecutive members appear; from there on every
        // integer is a member.
        let min = gens[0] as usize;
        let mut member: Vec<bool> = alloc::vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < min {
            n += 1;
            let is = gens
                .iter()
                .any(|&g| (g as usize) <= n && member[n - g as usize]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
        }
        // `member[n + 1 - min ..= n]` are all true and the entry before is a gap.
        let conductor = (n + 1 - min) as u32;
        member.truncate(conductor as usize);
        let mut prefix = Vec::with_capacity(member.len() + 1);
        let mut acc = 0u32;
        prefix.push(0);
        for &m in &member {
            acc += m as u32;
            prefix.push(acc);
        }
        Ok(NumericalSemigroup {
            generators: gens,
            conductor,
            small: member,
            prefix,
        })
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// Least `c` with `[c, ∞) ⊆ S`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u32 {
        self.generators[0]
    }

    pub fn contains(&self, n: u32) -> bool {
        n >= self.conductor || self.small[n as usize]
    }

    /// Membership for possibly negative input.
    pub fn is_member(&self, n: i64) -> Result<bool> {
        if n < 0 {
            return Err(Error::NegativeInput(n));
        }
        if n > u32::MAX as i64 {
            return Ok(true);
        }
        Ok(self.contains(n as u32))
    }

    /// All elements `s <= bound`, ascending.
    pub fn monomials_up_to(&self, bound: u32) -> Vec<u32> {
        (0..=bound).filter(|&s| self.contains(s)).collect()
    }

    /// Elements of `S` in `[lo, hi)`, ascending.
    pub fn members_in(&self, lo: u32, hi: u32) -> impl Iterator<Item = u32> + '_ {
        (lo..hi).filter(move |&s| self.contains(s))
    }

    /// `|S ∩ [0, x)|`.
    pub fn count_below(&self, x: u32) -> u64 {
        if x <= self.conductor {
            self.prefix[x as usize] as u64
        } else {
            self.prefix[self.conductor as usize] as u64 + (x - self.conductor) as u64
        }
    }

    /// `|S ∩ [lo, hi]|`, zero when `lo > hi`.
    pub fn count_between(&self, lo: u32, hi: u32) -> u64 {
        if lo > hi {
            return 0;
        }
        self.count_below(hi.saturating_add(1)) - self.count_below(lo)
    }

    /// The gaps `ℕ ∖ S`, all below the conductor.
    pub fn gaps(&self) -> Vec<u32> {
        (0..self.conductor).filter(|&s| !self.contains(s)).collect()
    }

    /// Largest element of `S` strictly below `x`.
    pub fn prev_member(&self, x: u32) -> Option<u32> {
        (0..x).rev().find(|&s| self.contains(s))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sg(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    // Exhaustive sieve of representable integers up to the product of the
    // generators, used as the conductor oracle.
    fn conductor_by_enumeration(gens: &[u32]) -> u32 {
        let bound: usize = gens.iter().map(|&g| g as usize).product::<usize>() + 1;
        let mut rep = vec![false; bound + 1];
        rep[0] = true;
        for n in 1..=bound {
            rep[n] = gens.iter().any(|&g| g as usize <= n && rep[n - g as usize]);
        }
        (0..=bound).rev().find(|&n| !rep[n]).map_or(0, |n| n as u32 + 1)
    }

    #[test]
    fn membership_examples() {
        let s = sg(&[6, 11, 15, 31]);
        assert!(s.contains(17));
        assert!(!s.contains(7));
        assert!(sg(&[4, 5, 11]).contains(0));
        assert_eq!(s.is_member(-3), Err(Error::NegativeInput(-3)));
    }

    #[test]
    fn conductor_examples() {
        assert_eq!(sg(&[2, 3]).conductor(), 2);
        assert_eq!(sg(&[1]).conductor(), 0);
        assert_eq!(sg(&[4, 5, 11]).conductor(), conductor_by_enumeration(&[4, 5, 11]));
        assert_eq!(sg(&[4, 5, 11]).conductor(), 8);
        assert_eq!(sg(&[6, 11, 15, 31]).conductor(), 26);
        assert_eq!(sg(&[8, 15, 28, 50, 57]).conductor(), 50);
    }

    #[test]
    fn monomial_listing() {
        assert_eq!(sg(&[2, 3]).monomials_up_to(5), vec![0, 2, 3, 4, 5]);
        assert_eq!(sg(&[1]).monomials_up_to(3), vec![0, 1, 2, 3]);
        assert_eq!(
            sg(&[6, 11, 15, 31]).monomials_up_to(17),
            vec![0, 6, 11, 12, 15, 17]
        );
    }

    #[test]
    fn invalid_generators() {
        assert!(matches!(
            NumericalSemigroup::new(&[4, 6]),
            Err(Error::InvalidSemigroup(_))
        ));
        assert!(NumericalSemigroup::new(&[]).is_err());
        assert!(NumericalSemigroup::new(&[0, 1]).is_err());
        // duplicates collapse
        assert_eq!(sg(&[3, 2, 3]).generators(), &[2, 3]);
    }

    #[test]
    fn counting_matches_listing() {
        let s = sg(&[8, 15, 28, 50, 57]);
        for hi in [0u32, 7, 8, 49, 50, 51, 200] {
            assert_eq!(s.count_between(0, hi), s.monomials_up_to(hi).len() as u64);
        }
        assert_eq!(s.count_between(10, 9), 0);
        assert_eq!(s.prev_member(16), Some(15));
        assert_eq!(s.prev_member(0), None);
    }

    #[test]
    fn conductor_agrees_with_enumeration() {
        for gens in [&[3u32, 5][..], &[5, 7, 9], &[6, 10, 15], &[7, 8, 9, 10, 11], &[9, 13]] {
            assert_eq!(sg(gens).conductor(), conductor_by_enumeration(gens), "{gens:?}");
        }
    }

    proptest::proptest! {
        #[test]
        fn closed_under_addition(a in 0u32..400, b in 0u32..400) {
            let s = sg(&[7, 10, 12]);
            if s.contains(a) && s.contains(b) {
                proptest::prop_assert!(s.contains(a + b));
            }
        }

        #[test]
        fn everything_past_conductor_is_member(
            g1 in 2u32..20, g2 in 2u32..20, g3 in 2u32..20, off in 0u32..100
        ) {
            if let Ok(s) = NumericalSemigroup::new(&[g1, g2, g3]) {
                proptest::prop_assert!(s.contains(s.conductor() + off));
                if s.conductor() > 0 {
                    proptest::prop_assert!(!s.contains(s.conductor() - 1));
                }
                let n = s.conductor() + off;
                let gaps = s.gaps().len() as u64;
                proptest::prop_assert_eq!(s.monomials_up_to(n).len() as u64, n as u64 + 1 - gaps);
            }
        }
    }
}
