//! Arithmetic in `GF(p)` for a word-sized prime `p`.

use core::fmt;

use crate::error::{Error, Result};

/// Default characteristic. Large enough that random combinations of ideal
/// generators behave like generic elements.
pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

/// A residue modulo the characteristic of some [`PrimeField`], `0 <= value < p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) const fn raw(value: u32) -> Self {
        FieldElement(value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Accepts primes `2 <= p < 2^31`.
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    pub fn element(self, value: i64) -> FieldElement {
        FieldElement(self.reduce(value))
    }

    /// Canonical residue of an arbitrary signed integer.
    pub fn reduce(self, value: i64) -> u32 {
        value.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, x: u32, y: u32) -> u32 {
        let s = x + y;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, x: u32, y: u32) -> u32 {
        if x >= y {
            x - y
        } else {
            x + self.p - y
        }
    }

    #[inline]
    pub fn neg(self, x: u32) -> u32 {
        if x == 0 {
            0
        } else {
            self.p - x
        }
    }

    #[inline]
    pub fn mul(self, x: u32, y: u32) -> u32 {
        ((x as u64 * y as u64) % self.p as u64) as u32
    }

    /// `x - c*y`, the elimination step.
    #[inline]
    pub fn sub_mul(self, x: u32, c: u32, y: u32) -> u32 {
        self.sub(x, self.mul(c, y))
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue.
    pub fn inv(self, x: u32) -> u32 {
        assert!(x != 0, "inverse of zero in GF({})", self.p);
        self.pow(x, (self.p - 2) as u64)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_out_of_range() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert_eq!(PrimeField::new(32003).unwrap().characteristic(), 32003);
    }

    #[test]
    fn inverse_round_trips() {
        let f = PrimeField::new(32003).unwrap();
        for x in [1u32, 2, 3, 16001, 32002] {
            assert_eq!(f.mul(x, f.inv(x)), 1);
        }
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.inv(1), 1);
    }

    #[test]
    fn signed_reduction() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.reduce(-1), 4);
        assert_eq!(f.reduce(12), 2);
        assert_eq!(f.element(-10), FieldElement::ZERO);
    }
}
