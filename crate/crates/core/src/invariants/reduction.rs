//! Principal reductions `J = (a) ⊆ I` and the reduction number.
//!
//! In `k[[t^S]]` an element `a ∈ I` generates a reduction exactly when its
//! valuation is the minimal valuation `v` of `I`: if `val(a) > v` then `a I^n`
//! misses the valuation `(n+1) v` attained in `I^{n+1}`. Candidates of larger
//! valuation are therefore rejected without searching.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;

use super::search_depth;
use crate::error::{Error, Result};
use crate::linalg::Ideal;
use crate::series::SeriesElement;

/// Where a reduction came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionSource {
    /// The listed generator of `I` with this index.
    Generator(usize),
    /// A random `GF(p)`-combination of the generators.
    Random,
    /// The supplied reduction with this index.
    Supplied(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCandidate {
    pub element: SeriesElement,
    pub reduction_number: u32,
    /// `I^{r+1} = a I^r` and `I^r ≠ a I^{r-1}` were both checked.
    pub verified: bool,
    pub source: ReductionSource,
}

/// Least `n <= r_bound` with `I^{n+1} = a I^n`, or `None` if `a` is not a
/// reduction of `I` within the bound.
///
/// Fails with a truncation error when some `n` that has to be examined
/// cannot be decided at the ambient's reporting degree.
pub fn reduction_number(ideal: &mut Ideal, a: &SeriesElement, r_bound: u32) -> Result<Option<u32>> {
    let amb = ideal.ambient().clone();
    let a = amb.ring().embed(a);
    let v = ideal.valuation();
    if a.valuation() != Some(v) {
        return Ok(None);
    }
    let c = amb.semigroup().conductor();
    let depth = search_depth(amb.limit(), v, c);
    if depth.is_none() || !amb.contains_vector(ideal.power(1), &amb.vector(&a)) {
        if depth.is_none() {
            return Err(Error::TruncationInsufficient(format!(
                "membership in I needs N >= {}",
                (v + c).saturating_sub(1)
            )));
        }
        return Ok(None);
    }
    for n in 0..=r_bound {
        if depth.is_some_and(|d| n > d) {
            return Err(Error::TruncationInsufficient(format!(
                "deciding I^{} = a I^{} needs N >= {}",
                n + 1,
                n,
                ((n + 1) * v + c).saturating_sub(1)
            )));
        }
        ideal.prepare(n as usize + 1);
        let ain = amb.mul_element(ideal.power(n as usize), &a);
        if &ain == ideal.power(n as usize + 1) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// A reduction of `I`: first every generator of minimal valuation, then
/// `attempts` random combinations of all generators.
pub fn find_reduction(
    ideal: &mut Ideal,
    attempts: u32,
    r_bound: u32,
    rng: &mut ChaCha8Rng,
) -> Result<ReductionCandidate> {
    let v = ideal.valuation();
    let gens: Vec<SeriesElement> = ideal.generators().to_vec();
    for (i, g) in gens.iter().enumerate() {
        if g.valuation() != Some(v) {
            continue;
        }
        if let Some(r) = reduction_number(ideal, g, r_bound)? {
            return Ok(ReductionCandidate {
                element: g.clone(),
                reduction_number: r,
                verified: true,
                source: ReductionSource::Generator(i),
            });
        }
    }
    for _ in 0..attempts {
        let a = random_combination(ideal, rng);
        if let Some(r) = reduction_number(ideal, &a, r_bound)? {
            return Ok(ReductionCandidate {
                element: a,
                reduction_number: r,
                verified: true,
                source: ReductionSource::Random,
            });
        }
    }
    Err(Error::NoReduction { bound: r_bound })
}

/// Verifies a user-supplied reduction.
pub fn verify_supplied(
    ideal: &mut Ideal,
    a: &SeriesElement,
    index: usize,
    r_bound: u32,
) -> Result<ReductionCandidate> {
    let a = ideal.ambient().ring().embed(a);
    match reduction_number(ideal, &a, r_bound)? {
        Some(r) => Ok(ReductionCandidate {
            element: a,
            reduction_number: r,
            verified: true,
            source: ReductionSource::Supplied(index),
        }),
        None => Err(Error::NotAReduction {
            element: a.to_string(),
            bound: r_bound,
        }),
    }
}

/// `count` verified reductions built from random combinations, each given
/// at most `attempts` tries.
pub fn random_reductions(
    ideal: &mut Ideal,
    count: usize,
    attempts: u32,
    r_bound: u32,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<ReductionCandidate>> {
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut found = None;
        for _ in 0..attempts.max(1) {
            let a = random_combination(ideal, rng);
            if let Some(r) = reduction_number(ideal, &a, r_bound)? {
                found = Some(ReductionCandidate {
                    element: a,
                    reduction_number: r,
                    verified: true,
                    source: ReductionSource::Random,
                });
                break;
            }
        }
        out.push(found.ok_or(Error::NoReduction { bound: r_bound })?);
    }
    Ok(out)
}

/// `Σ c_i g_i` with every `c_i` uniform in `GF(p)^*`.
pub fn random_combination(ideal: &Ideal, rng: &mut ChaCha8Rng) -> SeriesElement {
    let ring = ideal.ambient().ring();
    let p = ring.field().characteristic() as u64;
    let mut acc = ring.zero();
    for g in ideal.generators() {
        let c = if p == 2 { 1 } else { 1 + rng.next_u64() % (p - 1) };
        let term = ring.scalar_mul(ring.field().element(c as i64), g);
        acc = ring.add(&acc, &term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Ambient;
    use crate::semigroup::NumericalSemigroup;
    use crate::series::SeriesRing;
    use crate::PrimeField;
    use alloc::sync::Arc;
    use rand_core::SeedableRng;

    fn setup(gens: &[u32], ideal: &[&str], limit: u32) -> Ideal {
        let s = Arc::new(NumericalSemigroup::new(gens).unwrap());
        let ring = SeriesRing::new(s, PrimeField::new(32003).unwrap(), limit + 100);
        let amb = Ambient::new(ring, limit);
        let g: Vec<_> = ideal.iter().map(|t| amb.ring().parse(t).unwrap()).collect();
        Ideal::new(&amb, &g).unwrap()
    }

    #[test]
    fn example_reduction_numbers() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut i = setup(&[6, 11, 15, 31], &["t^6", "t^11", "t^31"], 150);
        let red = find_reduction(&mut i, 5, 50, &mut rng).unwrap();
        assert_eq!((red.reduction_number, red.source), (2, ReductionSource::Generator(0)));

        let mut i = setup(&[8, 15, 28, 50, 57], &["t^8", "t^15", "t^50", "t^57"], 200);
        let red = find_reduction(&mut i, 5, 50, &mut rng).unwrap();
        assert_eq!(red.reduction_number, 3);
        let alt = i.ambient().ring().parse("t^8 + t^57").unwrap();
        assert_eq!(reduction_number(&mut i, &alt, 50).unwrap(), Some(3));

        let mut i = setup(&[4, 5, 11], &["t^9"], 40);
        assert_eq!(find_reduction(&mut i, 5, 50, &mut rng).unwrap().reduction_number, 0);
    }

    #[test]
    fn non_reductions_and_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut i = setup(&[4, 5, 11], &["t^4", "t^5", "t^11"], 60);
        let t5 = i.ambient().ring().parse("t^5").unwrap();
        assert_eq!(reduction_number(&mut i, &t5, 50).unwrap(), None);
        assert!(matches!(
            verify_supplied(&mut i, &t5, 0, 50),
            Err(Error::NotAReduction { .. })
        ));
        // not in the ideal at all
        let t0 = i.ambient().ring().parse("t^4 + t^0").unwrap();
        assert_eq!(reduction_number(&mut i, &t0, 50).unwrap(), None);
        assert_eq!(
            find_reduction(&mut i, 3, 1, &mut rng),
            Err(Error::NoReduction { bound: 1 })
        );
    }

    #[test]
    fn small_truncation_is_reported() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut i = setup(&[8, 15, 28, 50, 57], &["t^8", "t^15", "t^50", "t^57"], 70);
        assert!(matches!(
            find_reduction(&mut i, 3, 50, &mut rng),
            Err(Error::TruncationInsufficient(_))
        ));
    }

    #[test]
    fn random_reductions_reach_minimal_valuation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut i = setup(&[6, 11, 15, 31], &["t^6", "t^11", "t^31"], 150);
        let reds = random_reductions(&mut i, 3, 5, 50, &mut rng).unwrap();
        assert_eq!(reds.len(), 3);
        for r in reds {
            assert_eq!(r.element.valuation(), Some(6));
            assert_eq!(r.reduction_number, 2);
        }
    }
}
