use std::sync::Arc;

use fibercone_core::invariants::{compute_tables, hilbert_data, Decomposition};
use fibercone_core::oracle::{build_chain, cross_check, f_via_ranks};
use fibercone_core::series::SeriesRing;
use fibercone_core::{Ambient, Ideal, NumericalSemigroup, PrimeField};

fn example_two(limit: u32) -> (Ideal, fibercone_core::SeriesElement) {
    let s = Arc::new(NumericalSemigroup::new(&[8, 15, 28, 50, 57]).unwrap());
    let ring = SeriesRing::new(s, PrimeField::new(32003).unwrap(), limit + 4 * 57);
    let gens: Vec<_> = ["t^8", "t^15", "t^50", "t^57"].iter().map(|g| ring.parse(g).unwrap()).collect();
    let a = gens[0].clone();
    let ideal = Ideal::new(&Ambient::new(ring, limit), &gens).unwrap();
    (ideal, a)
}

#[test]
fn rank_route_matches_colon_route() {
    let (mut ideal, a) = example_two(105);
    let (tables, _) = compute_tables(&mut ideal, &a, 3).unwrap();
    let hilbert = hilbert_data(&tables, &Decomposition::from_tables(&tables)).unwrap();
    let chain = build_chain(&mut ideal, &a, 6).unwrap();
    assert_eq!(f_via_ranks(&chain, 3, 1, 2), Some(2));
    assert_eq!(f_via_ranks(&chain, 3, 0, 1), None);
    assert!(cross_check(&chain, &tables, &hilbert).passed);
}

#[test]
fn perturbed_chain_is_caught() {
    let (mut ideal, a) = example_two(105);
    let (tables, _) = compute_tables(&mut ideal, &a, 3).unwrap();
    let hilbert = hilbert_data(&tables, &Decomposition::from_tables(&tables)).unwrap();
    let mut chain = build_chain(&mut ideal, &a, 6).unwrap();
    // t^50 maps to zero in I^2/mI^2 and nothing hits t^30; linking the two
    // raises the rank of I/mI -> I^2/mI^2
    chain.perturb(1, 2, 2);
    let check = cross_check(&chain, &tables, &hilbert);
    assert!(!check.passed);
    assert!(check.divergences.iter().any(|d| d.starts_with("f(1,1)")), "{:?}", check.divergences);
}
