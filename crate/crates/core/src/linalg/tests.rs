use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::series::SeriesRing;
use proptest::prelude::*;

fn ambient(gens: &[u32], limit: u32) -> Ambient {
    let s = Arc::new(NumericalSemigroup::new(gens).unwrap());
    let f = PrimeField::new(32003).unwrap();
    Ambient::new(SeriesRing::new(s, f, limit + 40), limit)
}

fn el(amb: &Ambient, text: &str) -> SeriesElement {
    amb.ring().parse(text).unwrap()
}

fn els(amb: &Ambient, texts: &[&str]) -> Vec<SeriesElement> {
    texts.iter().map(|t| el(amb, t)).collect()
}

// Dense rank over GF(p) of the given coordinate vectors, independent of the
// tail representation.
fn dense_rank(f: PrimeField, width: usize, vectors: &[SparseVec]) -> usize {
    let mut m: Vec<Vec<u32>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![0u32; width];
            for &(e, c) in v {
                if (e as usize) < width {
                    row[e as usize] = c;
                }
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&i| m[i][col] != 0) else { continue };
        m.swap(rank, p);
        let inv = f.inv(m[rank][col]);
        for i in 0..m.len() {
            if i != rank && m[i][col] != 0 {
                let c = f.mul(m[i][col], inv);
                let pivot = m[rank].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot) {
                    *x = f.sub_mul(*x, c, y);
                }
            }
        }
        rank += 1;
    }
    rank
}

// Brute-force span: every g * t^s with s in S, truncated at the limit.
fn brute_span(amb: &Ambient, gens: &[SeriesElement]) -> Vec<SparseVec> {
    let ring = amb.ring();
    let mut out = Vec::new();
    for g in gens {
        for s in amb.semigroup().monomials_up_to(amb.limit()) {
            let v = amb.vector(&ring.mul(g, &ring.monomial(s).unwrap()));
            if !v.is_empty() {
                out.push(v);
            }
        }
    }
    out
}

fn all_vectors(amb: &Ambient, u: &Subspace) -> Vec<SparseVec> {
    amb.basis_below(u, amb.limit() + 1)
}

#[test]
fn principal_span_in_two_three() {
    let amb = ambient(&[2, 3], 6);
    let u = amb.span_ideal(&els(&amb, &["t^2"])).unwrap();
    assert_eq!(u.pivot_exponents(amb.semigroup()), vec![2, 4, 5, 6]);
    assert!(!amb.contains_vector(&u, &[(3, 1)]));
}

#[test]
fn example_one_ideal_misses_fifteen() {
    let amb = ambient(&[6, 11, 15, 31], 80);
    let gens = els(&amb, &["t^6", "t^11", "t^31"]);
    let u = amb.span_ideal(&gens).unwrap();
    let brute = brute_span(&amb, &gens);
    let width = amb.limit() as usize + 1;
    assert_eq!(amb.dim(&u) as usize, dense_rank(amb.field(), width, &brute));
    assert!(!amb.contains_vector(&u, &[(15, 1)]));
    assert!(amb.contains_vector(&u, &[(17, 1)]));
    for s in amb.semigroup().monomials_up_to(amb.limit()) {
        let expected = s != 0 && s != 15;
        assert_eq!(amb.contains_vector(&u, &[(s, 1)]), expected, "t^{s}");
    }
}

#[test]
fn unit_ideal_is_everything() {
    let amb = ambient(&[4, 5, 11], 30);
    let u = amb.span_ideal(&els(&amb, &["t^0"])).unwrap();
    assert_eq!(u, amb.whole());
    assert_eq!(amb.dim(&u), amb.semigroup().count_between(0, 30));
    let z = amb.ring().zero();
    assert_eq!(amb.span_ideal(&[z]), Err(Error::ZeroIdeal));
}

#[test]
fn square_of_example_one() {
    let amb = ambient(&[6, 11, 15, 31], 120);
    let gens = els(&amb, &["t^6", "t^11", "t^31"]);
    let mut i = Ideal::new(&amb, &gens).unwrap();
    i.prepare(2);
    let sq = els(&amb, &["t^12", "t^17", "t^22", "t^37", "t^42", "t^62"]);
    assert_eq!(i.power(2), &amb.span_ideal(&sq).unwrap());
    assert_eq!(i.mu(1), 3);
    assert_eq!(i.mu(2), 3);
    assert_eq!(i.power(0), &amb.whole());
}

#[test]
fn principal_powers() {
    let amb = ambient(&[6, 11, 15, 31], 100);
    let mut i = Ideal::new(&amb, &els(&amb, &["t^11"])).unwrap();
    i.prepare(3);
    let p = i.power(3).pivot_exponents(amb.semigroup());
    let expected: Vec<u32> = amb
        .semigroup()
        .monomials_up_to(100)
        .into_iter()
        .filter(|&s| s >= 33 && amb.semigroup().contains(s - 33))
        .collect();
    assert_eq!(p, expected);
}

#[test]
fn maximal_ideal_products() {
    let amb = ambient(&[6, 11, 15, 31], 90);
    assert_eq!(amb.mul_maximal(&amb.whole()), amb.maximal_ideal());
    let t6 = amb.span_ideal(&els(&amb, &["t^6"])).unwrap();
    let m6 = amb.mul_maximal(&t6);
    let expected: Vec<u32> = amb
        .semigroup()
        .monomials_up_to(90)
        .into_iter()
        .filter(|&s| s > 6 && amb.semigroup().contains(s - 6) && s != 6)
        .collect();
    assert_eq!(m6.pivot_exponents(amb.semigroup()), expected);
}

#[test]
fn example_one_length_identities() {
    let amb = ambient(&[6, 11, 15, 31], 120);
    let gens = els(&amb, &["t^6", "t^11", "t^31"]);
    let a = el(&amb, "t^6");
    let mut i = Ideal::new(&amb, &gens).unwrap();
    i.prepare(2);
    assert_eq!(amb.quotient_length(i.power(1), i.maximal_product(1)).unwrap(), 3);
    // λ(I²/(m I² + aI)) = 1
    let ai = amb.mul_element(i.power(1), &a);
    let denom = amb.sum(i.maximal_product(2), &ai);
    assert_eq!(amb.quotient_length(i.power(2), &denom).unwrap(), 1);
    // λ((aI ∩ m I²)/a m I) = 1
    let num = amb.intersect(&ai, i.maximal_product(2));
    let ami = amb.mul_element(i.maximal_product(1), &a);
    assert_eq!(amb.quotient_length(&num, &ami).unwrap(), 1);
    assert_eq!(amb.quotient_length(&ai, &ai).unwrap(), 0);
    assert!(amb.quotient_length(&ami, &num).is_err());
}

#[test]
fn example_two_torsion_piece() {
    let amb = ambient(&[8, 15, 28, 50, 57], 160);
    let gens = els(&amb, &["t^8", "t^15", "t^50", "t^57"]);
    let a = el(&amb, "t^8");
    let mut i = Ideal::new(&amb, &gens).unwrap();
    i.prepare(3);
    let col = amb.colon_power(i.maximal_product(3), &a, 2);
    let t1 = amb.intersect(i.power(1), &col);
    assert_eq!(amb.quotient_length(&t1, i.maximal_product(1)).unwrap(), 2);
}

#[test]
fn colon_basics() {
    let amb = ambient(&[4, 5, 11], 60);
    let gens = els(&amb, &["t^4", "t^5", "t^11"]);
    let a = el(&amb, "t^4");
    let mut i = Ideal::new(&amb, &gens).unwrap();
    i.prepare(5);
    // (m I^l : a^l) = m, and (m I^{k+l} : a^l) = m I^k beyond the reduction number
    for l in 1..=2 {
        assert_eq!(amb.colon_power(i.maximal_product(l), &a, l as u32), amb.maximal_ideal());
        let c = amb.colon_power(i.maximal_product(3 + l), &a, l as u32);
        assert_eq!(&c, i.maximal_product(3));
    }
    let one = el(&amb, "t^0");
    assert_eq!(&amb.colon_element(i.power(2), &one), i.power(2));
    assert_eq!(&amb.colon_ideal(i.power(2), &[one]), i.power(2));
}

#[test]
fn colon_matches_brute_force() {
    let amb = ambient(&[5, 7, 9], 70);
    let gens = els(&amb, &["t^7 + 3*t^9", "t^10 - t^12"]);
    let m = amb.span_ideal(&gens).unwrap();
    let b = el(&amb, "t^5 + 2*t^7");
    let c = amb.colon_element(&m, &b);
    let ring = amb.ring();
    for s in amb.semigroup().monomials_up_to(amb.limit()) {
        let x = ring.monomial(s).unwrap();
        let inside = amb.contains_vector(&m, &amb.vector(&ring.mul(&b, &x)));
        assert_eq!(inside, amb.contains_vector(&c, &[(s, 1)]), "t^{s}");
    }
    for v in all_vectors(&amb, &c) {
        let x = ring.from_terms(&v.iter().map(|&(e, c)| (e, c as i64)).collect::<Vec<_>>()).unwrap();
        assert!(amb.contains_vector(&m, &amb.vector(&ring.mul(&b, &x))));
    }
}

#[test]
fn lattice_trivialities() {
    let amb = ambient(&[6, 11, 15, 31], 90);
    let u = amb.span_ideal(&els(&amb, &["t^11 + t^12", "t^31"])).unwrap();
    assert_eq!(amb.intersect(&u, &u), u);
    assert_eq!(amb.sum(&u, &amb.zero()), u);
    assert!(amb.equal(&amb.intersect(&u, &amb.whole()), &u));
    assert!(amb.contains(&amb.whole(), &u));
    assert!(!amb.contains(&u, &amb.whole()));
}

fn arb_elements() -> impl Strategy<Value = Vec<Vec<(u32, i64)>>> {
    prop::collection::vec(prop::collection::vec((0u32..40, -3i64..4), 1..4), 1..4)
}

fn build(amb: &Ambient, raw: &[Vec<(u32, i64)>]) -> Vec<SeriesElement> {
    let s = amb.semigroup();
    raw.iter()
        .map(|terms| {
            let terms: Vec<(u32, i64)> = terms
                .iter()
                .map(|&(e, c)| (e + s.conductor(), c))
                .chain(core::iter::once((s.multiplicity() + terms[0].0 % 7, 1)))
                .filter(|t| s.contains(t.0))
                .collect();
            amb.ring().from_terms(&terms).unwrap()
        })
        .filter(|g| !g.is_zero())
        .collect()
}

proptest! {
    #[test]
    fn modular_law(xs in arb_elements(), ys in arb_elements()) {
        let amb = ambient(&[5, 7, 9], 60);
        let (gx, gy) = (build(&amb, &xs), build(&amb, &ys));
        prop_assume!(!gx.is_empty() && !gy.is_empty());
        let u = amb.span_ideal(&gx).unwrap();
        let v = amb.span_ideal(&gy).unwrap();
        let s = amb.sum(&u, &v);
        let i = amb.intersect(&u, &v);
        prop_assert_eq!(amb.dim(&s) + amb.dim(&i), amb.dim(&u) + amb.dim(&v));
        prop_assert!(amb.contains(&u, &i) && amb.contains(&v, &i));
        prop_assert!(amb.contains(&s, &u) && amb.contains(&s, &v));
    }

    #[test]
    fn canonical_under_permutation(xs in arb_elements(), seed in 0usize..24) {
        let amb = ambient(&[4, 5, 11], 50);
        let mut g = build(&amb, &xs);
        prop_assume!(!g.is_empty());
        let u = amb.span_ideal(&g).unwrap();
        let n = g.len();
        g.rotate_left(seed % n);
        if seed % 2 == 1 {
            g.reverse();
        }
        prop_assert_eq!(amb.span_ideal(&g).unwrap(), u);
    }

    #[test]
    fn span_matches_dense_rank(xs in arb_elements()) {
        let amb = ambient(&[6, 11, 15, 31], 70);
        let g = build(&amb, &xs);
        prop_assume!(!g.is_empty());
        let u = amb.span_ideal(&g).unwrap();
        let brute = brute_span(&amb, &g);
        let width = amb.limit() as usize + 1;
        prop_assert_eq!(amb.dim(&u) as usize, dense_rank(amb.field(), width, &brute));
        for v in &brute {
            prop_assert!(amb.contains_vector(&u, v));
        }
    }

    #[test]
    fn colon_ideal_ignores_generator_order(xs in arb_elements(), ys in arb_elements()) {
        let amb = ambient(&[5, 7, 9], 60);
        let (gx, mut gy) = (build(&amb, &xs), build(&amb, &ys));
        prop_assume!(!gx.is_empty() && !gy.is_empty());
        let m = amb.span_ideal(&gx).unwrap();
        let c = amb.colon_ideal(&m, &gy);
        gy.reverse();
        prop_assert_eq!(amb.colon_ideal(&m, &gy), c.clone());
        prop_assert!(amb.contains(&c, &m));
    }
}
