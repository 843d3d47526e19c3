//! Randomized invariants, spanning field arithmetic, projective
//! normalization, bitset algebra, neighborhood bounds, certificate
//! round-trips, and the relaxation verifier.

use proptest::prelude::*;
use pgiso_core::bitset::BitSet;
use pgiso_core::bounds::{chain_lb, one_sided_bound};
use pgiso_core::cert::{Certificate, Verdict};
use pgiso_core::construct::{builtin_alpha_witness, witness_certificate};
use pgiso_core::field::{make_field, prime_power};
use pgiso_core::geometry::normalize;
use pgiso_core::graph::{IncidenceGraph, SplitSet};
use pgiso_core::relax;
use pgiso_core::Rat;

fn small_graph(q: u64) -> IncidenceGraph {
    IncidenceGraph::build(2, q).expect("small plane")
}

fn split_from_masks(v: usize, points: u64, hyps: u64) -> SplitSet {
    let mut x = SplitSet::empty(v);
    for i in 0..v.min(64) {
        if points >> i & 1 == 1 {
            x.points.insert(i);
        }
        if hyps >> i & 1 == 1 {
            x.hyps.insert(i);
        }
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_bound_holds_for_random_split_sets(
        q in prop_oneof![Just(2u64), Just(3), Just(4), Just(5)],
        points: u64,
        hyps: u64,
    ) {
        let g = small_graph(q);
        let v = g.v();
        let x = split_from_masks(v, points, hyps);
        prop_assume!(!x.is_empty() && x.len() <= v);
        let (chain, _) = chain_lb(&g.params()).unwrap();
        let ratio = g.iv_ratio(&x).unwrap();
        prop_assert!(ratio >= chain, "ratio {ratio} below chain {chain}");
    }

    #[test]
    fn one_sided_bound_holds_for_random_point_sets(
        q in prop_oneof![Just(2u64), Just(3), Just(4), Just(5), Just(7)],
        mask: u64,
    ) {
        let g = small_graph(q);
        let v = g.v();
        let set: Vec<usize> = (0..v.min(64)).filter(|i| mask >> i & 1 == 1).collect();
        prop_assume!(!set.is_empty());
        let mut nb = BitSet::new(v);
        for &i in &set {
            nb.union_assign(g.point_row(i));
        }
        let (strong, weak) = one_sided_bound(&g.params(), set.len() as u64).unwrap();
        prop_assert!(strong >= weak);
        let floor = (strong * Rat::from_integer(set.len() as i64)).ceil().to_integer();
        prop_assert!(nb.count() as i64 >= floor,
            "{} points reach only {} lines, bound {floor}", set.len(), nb.count());
    }

    #[test]
    fn witness_certificates_round_trip_and_verify(
        q in prop_oneof![Just(2u64), Just(3), Just(4)],
        mask: u64,
    ) {
        let g = small_graph(q);
        let v = g.v();
        let set: Vec<usize> = (0..v.min(64)).filter(|i| mask >> i & 1 == 1).collect();
        prop_assume!(!set.is_empty());
        let members = BitSet::from_indices(v, set.iter().copied());
        let witnessed = g.alpha_value(&members);
        let cert = witness_certificate(&g, &set, witnessed);
        let text = cert.to_json();
        let (reparsed, warnings) = Certificate::parse(&text).unwrap();
        prop_assert!(warnings.is_empty());
        prop_assert_eq!(&reparsed, &cert);
        match reparsed.verify().unwrap() {
            Verdict::Verified(report) => {
                prop_assert_eq!(report.set_size, set.len() as u64);
                prop_assert_eq!(report.witnessed_alpha, witnessed);
            }
            Verdict::Violated(w) => prop_assert!(false, "rejected: {}", w),
        }
    }

    #[test]
    fn field_laws_hold(
        q in prop_oneof![Just(2u64), Just(3), Just(4), Just(5), Just(7), Just(8), Just(9), Just(16), Just(25), Just(27)],
        a0: u64, b0: u64, c0: u64,
    ) {
        let (p, e) = prime_power(q).unwrap();
        let f = make_field(p, e).unwrap();
        let (a, b, c) = ((a0 % q) as u32, (b0 % q) as u32, (c0 % q) as u32);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            let inv = f.inv(a).unwrap();
            prop_assert_eq!(f.mul(a, inv), 1);
        }
        // Characteristic p: adding any element to itself p times is zero.
        let mut acc = 0u32;
        for _ in 0..p {
            acc = f.add(acc, a);
        }
        prop_assert_eq!(acc, 0);
    }

    #[test]
    fn normalization_is_scale_invariant(
        q in prop_oneof![Just(3u64), Just(4), Just(5), Just(9)],
        coords in proptest::collection::vec(0u64..32, 3),
        scale in 1u64..32,
    ) {
        let (p, e) = prime_power(q).unwrap();
        let f = make_field(p, e).unwrap();
        let reduced: Vec<u32> = coords.iter().map(|&x| (x % q) as u32).collect();
        let s = (scale % (q - 1)) as u32 + 1; // nonzero scalar
        prop_assume!(reduced.iter().any(|&x| x != 0));
        let scaled: Vec<u32> = reduced.iter().map(|&x| f.mul(x, s)).collect();
        let lhs = normalize(&f, &reduced).unwrap();
        let rhs = normalize(&f, &scaled).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bitset_algebra_is_consistent(
        width in 1usize..200,
        xs in proptest::collection::vec(0usize..200, 0..64),
        ys in proptest::collection::vec(0usize..200, 0..64),
    ) {
        let a = BitSet::from_indices(width, xs.into_iter().filter(|&i| i < width));
        let b = BitSet::from_indices(width, ys.into_iter().filter(|&i| i < width));
        let mut union = a.clone();
        union.union_assign(&b);
        let mut inter = a.clone();
        inter.intersect_assign(&b);
        prop_assert_eq!(union.count() + inter.count(), a.count() + b.count());
        prop_assert_eq!(inter.count(), a.intersection_count(&b));
        prop_assert_eq!(a.intersects(&b), inter.count() > 0);
        prop_assert_eq!(inter.first_common(&b).is_some(), !inter.is_empty());
        let mut diff = a.clone();
        diff.difference_assign(&b);
        prop_assert_eq!(diff.count() + inter.count(), a.count());
        // The recovered index list reproduces the set.
        let back = BitSet::from_indices(width, a.iter());
        prop_assert_eq!(back.lex_cmp(&a), std::cmp::Ordering::Equal);
    }

    #[test]
    fn tampered_catalogue_witnesses_never_verify(seed: u64) {
        let cert = builtin_alpha_witness(9).unwrap();
        let bad = cert.tamper(seed).unwrap();
        match bad.verify().unwrap() {
            Verdict::Violated(_) => {}
            Verdict::Verified(_) => prop_assert!(false, "tampering survived seed {}", seed),
        }
    }

    #[test]
    fn relaxation_solutions_always_re_verify(
        q in prop_oneof![Just(2u64), Just(3), Just(4), Just(5), Just(7), Just(8), Just(9)],
        alpha_frac in 0.05f64..0.6,
    ) {
        let v = pgiso_core::graph::DesignParams::of(2, q).v;
        let alpha = ((v as f64 * alpha_frac) as u64).max(1);
        match relax::solve(q, alpha) {
            Ok(sol) => {
                // The optimizer must satisfy every raw constraint. (The
                // program value only respects the 1 - alpha/v cap when
                // alpha is actually witnessed in the graph, so no cap
                // comparison is made for arbitrary alpha.)
                prop_assert!(relax::verify_solution(q, alpha, sol.optimizer).is_ok());
                prop_assert!(sol.minimum > Rat::new(0, 1));
            }
            Err(pgiso_core::Error::Infeasible { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error: {}", e),
        }
    }
}
