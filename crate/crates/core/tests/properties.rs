use nsgap::arith::{divisors, gcd, gcd_all};
use nsgap::criteria::{ed_apery_criterion, ed_direct, ed_polynomial};
use nsgap::residue::{
    ed_via_polynomial, is_evenly_distributed, multiset_congruent, reduce_exponents, residue_counts,
};
use nsgap::verify::Oracle;
use nsgap::{IntMultiset, NumericalSemigroup};
use proptest::prelude::*;

fn multiset() -> impl Strategy<Value = IntMultiset> {
    prop::collection::vec(0i64..200, 0..40).prop_map(IntMultiset::new)
}

fn generators() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..30, 1..5).prop_filter("gcd 1", |g| gcd_all(g) == 1)
}

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    generators().prop_map(|g| NumericalSemigroup::from_generators(&g).unwrap())
}

/// A semigroup together with some nonzero element of it.
fn semigroup_and_element() -> impl Strategy<Value = (NumericalSemigroup, u64)> {
    (semigroup(), 1u64..60).prop_map(|(s, n)| {
        let a = (n..).find(|&a| s.contains(a as i64)).unwrap();
        (s, a)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn polynomial_route_agrees(a in multiset(), m in 1u64..=64) {
        prop_assert_eq!(ed_via_polynomial(&a, m).unwrap(), is_evenly_distributed(&a, m));
    }

    #[test]
    fn set_and_polynomial_congruence(a in multiset(), b in multiset(), m in 1u64..=20) {
        prop_assert_eq!(
            multiset_congruent(&a, &b, m),
            reduce_exponents(&a, m).unwrap() == reduce_exponents(&b, m).unwrap()
        );
    }

    #[test]
    fn shifted_copies_are_congruent(a in multiset(), m in 1u64..=20, k in 0i64..5) {
        let shifted: IntMultiset = a.entries().iter().map(|&x| x + k * m as i64).collect();
        prop_assert!(multiset_congruent(&a, &shifted, m));
    }

    #[test]
    fn divisor_closure(a in multiset(), m in 1u64..=64) {
        if is_evenly_distributed(&a, m) {
            for d in divisors(m) {
                prop_assert!(is_evenly_distributed(&a, d), "m={} d={}", m, d);
            }
        }
    }

    #[test]
    fn cardinality_law(a in multiset(), m in 1u64..=64) {
        if is_evenly_distributed(&a, m) {
            let n = a.len() as u64;
            prop_assert_eq!(n % m, 0);
            prop_assert!(residue_counts(&a, m).counts().iter().all(|&c| c == n / m));
        }
    }

    #[test]
    fn congruence_is_an_equivalence(a in multiset(), b in multiset(), c in multiset(), m in 1u64..=10) {
        prop_assert!(multiset_congruent(&a, &a, m));
        prop_assert_eq!(multiset_congruent(&a, &b, m), multiset_congruent(&b, &a, m));
        if multiset_congruent(&a, &b, m) && multiset_congruent(&b, &c, m) {
            prop_assert!(multiset_congruent(&a, &c, m));
        }
    }

    #[test]
    fn union_respects_congruence(a in multiset(), b in multiset(), c in multiset(), m in 1u64..=10) {
        if multiset_congruent(&a, &b, m) {
            prop_assert!(multiset_congruent(&a.union(&c), &b.union(&c), m));
        }
    }

    #[test]
    fn from_generators_is_idempotent(g in generators()) {
        let s = NumericalSemigroup::from_generators(&g).unwrap();
        let again = NumericalSemigroup::from_generators(s.generators()).unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert_eq!(again.generators(), s.generators());
    }

    #[test]
    fn gaps_match_oracle(g in generators()) {
        let s = NumericalSemigroup::from_generators(&g).unwrap();
        let oracle = Oracle::new(&g);
        prop_assert_eq!(s.gaps(), oracle.gaps());
        prop_assert_eq!(s.frobenius(), oracle.gaps().last().map_or(-1, |&f| f as i64));
    }

    #[test]
    fn apery_invariants((s, a) in semigroup_and_element()) {
        let ap = s.apery_set(a).unwrap();
        prop_assert_eq!(ap.len() as u64, a);
        prop_assert!(ap.elements().contains(&0));
        let mut residues: Vec<u64> = ap.elements().iter().map(|w| w % a).collect();
        residues.sort_unstable();
        prop_assert_eq!(residues, (0..a).collect::<Vec<_>>());
        for &w in ap.elements() {
            prop_assert!(s.contains(w as i64));
            prop_assert!(w < a || !s.contains(w as i64 - a as i64));
        }
    }

    #[test]
    fn gaps_from_apery((s, a) in semigroup_and_element()) {
        let ap = s.apery_set(a).unwrap();
        let mut derived: Vec<u64> = ap
            .elements()
            .iter()
            .flat_map(|&w| (1..=w / a).map(move |k| w - k * a))
            .filter(|&n| n > 0)
            .collect();
        derived.sort_unstable();
        prop_assert_eq!(derived.as_slice(), s.gaps());
    }

    #[test]
    fn two_base_consistency(s in semigroup(), m in 1u64..=12, x in 1u64..40, y in 1u64..40) {
        let members: Vec<u64> = (x..x + 80)
            .chain(y..y + 80)
            .filter(|&n| s.contains(n as i64) && gcd(n, m) == 1)
            .collect();
        let (a, b) = (members[0], *members.last().unwrap());
        let congruent = |a: u64| {
            let ap = s.apery_set(a).unwrap().to_multiset();
            multiset_congruent(&ap, &IntMultiset::interval(0, a as i64 - 1), m)
        };
        prop_assert_eq!(congruent(a), congruent(b), "a={} b={}", a, b);
    }

    #[test]
    fn decision_routes_agree(s in semigroup(), m in 1u64..=30) {
        let direct = ed_direct(&s, m).evenly_distributed;
        prop_assert_eq!(ed_apery_criterion(&s, m).evenly_distributed, direct);
        prop_assert_eq!(ed_polynomial(&s, m).evenly_distributed, direct);
        prop_assert_eq!(Oracle::for_semigroup(&s).evenly_distributed(m), direct);
    }
}

#[test]
fn polynomial_route_exhaustive_small_sets() {
    // every subset of [0, 11]
    for mask in 0u32..1 << 12 {
        let a: IntMultiset = (0..12).filter(|i| mask >> i & 1 == 1).collect();
        for m in 1..=13 {
            assert_eq!(
                ed_via_polynomial(&a, m).unwrap(),
                is_evenly_distributed(&a, m),
                "mask {mask:#b}, m {m}"
            );
        }
    }
}
