use std::collections::BTreeSet;

use cosmo_core::casson_walker::casson_walker_link_surgery;
use cosmo_core::links::{invariants_from_diagram, pretzel_diagram};
use cosmo_core::obstructions::{chirally_cosmetic_obstruction, pretzel_analysis, purely_cosmetic_quadratic};
use cosmo_core::{BigInt, LinkSurgeryInvariants, Rational, SkeinOracle, Slope, Verdict};
use proptest::prelude::*;

fn lambda_w(inv: &LinkSurgeryInvariants, p: i64, s0: &Slope) -> Rational {
    casson_walker_link_surgery(inv, &Slope::integer(p), s0).unwrap().lambda_w
}

fn slope() -> impl Strategy<Value = Slope> {
    ((-30i64..=30).prop_filter("p0 != 0", |p| *p != 0), 1i64..=30).prop_map(|(p, q)| Slope::reduced(p, q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn candidates_are_exactly_the_zero_differences(
        a2x in -6i64..=6, a2y in -6i64..=6, a3 in -12i64..=12, s0 in slope(),
    ) {
        let inv = LinkSurgeryInvariants::new(a2x, a2y, a3, 0);
        let report = purely_cosmetic_quadratic(&inv, &s0).unwrap();
        let candidates = report.candidates.clone().unwrap();
        prop_assert!(candidates.len() <= 2);
        prop_assert_eq!(report.verdict == Verdict::Obstructed, candidates.is_empty());
        for p in 1..=50i64 {
            let diff = lambda_w(&inv, p, &s0) - lambda_w(&inv, -p, &s0);
            prop_assert_eq!(diff.is_zero(), candidates.contains(&BigInt::from(p)), "p = {}", p);
        }
    }
}

#[test]
fn small_constant_terms_produce_candidates() {
    // a2x chosen so that Q(p) = p^2 - 3p + 2 - 24 a2x has integer roots for some a2x
    let mut seen = BTreeSet::new();
    for a2x in -3i64..=20 {
        let inv = LinkSurgeryInvariants::new(a2x, 0, 0, 0);
        let r = purely_cosmetic_quadratic(&inv, &Slope::integer(1)).unwrap();
        for p in r.candidates.unwrap() {
            let p: i64 = p.try_into().unwrap();
            assert!((lambda_w(&inv, p, &Slope::integer(1)) - lambda_w(&inv, -p, &Slope::integer(1))).is_zero());
            seen.insert((a2x, p));
        }
    }
    assert!(seen.contains(&(0, 1)) && seen.contains(&(0, 2)));
    // p^2 - 3p - 238 = (p - 17)(p + 14)
    assert!(seen.contains(&(10, 17)));
}

#[test]
fn chirality_verdict_matches_the_sum() {
    for a2 in -5i64..=30 {
        for p0 in (-60i64..=60).filter(|&v| v != 0) {
            let report = chirally_cosmetic_obstruction(&BigInt::from(a2), &BigInt::from(p0)).unwrap();
            let inv = LinkSurgeryInvariants::new(3, a2, -7, 0);
            let s0 = Slope::integer(p0);
            let all_zero = (1..=10).all(|p| (lambda_w(&inv, p, &s0) + lambda_w(&inv, -p, &s0)).is_zero());
            let any_zero = (1..=10).any(|p| (lambda_w(&inv, p, &s0) + lambda_w(&inv, -p, &s0)).is_zero());
            assert_eq!(all_zero, any_zero, "the sum should not depend on p");
            assert_eq!(report.verdict == Verdict::Inconclusive, all_zero, "a2 = {a2}, p0 = {p0}");
        }
    }
}

#[test]
fn pretzel_reports_use_skein_consistent_a3() {
    let oracle = SkeinOracle::default();
    for a in [1, 2] {
        for b in [-2, -1, 1, 2] {
            let report = pretzel_analysis(a, b, &Slope::integer(-1)).unwrap();
            let a3 = invariants_from_diagram(&pretzel_diagram(a, b).unwrap(), &oracle).unwrap().a3_l;
            let reported = report.evidence.iter().find(|e| e.name == "a3(L)").unwrap();
            assert_eq!(reported.value, Rational::integer(a3));
        }
    }
}

#[test]
fn pretzel_section_examples() {
    for (b, slope) in [(1, -1), (2, -1)] {
        let s0 = Slope::integer(slope);
        let report = pretzel_analysis(1, b, &s0).unwrap();
        assert_eq!(report.verdict, Verdict::Obstructed);
        assert!(report.discriminant.as_ref().unwrap().is_negative());
        let inv = LinkSurgeryInvariants::new(0, 1, cosmo_core::links::pretzel_a3_closed_form(1, b).unwrap(), 0);
        for p in 1..=50 {
            assert!(!(lambda_w(&inv, p, &s0) - lambda_w(&inv, -p, &s0)).is_zero());
        }
    }
    let r = pretzel_analysis(1, 1, &Slope::integer(-1)).unwrap();
    assert_eq!(r.discriminant, Some(Rational::integer(-191)));
}

#[test]
fn negative_pretzel_discriminants_for_large_b() {
    // with q0/p0 < 0 the cubic term dominates once b is large
    for a in 1..=4 {
        for b in 1..=12 {
            let r = pretzel_analysis(a, b, &Slope::integer(-1)).unwrap();
            assert!(r.discriminant.unwrap().is_negative(), "a = {a}, b = {b}");
            assert_eq!(r.verdict, Verdict::Obstructed);
        }
    }
}

#[test]
fn json_is_deterministic() {
    let render = || serde_json::to_string(&pretzel_analysis(2, -1, &Slope::new(3, 5).unwrap()).unwrap()).unwrap();
    assert_eq!(render(), render());
}
