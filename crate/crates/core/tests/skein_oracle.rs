use cosmo_core::links::{
    braid_closure, conway_polynomial, invariants_from_diagram, pretzel_a3_closed_form, pretzel_diagram, pretzel_link,
    torus2_diagram,
};
use cosmo_core::seifert::{conway_from_seifert, seifert_torus2};
use cosmo_core::{BigInt, ConwayPoly, CrossingSign, SkeinOracle};
use proptest::prelude::*;

fn braid_word(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let g = (1..strands as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
    prop::collection::vec(g, 1..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn skein_relation_at_every_crossing(strands in 2usize..=4, word in braid_word(4, 12), pick in any::<prop::sample::Index>()) {
        let word: Vec<i32> = word.into_iter().filter(|g| g.unsigned_abs() < strands as u32).collect();
        prop_assume!(!word.is_empty());
        let d = braid_closure(strands, &word).unwrap();
        let idx = pick.index(d.crossing_count());
        let here = conway_polynomial(&d).unwrap();
        let switched = conway_polynomial(&d.switch_crossing(idx)).unwrap();
        let smoothed = conway_polynomial(&d.smooth_crossing(idx)).unwrap().mul_z();
        let expected = match d.crossings()[idx].sign {
            CrossingSign::Positive => &switched + &smoothed,
            CrossingSign::Negative => &switched - &smoothed,
        };
        prop_assert_eq!(here, expected);
    }

    #[test]
    fn memo_does_not_change_results(strands in 2usize..=3, word in braid_word(3, 10)) {
        let word: Vec<i32> = word.into_iter().filter(|g| g.unsigned_abs() < strands as u32).collect();
        prop_assume!(!word.is_empty());
        let d = braid_closure(strands, &word).unwrap();
        let with = SkeinOracle::new().conway(&d).unwrap();
        let without = SkeinOracle::new().with_memo(false).conway(&d).unwrap();
        prop_assert_eq!(with, without);
    }

    #[test]
    fn exponent_parity_and_knot_normalization(strands in 1usize..=4, word in prop::collection::vec(-3i32..=3, 0..=10)) {
        let word: Vec<i32> = word.into_iter().filter(|&g| g != 0 && g.unsigned_abs() < strands as u32).collect();
        let d = braid_closure(strands, &word).unwrap();
        let c = d.component_count() as u32;
        let p = conway_polynomial(&d).unwrap();
        for &e in p.coefficients().keys() {
            prop_assert!(e + 1 >= c && (e + 1 - c).is_multiple_of(2), "exponent {} with {} components", e, c);
        }
        if c == 1 {
            prop_assert_eq!(p.coefficient(0), BigInt::from(1));
        }
    }

    #[test]
    fn mirror_image_substitutes_minus_z(word in braid_word(3, 8)) {
        let d = braid_closure(3, &word).unwrap();
        let mirror: Vec<i32> = word.iter().map(|g| -g).collect();
        let m = braid_closure(3, &mirror).unwrap();
        prop_assert_eq!(conway_polynomial(&m).unwrap(), conway_polynomial(&d).unwrap().mirror_variable());
    }
}

#[test]
fn pretzel_a3_matches_closed_form() {
    let oracle = SkeinOracle::default();
    for a in [1, 2] {
        for b in [-2, -1, 1, 2] {
            let inv = invariants_from_diagram(&pretzel_diagram(a, b).unwrap(), &oracle).unwrap();
            assert_eq!(inv.a3_l, pretzel_a3_closed_form(a, b).unwrap(), "a={a} b={b}");
            assert_eq!(inv.a2_x, BigInt::from(0));
            assert_eq!(inv.a2_y, BigInt::from(a * (a + 1) / 2));
            assert_eq!(inv.lk, BigInt::from(0));
        }
    }
}

#[test]
fn torus_knots_agree_with_seifert_route() {
    for n in [3, 5, 7, 9] {
        let skein = conway_polynomial(&torus2_diagram(n).unwrap()).unwrap();
        let seifert = conway_from_seifert(&seifert_torus2(n).unwrap()).unwrap();
        assert_eq!(skein, seifert, "T(2,{n})");
    }
    assert_eq!(
        conway_from_seifert(&seifert_torus2(7).unwrap()).unwrap().coefficient(2),
        BigInt::from(6)
    );
}

#[test]
fn pretzel_knot_minus2_3_7() {
    // Alexander polynomial t^10 - t^9 + t^7 - t^6 + t^5 - t^4 + t^3 - t + 1, so Δ''(1) = 24
    let d = pretzel_link(&[-2, 3, 7]).unwrap();
    assert_eq!(d.component_count(), 1);
    let p = conway_polynomial(&d).unwrap();
    assert_eq!(p.degree(), Some(10));
    assert_eq!(p.coefficient(0), BigInt::from(1));
    assert_eq!(p.coefficient(2), BigInt::from(12));
    assert_eq!(cosmo_core::seifert::second_derivative_from_conway(&p).unwrap(), BigInt::from(24));
}

#[test]
fn figure_eight_braid() {
    let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
    assert_eq!(conway_polynomial(&d).unwrap(), ConwayPoly::from_dense(&[1, 0, -1]));
}
