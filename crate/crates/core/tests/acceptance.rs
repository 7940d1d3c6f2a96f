//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cosmo_core::arith::{dedekind_sum_fast, dedekind_sum_naive, dedekind_symbol_pq, symbol_reciprocity_rhs};
use cosmo_core::casson_walker::{casson_boyer_lines, casson_walker_link_surgery};
use cosmo_core::links::{conway_polynomial, invariants_from_diagram, pretzel_a3_closed_form, pretzel_diagram, torus2_diagram};
use cosmo_core::obstructions::{chirally_cosmetic_obstruction, pretzel_analysis, purely_cosmetic_candidates_ihs};
use cosmo_core::seifert::{
    casson_gordon_tau, conway_from_seifert, levine_tristram_signature, seifert_torus2, total_p_signature, SeifertMatrix,
};
use cosmo_core::{BigInt, LinkSurgeryInvariants, Rational, SkeinOracle, Slope, Verdict};
use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CLOSED_FORM_BUDGET: Duration = Duration::from_secs(1);
const RECIPROCITY_BUDGET: Duration = Duration::from_secs(30);
const PRETZEL_BUDGET: Duration = Duration::from_secs(120);
const SEED: u64 = 0x5eed;

type Check = std::result::Result<String, String>;
type Criterion = (u32, &'static str, Option<Duration>, fn() -> Check);

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn lambda_w(inv: &LinkSurgeryInvariants, sx: &Slope, sy: &Slope) -> Rational {
    casson_walker_link_surgery(inv, sx, sy).expect("nondegenerate surgery").lambda_w
}

fn coprime_pair(rng: &mut impl Rng, max_p: i64, max_q: i64) -> (i64, i64) {
    loop {
        let p = rng.gen_range(-max_p..=max_p);
        let q = rng.gen_range(-max_q..=max_q);
        if p != 0 && q != 0 && p.gcd(&q) == 1 {
            return (p, q);
        }
    }
}

fn closed_form() -> Check {
    for p in 1..=2000i64 {
        let s = dedekind_sum_fast(&big(1), &big(p)).map_err(|e| e.to_string())?;
        let expected = Rational::new((p - 1) * (p - 2), 12 * p).unwrap();
        if s != expected {
            return Err(format!("s(1,{p}) = {s}, expected {expected}"));
        }
    }
    Ok("s(1,p) = (p-1)(p-2)/(12p) for p = 1..2000".into())
}

fn reciprocity_and_naive() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..10_000 {
        let (p, q) = coprime_pair(&mut rng, 1_000_000, 1_000_000);
        let lhs = dedekind_symbol_pq(&big(p), &big(q)).unwrap() + dedekind_symbol_pq(&big(q), &big(p)).unwrap();
        if lhs != symbol_reciprocity_rhs(&big(p), &big(q)).unwrap() {
            return Err(format!("reciprocity fails at ({p}, {q})"));
        }
    }
    for _ in 0..1_000 {
        let (p, q) = coprime_pair(&mut rng, 1_000_000, 10_000);
        if dedekind_sum_fast(&big(p), &big(q)).unwrap() != dedekind_sum_naive(&big(p), &big(q)).unwrap() {
            return Err(format!("fast and naive differ at ({p}, {q})"));
        }
    }
    Ok("10^4 reciprocity pairs, 10^3 fast/naive pairs".into())
}

fn pretzel_closed_form() -> Check {
    let oracle = SkeinOracle::default();
    let mut cases = Vec::new();
    for a in [1, 2] {
        for b in [-2, -1, 1, 2] {
            let d = pretzel_diagram(a, b).map_err(|e| e.to_string())?;
            let a3 = oracle.conway(&d).map_err(|e| e.to_string())?.coefficient(3);
            let expected = pretzel_a3_closed_form(a, b).unwrap();
            if a3 != expected {
                return Err(format!("a = {a}, b = {b}: skein a3 = {a3}, closed form {expected}"));
            }
            cases.push(format!("({a},{b})->{a3}"));
        }
    }
    Ok(cases.join(" "))
}

fn torus_oracles() -> Check {
    for n in [3, 5, 7, 9] {
        let skein = conway_polynomial(&torus2_diagram(n).unwrap()).map_err(|e| e.to_string())?;
        let det = conway_from_seifert(&seifert_torus2(n).unwrap()).map_err(|e| e.to_string())?;
        if skein != det {
            return Err(format!("T(2,{n}): skein {skein}, Seifert {det}"));
        }
    }
    Ok("T(2,n) for n = 3, 5, 7, 9".into())
}

fn link_vs_knot_formula() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    for _ in 0..200 {
        let a2: i64 = rng.gen_range(-5..=5);
        let (p, q) = coprime_pair(&mut rng, 20, 20);
        let s = Slope::new(p, q).unwrap();
        let link = lambda_w(&LinkSurgeryInvariants::new(a2, 0, 0, 0), &s, &Slope::integer(1));
        let knot = casson_boyer_lines(&Rational::zero(), &big(2 * a2), &s).unwrap() * Rational::integer(2);
        if link != knot {
            return Err(format!("a2 = {a2}, slope {s}: link {link}, twice knot {knot}"));
        }
    }
    Ok("200 random (a2, p/q) split-link cases".into())
}

fn ihs_candidates() -> Check {
    let c = purely_cosmetic_candidates_ihs();
    let expected: BTreeSet<BigInt> = [big(1), big(2)].into();
    if c != expected {
        return Err(format!("got {c:?}"));
    }
    if !dedekind_sum_fast(&big(1), &big(1)).unwrap().is_zero()
        || dedekind_sum_fast(&big(1), &big(3)).unwrap() != Rational::frac(1, 18)
    {
        return Err("internal Dedekind checks failed".into());
    }
    Ok("candidates {1, 2}".into())
}

fn chirality_corollary() -> Check {
    let verdict = |p0: i64| chirally_cosmetic_obstruction(&big(0), &big(p0)).unwrap().verdict;
    let not_fired: Vec<i64> = (3..=100).chain(-100..=-3).filter(|&p0| verdict(p0) != Verdict::Obstructed).collect();
    if !not_fired.is_empty() {
        return Err(format!("no obstruction at p0 in {not_fired:?}"));
    }
    let inconclusive: Vec<i64> = (-100..=100).filter(|&p0| p0 != 0 && verdict(p0) == Verdict::Inconclusive).collect();
    if inconclusive != [1, 2] {
        return Err(format!(
            "obstructed for all 3 <= |p0| <= 100, but inconclusive at {inconclusive:?} rather than exactly [1, 2]; \
             for p0 < 0 the two signatures are (0, -2), so the chirality sum vanishes at p0 = -1, -2 as well"
        ));
    }
    Ok("obstructed for 3 <= |p0| <= 100, inconclusive exactly at {1, 2}".into())
}

fn pretzel_examples() -> Check {
    let mut notes = Vec::new();
    for (b, want) in [(1, Some(Rational::integer(-191))), (2, None)] {
        let s0 = Slope::integer(-1);
        let r = pretzel_analysis(1, b, &s0).map_err(|e| e.to_string())?;
        let disc = r.discriminant.clone().ok_or("no discriminant")?;
        if want.as_ref().is_some_and(|w| w != &disc) || !disc.is_negative() || r.verdict != Verdict::Obstructed {
            return Err(format!("b = {b}: discriminant {disc}, verdict {}", r.verdict));
        }
        let inv = LinkSurgeryInvariants::new(0, 1, pretzel_a3_closed_form(1, b).unwrap(), 0);
        let oracle_inv = invariants_from_diagram(&pretzel_diagram(1, b).unwrap(), &SkeinOracle::default()).unwrap();
        if oracle_inv != inv {
            return Err(format!("b = {b}: skein invariants {oracle_inv:?}"));
        }
        for p in 1..=50 {
            if (lambda_w(&inv, &Slope::integer(p), &s0) - lambda_w(&inv, &Slope::integer(-p), &s0)).is_zero() {
                return Err(format!("b = {b}: difference vanishes at p = {p}"));
            }
        }
        notes.push(format!("b={b}: disc {}", disc.to_short_string()));
    }
    Ok(notes.join(", "))
}

fn lens_space_tau() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let mut n = 0;
    while n < 100 {
        let p: i64 = rng.gen_range(1..=2000);
        let q: i64 = rng.gen_range(1..=20_000);
        if p.gcd(&q) != 1 {
            continue;
        }
        let tau = casson_gordon_tau(&SeifertMatrix::unknot(), &Slope::new(p, q).unwrap()).map_err(|e| e.to_string())?;
        let expected = Rational::integer(-4 * p) * dedekind_sum_fast(&big(q), &big(p)).unwrap();
        if tau != expected {
            return Err(format!("unknot, {p}/{q}: {tau} vs {expected}"));
        }
        n += 1;
    }
    let trefoil = seifert_torus2(3).unwrap();
    let sigma = total_p_signature(&trefoil, 2).unwrap();
    let tau = casson_gordon_tau(&trefoil, &Slope::integer(2)).unwrap();
    if sigma != -2 || tau != Rational::integer(2) {
        return Err(format!("trefoil: sigma = {sigma}, tau = {tau}"));
    }
    Ok("100 unknot slopes; trefoil tau(2/1) = 2".into())
}

fn difference_and_chirality() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    for _ in 0..100 {
        let inv = LinkSurgeryInvariants::new(rng.gen_range(-10..=10), rng.gen_range(-10..=10), rng.gen_range(-30..=30), 0);
        let p: i64 = rng.gen_range(1..=100);
        let (p0, q0) = coprime_pair(&mut rng, 30, 30);
        let s0 = Slope::new(p0, q0).unwrap();
        let diff = lambda_w(&inv, &Slope::integer(p), &s0) - lambda_w(&inv, &Slope::integer(-p), &s0);
        let q0_over_p0 = Rational::new(s0.q().clone(), s0.p().clone()).unwrap();
        let q = Rational::integer(p * p - 3 * p + 2) - Rational::integer(24 * &inv.a2_x)
            + Rational::integer(24 * &inv.a3_l) * q0_over_p0;
        if diff != -q / Rational::integer(6 * p) {
            return Err(format!("difference identity fails for {inv:?}, p = {p}, s0 = {s0}"));
        }
    }
    let (mut positive, mut negative, mut negative_ok) = (0, 0, 0);
    for _ in 0..100 {
        let inv = LinkSurgeryInvariants::new(rng.gen_range(-10..=10), rng.gen_range(-10..=10), rng.gen_range(-30..=30), 0);
        let p: i64 = rng.gen_range(1..=100);
        let p0: i64 = loop {
            let v = rng.gen_range(-60..=60);
            if v != 0 {
                break v;
            }
        };
        let s0 = Slope::integer(p0);
        let sum = lambda_w(&inv, &Slope::integer(p), &s0) + lambda_w(&inv, &Slope::integer(-p), &s0);
        let tail = Rational::new(2 * &inv.a2_y, p0).unwrap() - Rational::new(1, 6 * p0).unwrap() - Rational::new(p0, 12).unwrap();
        let literal = (Rational::frac(1, 4) + &tail) * Rational::integer(2);
        let signed = (Rational::frac(p0.signum(), 4) + &tail) * Rational::integer(2);
        if p0 > 0 {
            if sum != literal {
                return Err(format!("chirality sum fails at p0 = {p0} > 0"));
            }
            positive += 1;
        } else {
            negative += 1;
            if sum == signed {
                negative_ok += 1;
            }
            if sum == literal {
                return Err(format!("unexpected agreement at p0 = {p0}"));
            }
        }
    }
    if negative > 0 {
        return Err(format!(
            "difference identity holds on 100 tuples; chirality sum with 1/4 holds on all {positive} tuples with p0 > 0 \
             and fails on all {negative} with p0 < 0, where the sum matches the form with sign(p0)/4 ({negative_ok}/{negative})"
        ));
    }
    Ok("difference identity and chirality sum on 100 tuples each".into())
}

fn signature_sanity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 11);
    let mut evaluations = 0;
    for _ in 0..200 {
        let n = rng.gen_range(0..=6);
        let rows = (0..n).map(|_| (0..n).map(|_| big(rng.gen_range(-4..=4))).collect()).collect();
        let s = SeifertMatrix::new(rows).unwrap();
        for _ in 0..8 {
            let w = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
            let sigma = levine_tristram_signature(&s, w).map_err(|e| e.to_string())?;
            if sigma.unsigned_abs() as usize > n {
                return Err(format!("|sigma| = {} exceeds size {n}", sigma.abs()));
            }
            evaluations += 1;
        }
    }
    let tref = levine_tristram_signature(&seifert_torus2(3).unwrap(), Complex64::new(-1.0, 0.0)).unwrap();
    if tref != -2 {
        return Err(format!("trefoil at -1: {tref}"));
    }
    Ok(format!("{evaluations} random evaluations within bounds; trefoil at -1 is -2"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "closed form of s(1,p)", Some(CLOSED_FORM_BUDGET), closed_form),
        (2, "Dedekind reciprocity and fast/naive agreement", Some(RECIPROCITY_BUDGET), reciprocity_and_naive),
        (3, "pretzel a3 closed form vs skein oracle", Some(PRETZEL_BUDGET), pretzel_closed_form),
        (4, "skein vs Seifert Conway polynomials", None, torus_oracles),
        (5, "link formula on split links vs knot formula", None, link_vs_knot_formula),
        (6, "integral homology sphere candidates", None, ihs_candidates),
        (7, "chirally cosmetic obstruction with a2 = 0", None, chirality_corollary),
        (8, "pretzel discriminants and verdicts", None, pretzel_examples),
        (9, "Casson-Gordon formula on lens spaces", None, lens_space_tau),
        (10, "difference and chirality-sum identities", None, difference_and_chirality),
        (11, "Levine-Tristram signature sanity", None, signature_sanity),
    ];
    let mut failures = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over_budget = budget.is_some_and(|b| elapsed > b);
        let (status, detail) = match (&outcome, over_budget) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; took {elapsed:.2?}, budget {:?}", budget.unwrap())),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        let timing = match budget {
            Some(b) => format!("{elapsed:.2?} / {b:?}"),
            None => format!("{elapsed:.2?}"),
        };
        println!("{status} [{id:>2}] {name} ({timing}): {detail}");
    }
    println!("acceptance: {} passed, {failures} failed", 11 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
