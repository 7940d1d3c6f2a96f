//! Necessary conditions for cosmetic surgeries.
//!
//! Every test here is one-sided: [`Verdict::Obstructed`] means the cosmetic
//! surgery is ruled out, [`Verdict::Inconclusive`] means the test says nothing.
//! None of them ever certifies that a cosmetic pair exists.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{dedekind_sum_fast, Rational, Slope};
use crate::casson_walker::{signature_2x2, LinkingMatrix2};
use crate::links::{pretzel_a3_closed_form, BigIntJson, LinkSurgeryInvariants};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Obstructed,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "obstructed",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// A named exact quantity the verdict rests on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub name: String,
    pub value: Rational,
}

impl Evidence {
    pub fn new(name: &str, value: impl Into<Rational>) -> Self {
        Evidence { name: name.to_string(), value: value.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    /// Positive integers `p` that survive the test, when the test enumerates any.
    #[serde(serialize_with = "serialize_candidates")]
    pub candidates: Option<BTreeSet<BigInt>>,
    /// Discriminant of the quadratic whose roots are the candidates, when there is one.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_short")]
    pub discriminant: Option<Rational>,
    pub evidence: Vec<Evidence>,
    pub narrative: String,
}

fn serialize_candidates<S: Serializer>(c: &Option<BTreeSet<BigInt>>, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    match c {
        None => serializer.serialize_none(),
        Some(set) => serializer.collect_seq(set.iter().map(BigIntJson)),
    }
}

fn serialize_short<S: Serializer>(r: &Option<Rational>, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        None => serializer.serialize_none(),
        Some(r) => serializer.serialize_str(&r.to_short_string()),
    }
}

impl ObstructionReport {
    fn from_value(obstructed: bool, evidence: Vec<Evidence>, narrative: String) -> Self {
        ObstructionReport {
            verdict: if obstructed { Verdict::Obstructed } else { Verdict::Inconclusive },
            candidates: None,
            discriminant: None,
            evidence,
            narrative,
        }
    }

    fn from_candidates(candidates: BTreeSet<BigInt>, evidence: Vec<Evidence>, narrative: String) -> Self {
        ObstructionReport {
            verdict: if candidates.is_empty() { Verdict::Obstructed } else { Verdict::Inconclusive },
            candidates: Some(candidates),
            discriminant: None,
            evidence,
            narrative,
        }
    }

    pub fn is_obstructed(&self) -> bool {
        self.verdict == Verdict::Obstructed
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows: Vec<(String, String)> = vec![("verdict".into(), self.verdict.to_string())];
        if let Some(c) = &self.candidates {
            let list: Vec<String> = c.iter().map(BigInt::to_string).collect();
            rows.push(("candidates".into(), format!("{{{}}}", list.join(", "))));
        }
        if let Some(d) = &self.discriminant {
            rows.push(("discriminant".into(), d.to_short_string()));
        }
        rows.extend(self.evidence.iter().map(|e| (e.name.clone(), e.value.to_short_string())));
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in rows {
            writeln!(f, "{k:<width$}  {v}")?;
        }
        write!(f, "{}", self.narrative)
    }
}

/// Rational roots of `a x^2 + b x + c` with integer coefficients, `a != 0`.
fn rational_roots(a: &BigInt, b: &BigInt, c: &BigInt) -> Vec<Rational> {
    let disc = b * b - BigInt::from(4) * a * c;
    if disc.is_negative() {
        return Vec::new();
    }
    let r = disc.sqrt();
    if &r * &r != disc {
        return Vec::new();
    }
    let two_a = BigInt::from(2) * a;
    let mut roots: Vec<Rational> = [-b + &r, -b - &r]
        .into_iter()
        .map(|n| Rational::new(n, two_a.clone()).expect("a is nonzero"))
        .collect();
    roots.dedup();
    roots
}

/// Positive integer roots of the monic quadratic `x^2 + b x + c`, checked by substitution.
fn positive_integer_roots(b: &Rational, c: &Rational) -> Result<BTreeSet<BigInt>> {
    let scale = b.denom() * c.denom();
    let (bi, ci) = ((b * Rational::integer(scale.clone())).to_integer(), (c * Rational::integer(scale.clone())).to_integer());
    let (bi, ci) = bi.zip(ci).ok_or_else(|| Error::Invariant("scaling failed to clear denominators".into()))?;
    let mut out = BTreeSet::new();
    for root in rational_roots(&scale, &bi, &ci) {
        if let Some(n) = root.to_integer().filter(|n| n.is_positive()) {
            let x = Rational::integer(n.clone());
            if !(&x * &x + b * &x + c).is_zero() {
                return Err(Error::Invariant(format!("{n} is not a root of the quadratic")));
            }
            out.insert(n);
        }
    }
    if out.len() > 2 {
        return Err(Error::Invariant("a quadratic has more than two roots".into()));
    }
    Ok(out)
}

/// Slopes `p` for which `2 s(1, p) = 0`.
///
/// `12 p s(1, p)` is a polynomial of degree 2 in `p` for `p >= 1`; it is
/// recovered by interpolation from Dedekind sums, checked on further values,
/// and its positive integer roots are returned.
pub fn purely_cosmetic_candidates_ihs() -> BTreeSet<BigInt> {
    let f = |p: i64| -> Rational {
        dedekind_sum_fast(&BigInt::from(1), &BigInt::from(p)).expect("p is nonzero") * Rational::integer(12 * p)
    };
    let (y3, y4, y5) = (f(3), f(4), f(5));
    // Newton form on nodes 3, 4, 5, expanded to a p^2 + b p + c
    let d1 = &y4 - &y3;
    let d2 = (&y5 - &y4 - &d1) * Rational::frac(1, 2);
    let a = d2.clone();
    let b = &d1 - &d2 * Rational::integer(7);
    let c = &y3 - &d1 * Rational::integer(3) + &d2 * Rational::integer(12);
    for p in 1..=64i64 {
        let x = Rational::integer(p);
        assert_eq!(&a * &x * &x + &b * &x + &c, f(p), "12 p s(1,p) is not quadratic at p = {p}");
    }
    let a_inv = a.recip().expect("leading coefficient is nonzero");
    let roots = positive_integer_roots(&(&b * &a_inv), &(&c * &a_inv)).expect("exact roots");
    for p in &roots {
        assert!(dedekind_sum_fast(&BigInt::from(1), p).expect("p is nonzero").is_zero());
    }
    roots
}

/// Report form of [`purely_cosmetic_candidates_ihs`] for a knot with `Δ''(1) = 0`.
pub fn purely_cosmetic_report_ihs() -> ObstructionReport {
    let candidates = purely_cosmetic_candidates_ihs();
    let s = |p: i64| dedekind_sum_fast(&BigInt::from(1), &BigInt::from(p)).expect("p is nonzero");
    let list: Vec<String> = candidates.iter().map(BigInt::to_string).collect();
    ObstructionReport::from_candidates(
        candidates,
        vec![Evidence::new("s(1,1)", s(1)), Evidence::new("s(1,2)", s(2)), Evidence::new("s(1,3)", s(3))],
        format!(
            "For a knot in an integral homology sphere, integral purely cosmetic surgeries can only occur at slopes ±p with p in {{{}}}.",
            list.join(", ")
        ),
    )
}

/// Knots in an integral homology sphere with `Δ''(1) ≠ 0` admit no purely cosmetic surgeries.
pub fn purely_cosmetic_obstruction_bl(delta2: &BigInt) -> ObstructionReport {
    let obstructed = !delta2.is_zero();
    ObstructionReport::from_value(
        obstructed,
        vec![Evidence::new("delta''(1)", delta2.clone())],
        if obstructed {
            "Δ''(1) is nonzero, so the knot admits no purely cosmetic surgeries.".into()
        } else {
            "Δ''(1) vanishes; this test is silent.".into()
        },
    )
}

/// Knots in an integral homology sphere `Σ` with `λ_w(Σ) ≠ 0` admit no integral chirally cosmetic surgeries.
pub fn chirally_cosmetic_obstruction_ihs(lambda_w_sigma: &Rational) -> ObstructionReport {
    let obstructed = !lambda_w_sigma.is_zero();
    ObstructionReport::from_value(
        obstructed,
        vec![Evidence::new("lambda_w(sigma)", lambda_w_sigma.clone())],
        if obstructed {
            "λ_w of the ambient homology sphere is nonzero, so there are no integral chirally cosmetic surgeries.".into()
        } else {
            "λ_w of the ambient homology sphere vanishes; this test is silent.".into()
        },
    )
}

struct Quadratic {
    sigma_gap: i32,
    linear: Rational,
    constant: Rational,
    discriminant: Rational,
    candidates: BTreeSet<BigInt>,
}

/// `Q(p) = p^2 - (3(ς-ς')/2) p + (2 - 24 a_2(K_x) + 24 (q_0/p_0) a_3(L))`.
fn cosmetic_quadratic(inv: &LinkSurgeryInvariants, s0: &Slope) -> Result<Quadratic> {
    if !inv.lk.is_zero() {
        return Err(Error::NonzeroLinking(inv.lk.clone()));
    }
    if s0.p().is_zero() {
        return Err(Error::InvalidParameter("slope on the second component needs p0 != 0".into()));
    }
    // for p > 0 the signs of both determinants are fixed, so p = 1 represents every p
    let sig = |p: i64| signature_2x2(&LinkingMatrix2::new(Rational::integer(p), s0.value(), BigInt::zero()));
    let sigma_gap = sig(1)? - sig(-1)?;
    let linear = Rational::new(-3 * sigma_gap, 2)?;
    let q0_over_p0 = Rational::new(s0.q().clone(), s0.p().clone())?;
    let constant = Rational::integer(2 - 24 * &inv.a2_x) + Rational::integer(24 * &inv.a3_l) * q0_over_p0;
    let discriminant = &linear * &linear - Rational::integer(4) * &constant;
    let candidates = positive_integer_roots(&linear, &constant)?;
    Ok(Quadratic { sigma_gap, linear, constant, discriminant, candidates })
}

/// Integral purely cosmetic surgeries `L(±p, p_0/q_0)` on a linking-number-zero link.
///
/// The difference of the two Casson–Walker invariants is `-Q(p)/(6p)`, so a
/// purely cosmetic pair forces `Q(p) = 0`; the surviving `p` are returned.
pub fn purely_cosmetic_quadratic(inv: &LinkSurgeryInvariants, s0: &Slope) -> Result<ObstructionReport> {
    let q = cosmetic_quadratic(inv, s0)?;
    let list: Vec<String> = q.candidates.iter().map(BigInt::to_string).collect();
    let narrative = if q.candidates.is_empty() {
        format!("Q(p) has no positive integer root, so no surgeries L(p, {s0}) and L(-p, {s0}) are purely cosmetic.")
    } else {
        format!("Purely cosmetic pairs L(p, {s0}), L(-p, {s0}) are possible only for p in {{{}}}.", list.join(", "))
    };
    let mut report = ObstructionReport::from_candidates(
        q.candidates,
        vec![
            Evidence::new("sigma - sigma'", i64::from(q.sigma_gap)),
            Evidence::new("linear coefficient", q.linear),
            Evidence::new("constant term", q.constant),
        ],
        narrative,
    );
    report.discriminant = Some(q.discriminant);
    Ok(report)
}

/// `L(p/q, 1/q_0)` and `L(p/q', 1/q_0)` are never purely cosmetic when `a_2(K) - q_0 a_3(L) ≠ 0`.
pub fn purely_cosmetic_obstruction_link(a2k: &BigInt, q0: &BigInt, a3l: &BigInt) -> Result<ObstructionReport> {
    if q0.is_zero() {
        return Err(Error::InvalidParameter("q0 must be nonzero".into()));
    }
    let value = a2k - q0 * a3l;
    let obstructed = !value.is_zero();
    Ok(ObstructionReport::from_value(
        obstructed,
        vec![Evidence::new("a2(K) - q0 a3(L)", value)],
        if obstructed {
            format!("a2(K) - q0 a3(L) is nonzero, so the surgeries L(p/q, 1/{q0}) admit no purely cosmetic pair.")
        } else {
            "a2(K) - q0 a3(L) vanishes; this test is silent.".into()
        },
    ))
}

/// Integral chirally cosmetic pairs `L(p, p_0)`, `L(-p, p_0)` on a link whose second component is the unknot.
///
/// The sum of the two Casson–Walker invariants is `(|p_0|^2 - 3|p_0| + 2 - 24 a_2(K_0)) / (6 p_0)`
/// up to sign, independent of `p`; the pair is ruled out when it is nonzero.
pub fn chirally_cosmetic_obstruction(a2k0: &BigInt, p0: &BigInt) -> Result<ObstructionReport> {
    if p0.is_zero() {
        return Err(Error::InvalidParameter("p0 must be nonzero".into()));
    }
    let m = p0.abs();
    let value: BigInt = &m * &m - 3 * &m + 2 - 24 * a2k0;
    let obstructed = !value.is_zero();
    Ok(ObstructionReport::from_value(
        obstructed,
        vec![
            Evidence::new("|p0|^2 - 3|p0| + 2 - 24 a2(K0)", value),
            Evidence::new("96 a2(K0) + 1", 96 * a2k0 + 1),
        ],
        if obstructed {
            format!("No integral chirally cosmetic surgeries L(p, {p0}), L(-p, {p0}).")
        } else {
            format!("|p0| = {m} is a root of x^2 - 3x + 2 - 24 a2(K0); this test is silent.")
        },
    ))
}

/// Purely cosmetic test for the pretzel link `P(2a+1, 2b, 2b)` with slope `s0` on the torus-knot component.
pub fn pretzel_analysis(a: i64, b: i64, s0: &Slope) -> Result<ObstructionReport> {
    let a3 = pretzel_a3_closed_form(a, b)?;
    let a2_torus = BigInt::from(a) * (a + 1) / 2;
    let inv = LinkSurgeryInvariants::new(0, a2_torus, a3.clone(), 0);
    let q = cosmetic_quadratic(&inv, s0)?;

    let gap = Rational::integer(q.sigma_gap);
    let (ab, bb) = (BigInt::from(a), BigInt::from(b));
    let cubic = &bb * (2 * &bb * &bb + 6 * &ab * &bb + 3 * &bb + 1);
    let eq8 = Rational::frac(9, 4) * &gap * &gap - Rational::integer(8)
        + Rational::integer(16 * cubic) * Rational::new(s0.q().clone(), s0.p().clone())?;
    if eq8 != q.discriminant {
        return Err(Error::Invariant(format!("pretzel discriminant {eq8} disagrees with {}", q.discriminant)));
    }

    let mut report = purely_cosmetic_quadratic(&inv, s0)?;
    report.evidence.insert(0, Evidence::new("a3(L)", a3));
    report.narrative = if report.is_obstructed() {
        let why = if eq8.is_negative() { "negative" } else { "not the square of a rational giving a positive integer root" };
        format!("P({}, {}, {}): the discriminant is {why}, so the link admits no integral purely cosmetic surgeries with slope {s0} on the torus-knot component.", 2 * a + 1, 2 * b, 2 * b)
    } else {
        format!("P({}, {}, {}): {}", 2 * a + 1, 2 * b, 2 * b, report.narrative)
    };
    Ok(report)
}
