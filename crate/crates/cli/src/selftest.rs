use std::fmt;

use cosmo_core::arith::{dedekind_sum_fast, dedekind_sum_naive, dedekind_symbol_pq, symbol_reciprocity_rhs};
use cosmo_core::casson_walker::{casson_boyer_lines, casson_walker_link_surgery};
use cosmo_core::links::{conway_polynomial, invariants_from_diagram, pretzel_a3_closed_form, pretzel_diagram, torus2_diagram};
use cosmo_core::obstructions::{pretzel_analysis, purely_cosmetic_candidates_ihs};
use cosmo_core::seifert::{casson_gordon_tau, conway_from_seifert, levine_tristram_signature, seifert_torus2};
use cosmo_core::{BigInt, LinkSurgeryInvariants, Rational, SeifertMatrix, SkeinOracle, Slope, Verdict};
use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        write!(f, "{} passed, {} failed", self.passed, self.failed)
    }
}

type Outcome = Result<String, String>;
type Entry = (&'static str, fn() -> Outcome);

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn closed_form() -> Outcome {
    for p in 1..=500i64 {
        let s = dedekind_sum_fast(&big(1), &big(p)).map_err(err)?;
        if s != Rational::new((p - 1) * (p - 2), 12 * p).map_err(err)? {
            return Err(format!("s(1,{p}) = {s}"));
        }
    }
    Ok("p = 1..500".into())
}

fn reciprocity() -> Outcome {
    let mut n = 0;
    for p in (-97i64..=97).step_by(7) {
        for q in (-1009i64..=1009).step_by(53) {
            if p == 0 || q == 0 || p.gcd(&q) != 1 {
                continue;
            }
            let lhs = dedekind_symbol_pq(&big(p), &big(q)).map_err(err)? + dedekind_symbol_pq(&big(q), &big(p)).map_err(err)?;
            if lhs != symbol_reciprocity_rhs(&big(p), &big(q)).map_err(err)? {
                return Err(format!("reciprocity fails at ({p}, {q})"));
            }
            if dedekind_sum_fast(&big(p), &big(q)).map_err(err)? != dedekind_sum_naive(&big(p), &big(q)).map_err(err)? {
                return Err(format!("fast and naive differ at ({p}, {q})"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} coprime pairs"))
}

fn pretzel_a3() -> Outcome {
    let oracle = SkeinOracle::default();
    for a in [1, 2] {
        for b in [-2, -1, 1, 2] {
            let inv = invariants_from_diagram(&pretzel_diagram(a, b).map_err(err)?, &oracle).map_err(err)?;
            if inv.a3_l != pretzel_a3_closed_form(a, b).map_err(err)? {
                return Err(format!("a = {a}, b = {b}: skein a3 = {}", inv.a3_l));
            }
        }
    }
    Ok("a in {1, 2}, b in {-2, -1, 1, 2}".into())
}

fn torus_routes() -> Outcome {
    for n in [3, 5, 7, 9] {
        let skein = conway_polynomial(&torus2_diagram(n).map_err(err)?).map_err(err)?;
        let seifert = conway_from_seifert(&seifert_torus2(n).map_err(err)?).map_err(err)?;
        if skein != seifert {
            return Err(format!("T(2,{n}): {skein} vs {seifert}"));
        }
    }
    Ok("n = 3, 5, 7, 9".into())
}

fn split_link() -> Outcome {
    let mut n = 0;
    for a2 in -5i64..=5 {
        for p in -20i64..=20 {
            for q in [1, 2, 3, 7, 20] {
                if p == 0 || p.gcd(&q) != 1 {
                    continue;
                }
                let s = Slope::new(p, q).map_err(err)?;
                let link = casson_walker_link_surgery(&LinkSurgeryInvariants::new(a2, 0, 0, 0), &s, &Slope::integer(1))
                    .map_err(err)?
                    .lambda_w;
                let knot = casson_boyer_lines(&Rational::zero(), &big(2 * a2), &s).map_err(err)?;
                if link != knot * Rational::integer(2) {
                    return Err(format!("a2 = {a2}, slope {s}"));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} split links"))
}

fn ihs_candidates() -> Outcome {
    let c = purely_cosmetic_candidates_ihs();
    if c == [big(1), big(2)].into() {
        Ok("{1, 2}".into())
    } else {
        Err(format!("{c:?}"))
    }
}

fn pretzel_example() -> Outcome {
    let r = pretzel_analysis(1, 1, &Slope::integer(-1)).map_err(err)?;
    match (&r.discriminant, r.verdict) {
        (Some(d), Verdict::Obstructed) if *d == Rational::integer(-191) => Ok("discriminant -191, obstructed".into()),
        _ => Err(format!("discriminant {:?}, verdict {}", r.discriminant, r.verdict)),
    }
}

fn lens_tau() -> Outcome {
    for p in 1..=40i64 {
        for q in 1..=40i64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let tau = casson_gordon_tau(&SeifertMatrix::unknot(), &Slope::new(p, q).map_err(err)?).map_err(err)?;
            if tau != Rational::integer(-4 * p) * dedekind_sum_fast(&big(q), &big(p)).map_err(err)? {
                return Err(format!("unknot, {p}/{q}"));
            }
        }
    }
    let trefoil = seifert_torus2(3).map_err(err)?;
    let tau = casson_gordon_tau(&trefoil, &Slope::integer(2)).map_err(err)?;
    let sigma = levine_tristram_signature(&trefoil, Complex64::new(-1.0, 0.0)).map_err(err)?;
    if tau != Rational::integer(2) || sigma != -2 {
        return Err(format!("trefoil: tau = {tau}, signature {sigma}"));
    }
    Ok("unknot p, q <= 40; trefoil tau(2/1) = 2".into())
}

/// Runs every check and collects the results.
pub fn selftest() -> SelftestReport {
    let table: [Entry; 8] = [
        ("closed form of s(1,p)", closed_form),
        ("Dedekind reciprocity and fast/naive agreement", reciprocity),
        ("pretzel a3 closed form vs skein oracle", pretzel_a3),
        ("skein vs Seifert Conway polynomials", torus_routes),
        ("link formula on split links vs knot formula", split_link),
        ("integral homology sphere candidates", ihs_candidates),
        ("pretzel P(3,2,2) at slope -1", pretzel_example),
        ("Casson-Gordon formula on lens spaces", lens_tau),
    ];
    let checks: Vec<Check> = table
        .into_iter()
        .map(|(name, f)| {
            let (pass, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Check { name, pass, detail }
        })
        .collect();
    let passed = checks.iter().filter(|c| c.pass).count();
    SelftestReport { failed: checks.len() - passed, passed, checks }
}
