//! Surgery formulas for the Casson and Casson–Walker invariants.
//!
//! [`casson_boyer_lines`] handles `p/q`-surgery on a knot in an integral
//! homology sphere. [`casson_walker_link_surgery`] handles surgery on both
//! components of a two-component link in `S^3`; the formula there is linear
//! in `λ_w` with coefficient `D/2`, so it is solved by exact division and
//! needs `D ≠ 0`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{dedekind_sum_fast, dedekind_symbol, Rational, Slope};
use crate::links::{v3, LinkSurgeryInvariants};
use crate::{Error, Result};

/// The symmetric linking matrix `[[p_x/q_x, ℓ], [ℓ, p_y/q_y]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix2 {
    xx: Rational,
    yy: Rational,
    xy: BigInt,
    det: Rational,
}

impl LinkingMatrix2 {
    pub fn new(xx: Rational, yy: Rational, xy: BigInt) -> Self {
        let det = &xx * &yy - Rational::integer(&xy * &xy);
        LinkingMatrix2 { xx, yy, xy, det }
    }

    pub fn xx(&self) -> &Rational {
        &self.xx
    }

    pub fn yy(&self) -> &Rational {
        &self.yy
    }

    pub fn xy(&self) -> &BigInt {
        &self.xy
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn trace(&self) -> Rational {
        &self.xx + &self.yy
    }
}

pub fn linking_matrix(lk: &BigInt, sx: &Slope, sy: &Slope) -> LinkingMatrix2 {
    LinkingMatrix2::new(sx.value(), sy.value(), lk.clone())
}

/// Signature of a nondegenerate 2x2 symmetric matrix, decided from its determinant and trace.
pub fn signature_2x2(a: &LinkingMatrix2) -> Result<i32> {
    let d = a.det();
    if d.is_zero() {
        return Err(Error::NotRationalHomologySphere);
    }
    if d.is_negative() {
        return Ok(0);
    }
    // D > 0 forces both diagonal entries to share a sign, so the trace is nonzero
    Ok(if a.trace().is_positive() { 2 } else { -2 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryResult {
    /// Casson–Walker invariant.
    pub lambda_w: Rational,
    /// Determinant of the linking matrix.
    #[serde(rename = "D")]
    pub d: Rational,
    /// Signature of the linking matrix.
    pub sigma: i32,
    /// Casson normalization, `lambda_w / 2`.
    pub lambda: Rational,
}

/// `λ_w` of the surgery `L(p_x/q_x, p_y/q_y)` on a two-component link in `S^3`.
pub fn casson_walker_link_surgery(inv: &LinkSurgeryInvariants, sx: &Slope, sy: &Slope) -> Result<SurgeryResult> {
    let a = linking_matrix(&inv.lk, sx, sy);
    let sigma = signature_2x2(&a)?;
    let d = a.det().clone();
    let (px, qx) = (Rational::integer(sx.p().clone()), Rational::integer(sx.q().clone()));
    let (py, qy) = (Rational::integer(sy.p().clone()), Rational::integer(sy.q().clone()));
    let rx = sx.value();
    let ry = sy.value();
    let l2 = Rational::integer(&inv.lk * &inv.lk);
    let c24 = Rational::integer(24);

    let side = |a2_other: &BigInt, r: &Rational, p: &Rational, q: &Rational, q_other: &Rational| -> Rational {
        Rational::integer(a2_other.clone()) * r - r / &c24 - p / (&c24 * q * q_other * q_other) + r * &l2 / &c24
    };
    let rhs = side(&inv.a2_x, &ry, &py, &qy, &qx)
        + side(&inv.a2_y, &rx, &px, &qx, &qy)
        + Rational::integer(2) * v3(inv)
        + &d / &c24 * (dedekind_symbol(sx)? - &rx + dedekind_symbol(sy)? - &ry);

    let lambda = rhs / &d + Rational::frac(sigma as i64, 8);
    Ok(SurgeryResult { lambda_w: lambda_w_from_lambda(&lambda), d, sigma, lambda })
}

/// `λ(K(p/q)) = λ(Σ) + (q/p) Δ''(1)/2 - (sign(p)/2) s(q, p)`.
pub fn casson_boyer_lines(lambda_sigma: &Rational, delta2: &BigInt, s: &Slope) -> Result<Rational> {
    let (p, q) = (s.p(), s.q());
    if p.is_zero() {
        return Err(Error::OutOfRange("Boyer-Lines formula needs p != 0".into()));
    }
    let sign = Rational::frac(if p.is_positive() { 1 } else { -1 }, 2);
    Ok(lambda_sigma + Rational::new(q.clone(), p.clone())? * Rational::new(delta2.clone(), 2)?
        - sign * dedekind_sum_fast(q, p)?)
}

/// `λ_w = 2λ`.
pub fn lambda_w_from_lambda(lambda: &Rational) -> Rational {
    lambda * Rational::integer(2)
}
