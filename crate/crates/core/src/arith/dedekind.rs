//! Sawtooth function, Dedekind sums and Dedekind symbols.
//!
//! The Dedekind sum is taken literally as
//! `s(p, q) = sum_{k=1}^{|q|-1} ((k/q)) ((kp/q))`. Both sawtooth factors flip
//! sign with `q`, so the sum is even in the modulus: `s(p, -q) = s(p, q)`.
//! All sign dependence on the modulus is carried by the symbol
//! `S(p/q) = 12 sign(q) s(p, q)`, which makes the reciprocity law
//! `S(p/q) + S(q/p) = p/q + q/p + 1/(pq) - 3 sign(pq)` hold for every coprime
//! pair of nonzero integers.
//!
//! Note that this evenness disagrees with the identity `s(1, -p) = -s(1, p)`
//! that appears in some published arguments; the literal sum is implemented
//! here and the discrepancy is left to the symbol.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rational, Slope};
use crate::{Error, Result};

/// `((x)) = x - floor(x) - 1/2` for non-integral `x`.
///
/// Integers are rejected instead of returning `-1/2`.
pub fn sawtooth(x: &Rational) -> Result<Rational> {
    if x.is_integer() {
        return Err(Error::SawtoothAtInteger(x.to_string()));
    }
    Ok(x - Rational::integer(x.floor()) - Rational::frac(1, 2))
}

fn check_pair(p: &BigInt, q: &BigInt) -> Result<()> {
    if q.is_zero() {
        return Err(Error::ZeroModulus);
    }
    if !p.gcd(q).is_one() {
        return Err(Error::NotCoprime { p: p.clone(), q: q.clone() });
    }
    Ok(())
}

/// Dedekind sum by direct summation over `k = 1..|q|-1`; `O(|q|)` terms.
///
/// Each sawtooth value `((n/q))` equals `(2 (n mod q) - q) / (2q)` with a
/// floored remainder, so the terms are accumulated as integers over the
/// common denominator `4q^2`.
pub fn dedekind_sum_naive(p: &BigInt, q: &BigInt) -> Result<Rational> {
    check_pair(p, q)?;
    let numer = match (p.to_i128(), q.to_i64()) {
        (Some(p), Some(q)) => BigInt::from(naive_numer_small(p, q as i128)),
        _ => naive_numer_big(p, q),
    };
    Rational::new(numer, 4 * q * q)
}

fn naive_numer_small(p: i128, q: i128) -> i128 {
    let p = p.mod_floor(&q);
    (1..q.abs())
        .map(|k| {
            let r1 = k.mod_floor(&q);
            let r2 = (k * p).mod_floor(&q);
            debug_assert!(r2 != 0);
            (2 * r1 - q) * (2 * r2 - q)
        })
        .sum()
}

fn naive_numer_big(p: &BigInt, q: &BigInt) -> BigInt {
    let p = p.mod_floor(q);
    let mut acc = BigInt::zero();
    let mut k = BigInt::one();
    let end = q.abs();
    while k < end {
        let r1 = k.mod_floor(q);
        let r2 = (&k * &p).mod_floor(q);
        acc += (2 * r1 - q) * (2 * r2 - q);
        k += 1;
    }
    acc
}

/// Dedekind sum in `O(log |q|)` steps via the reciprocity law
/// `s(a, b) + s(b, a) = (a/b + b/a + 1/(ab)) / 12 - 1/4` for coprime `a, b > 0`.
pub fn dedekind_sum_fast(p: &BigInt, q: &BigInt) -> Result<Rational> {
    check_pair(p, q)?;
    let mut b = q.abs();
    let mut a = p.mod_floor(&b);
    let mut acc = Rational::zero();
    let mut negate = false;
    let quarter = Rational::frac(1, 4);
    // invariant: the answer is acc + (-1)^negate * s(a, b), 0 <= a < b
    while !b.is_one() {
        let term = Rational::new(&a * &a + &b * &b + 1u32, 12u32 * &a * &b)? - &quarter;
        if negate {
            acc -= term;
        } else {
            acc += term;
        }
        let r = b.mod_floor(&a);
        b = a;
        a = r;
        negate = !negate;
    }
    Ok(acc)
}

/// `S(p/q) = 12 sign(q) s(p, q)` for a raw pair.
pub fn dedekind_symbol_pq(p: &BigInt, q: &BigInt) -> Result<Rational> {
    if q.is_zero() {
        return Err(Error::InfiniteSlope);
    }
    let s = dedekind_sum_fast(p, q)?;
    let scale = if q.is_negative() { -12 } else { 12 };
    Ok(s * Rational::integer(scale))
}

/// `S(p/q)`; well defined on the fraction since `S(-p/-q) = S(p/q)`.
pub fn dedekind_symbol(s: &Slope) -> Result<Rational> {
    dedekind_symbol_pq(s.p(), s.q())
}

/// Right side of the symbol reciprocity law, `p/q + q/p + 1/(pq) - 3 sign(pq)`.
pub fn symbol_reciprocity_rhs(p: &BigInt, q: &BigInt) -> Result<Rational> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let pq = p * q;
    let sign = if pq.is_negative() { -3 } else { 3 };
    Ok(Rational::new(p.clone(), q.clone())?
        + Rational::new(q.clone(), p.clone())?
        + Rational::new(1, pq)?
        - Rational::integer(sign))
}
