use num_bigint::BigInt;
use serde::Serialize;

use super::conway::serialize_bigint;
use super::{LinkDiagram, SkeinOracle};
use crate::arith::Rational;
use crate::{Error, Result};

/// Inputs of the two-component surgery formula for `L = K_x ∪ K_y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct LinkSurgeryInvariants {
    /// `a_2` of the first component.
    #[serde(serialize_with = "serialize_bigint")]
    pub a2_x: BigInt,
    /// `a_2` of the second component.
    #[serde(serialize_with = "serialize_bigint")]
    pub a2_y: BigInt,
    /// `a_3` of the link.
    #[serde(serialize_with = "serialize_bigint")]
    pub a3_l: BigInt,
    /// Linking number, equal to `a_1` of the link.
    #[serde(serialize_with = "serialize_bigint")]
    pub lk: BigInt,
}

impl LinkSurgeryInvariants {
    pub fn new(a2_x: impl Into<BigInt>, a2_y: impl Into<BigInt>, a3_l: impl Into<BigInt>, lk: impl Into<BigInt>) -> Self {
        LinkSurgeryInvariants { a2_x: a2_x.into(), a2_y: a2_y.into(), a3_l: a3_l.into(), lk: lk.into() }
    }

    /// The same link with its components listed in the other order.
    pub fn swapped(&self) -> Self {
        LinkSurgeryInvariants {
            a2_x: self.a2_y.clone(),
            a2_y: self.a2_x.clone(),
            a3_l: self.a3_l.clone(),
            lk: self.lk.clone(),
        }
    }
}

/// `v_3(L) = (-a_3 + (a_2(K_x) + a_2(K_y)) lk + (lk^3 - lk)/12) / 2`.
pub fn v3(inv: &LinkSurgeryInvariants) -> Rational {
    let lk = &inv.lk;
    let cubic = Rational::new(lk * lk * lk - lk, 12).expect("nonzero denominator");
    let inner = Rational::integer(-&inv.a3_l) + Rational::integer((&inv.a2_x + &inv.a2_y) * lk) + cubic;
    inner * Rational::frac(1, 2)
}

/// `a_2` of each component, `a_3` of the link and the linking number, all via the skein oracle.
pub fn invariants_from_diagram(d: &LinkDiagram, oracle: &SkeinOracle) -> Result<LinkSurgeryInvariants> {
    if d.component_count() != 2 {
        return Err(Error::ComponentCount { expected: 2, found: d.component_count() });
    }
    let a2_x = oracle.conway(&d.component_sub_diagram(0)?)?.coefficient(2);
    let a2_y = oracle.conway(&d.component_sub_diagram(1)?)?.coefficient(2);
    let a3_l = oracle.conway(d)?.coefficient(3);
    let lk = d.linking_number(0, 1)?;
    Ok(LinkSurgeryInvariants::new(a2_x, a2_y, a3_l, lk))
}

/// `a_3(P(2a+1, 2b, 2b)) = -b (2b^2 + 6ab + 3b + 1) / 6`.
pub fn pretzel_a3_closed_form(a: i64, b: i64) -> Result<BigInt> {
    if a < 1 || b == 0 {
        return Err(Error::InvalidParameter(format!("pretzel family needs a >= 1 and b != 0, got a={a}, b={b}")));
    }
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    let numer = -&b * (2 * &b * &b + 6 * &a * &b + 3 * &b + 1);
    let value = Rational::new(numer, 6)?;
    value
        .to_integer()
        .ok_or_else(|| Error::Invariant(format!("closed form a_3 = {value} is not an integer")))
}
