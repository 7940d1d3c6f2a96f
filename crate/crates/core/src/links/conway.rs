use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Conway polynomial as a sparse map `exponent of z -> coefficient`.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConwayPoly {
    coefficients: BTreeMap<u32, BigInt>,
}

impl ConwayPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: u32, coeff: impl Into<BigInt>) -> Self {
        Self::from_coefficients([(exp, coeff.into())])
    }

    pub fn from_coefficients(coeffs: impl IntoIterator<Item = (u32, BigInt)>) -> Self {
        let mut coefficients = BTreeMap::new();
        for (e, c) in coeffs {
            *coefficients.entry(e).or_insert_with(BigInt::zero) += c;
        }
        coefficients.retain(|_, c| !c.is_zero());
        ConwayPoly { coefficients }
    }

    /// Dense coefficient list, index = exponent.
    pub fn from_dense(coeffs: &[i64]) -> Self {
        Self::from_coefficients(coeffs.iter().enumerate().map(|(e, &c)| (e as u32, BigInt::from(c))))
    }

    /// The coefficient of `z^i`, zero if absent.
    pub fn coefficient(&self, i: u32) -> BigInt {
        self.coefficients.get(&i).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &BTreeMap<u32, BigInt> {
        &self.coefficients
    }

    pub fn degree(&self) -> Option<u32> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Multiplication by `z`.
    pub fn mul_z(&self) -> Self {
        ConwayPoly { coefficients: self.coefficients.iter().map(|(&e, c)| (e + 1, c.clone())).collect() }
    }

    pub fn neg(&self) -> Self {
        ConwayPoly { coefficients: self.coefficients.iter().map(|(&e, c)| (e, -c)).collect() }
    }

    /// `P(-z)`.
    pub fn mirror_variable(&self) -> Self {
        ConwayPoly {
            coefficients: self
                .coefficients
                .iter()
                .map(|(&e, c)| (e, if e % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }
}

impl Add for &ConwayPoly {
    type Output = ConwayPoly;
    fn add(self, rhs: &ConwayPoly) -> ConwayPoly {
        ConwayPoly::from_coefficients(
            self.coefficients.iter().chain(rhs.coefficients.iter()).map(|(&e, c)| (e, c.clone())),
        )
    }
}

impl Sub for &ConwayPoly {
    type Output = ConwayPoly;
    fn sub(self, rhs: &ConwayPoly) -> ConwayPoly {
        ConwayPoly::from_coefficients(
            self.coefficients.iter().map(|(&e, c)| (e, c.clone())).chain(rhs.coefficients.iter().map(|(&e, c)| (e, -c))),
        )
    }
}

impl Add for ConwayPoly {
    type Output = ConwayPoly;
    fn add(self, rhs: ConwayPoly) -> ConwayPoly {
        &self + &rhs
    }
}

impl Sub for ConwayPoly {
    type Output = ConwayPoly;
    fn sub(self, rhs: ConwayPoly) -> ConwayPoly {
        &self - &rhs
    }
}

impl fmt::Display for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (t, (&e, c)) in self.coefficients.iter().enumerate() {
            let mag = c.abs();
            if t == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match e {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{e}")?,
            }
        }
        Ok(())
    }
}

/// Writes `{"coefficients": {"0": 1, "2": 1}}`, keys in increasing exponent order.
impl Serialize for ConwayPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a BTreeMap<u32, BigInt>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (e, c) in self.0 {
                    map.serialize_entry(&e.to_string(), &BigIntJson(c))?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("coefficients", &Coeffs(&self.coefficients))?;
        map.end()
    }
}

pub(crate) fn serialize_bigint<S: Serializer>(n: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    BigIntJson(n).serialize(serializer)
}

/// Serializes as a JSON number when it fits in `i64`, otherwise as a decimal string.
pub struct BigIntJson<'a>(pub &'a BigInt);

impl Serialize for BigIntJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(n) => serializer.serialize_i64(n),
            None => serializer.collect_str(self.0),
        }
    }
}
