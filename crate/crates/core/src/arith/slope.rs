use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::Rational;
use crate::{Error, Result};

/// A finite surgery slope `p/q` with `gcd(p, q) = 1` and `q > 0`.
///
/// The sign lives in `p`. The slope `1/0` (no surgery) is rejected at
/// construction, so every `Slope` has a rational value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Builds the slope from an already coprime pair, flipping signs so that `q > 0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::NullSlope);
        }
        if q.is_zero() {
            return Err(Error::InfiniteSlope);
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(Self::canonical(p, q))
    }

    /// Like [`Slope::new`] but divides out common factors first.
    pub fn reduced(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::NullSlope);
        }
        if q.is_zero() {
            return Err(Error::InfiniteSlope);
        }
        let g = p.gcd(&q);
        Ok(Self::canonical(p / &g, q / &g))
    }

    pub fn integer(p: impl Into<BigInt>) -> Self {
        Slope { p: p.into(), q: BigInt::one() }
    }

    fn canonical(p: BigInt, q: BigInt) -> Self {
        if q.is_negative() {
            Slope { p: -p, q: -q }
        } else {
            Slope { p, q }
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone()).expect("q > 0")
    }

    /// The slope `-p/q`.
    pub fn negated(&self) -> Slope {
        Slope { p: -&self.p, q: self.q.clone() }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Parses `p/q` (or a bare integer `p`), reducing common factors.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedSlope(s.to_string());
        let t = s.trim();
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        Slope::reduced(p, q)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
