//! Integer and rational primitives shared by every module.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision integer used on every exact path.
pub type Int = BigInt;

/// Exact fraction of arbitrary-precision integers, always kept in lowest
/// terms with a positive denominator.
pub type Rational = num_rational::BigRational;

#[inline]
pub fn int(v: i64) -> Int {
    Int::from(v)
}

#[inline]
pub fn is_odd(v: &Int) -> bool {
    v.is_odd()
}

/// Reduction mod 2 as a `u8` in {0, 1}.
#[inline]
pub fn parity(v: &Int) -> u8 {
    u8::from(v.is_odd())
}

/// `sgn` as an integer in {-1, 0, 1}.
pub fn sgn(v: &Int) -> i64 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

pub fn sgn_rational(v: &Rational) -> i64 {
    sgn(v.numer())
}

pub fn coprime(a: &Int, b: &Int) -> bool {
    a.gcd(b).is_one()
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`, `g >= 0`.
pub fn ext_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// The sign parameter attached to a spin structure on a lens space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// `(-1)^e` for a mod-2 exponent.
    pub fn from_parity(e: u8) -> Sign {
        if e % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `self * (-1)^c`.
    pub fn flip_by(self, c: &Int) -> Sign {
        if c.is_odd() {
            -self
        } else {
            self
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => f.write_str("+1"),
            Sign::Minus => f.write_str("-1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid sign `{0}`: expected +1 or -1")]
pub struct ParseSignError(pub String);

impl FromStr for Sign {
    type Err = ParseSignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(ParseSignError(other.to_string())),
        }
    }
}

/// Serde adapter writing an [`Int`] as a bare JSON number of any size.
pub mod json_int {
    use super::Int;
    use serde::de::Error as _;
    use serde::ser::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &Int, s: S) -> Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_str(&v.to_string()).map_err(S::Error::custom)?;
        n.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        Int::from_str(&n.to_string()).map_err(|_| D::Error::custom(format!("expected an integer, got {n}")))
    }

    pub mod vec {
        use super::Int;
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        #[derive(Serialize, Deserialize)]
        struct Wrap(#[serde(with = "super")] Int);

        pub fn serialize<S: Serializer>(v: &[Int], s: S) -> Result<S::Ok, S::Error> {
            let w: Vec<Wrap> = v.iter().cloned().map(Wrap).collect();
            w.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Int>, D::Error> {
            let w: Vec<Wrap> = Vec::deserialize(d)?;
            Ok(w.into_iter().map(|x| x.0).collect())
        }
    }
}
