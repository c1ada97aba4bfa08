//! Extended rational slopes `p/q ∈ ℚ ∪ {∞}`.
//!
//! A [`Slope`] is always stored in lowest terms with a non-negative
//! denominator. The point at infinity is the single value `1/0`; the
//! spellings `-1/0` and `-inf` normalize to it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i64,
    den: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { num: 1, den: 0 };
    pub const ZERO: Slope = Slope { num: 0, den: 1 };
    pub const ONE: Slope = Slope { num: 1, den: 1 };

    /// Builds `num/den` in lowest terms. Fails only for `0/0`.
    pub fn new(num: i64, den: i64) -> Result<Slope> {
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_int(m: i64) -> Slope {
        Slope { num: m, den: 1 }
    }

    pub(crate) fn from_i128(num: i128, den: i128) -> Result<Slope> {
        if num == 0 && den == 0 {
            return Err(Error::DegenerateInput("0/0 is not a slope".into()));
        }
        if den == 0 {
            return Ok(Slope::INFINITY);
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let num = i64::try_from(n).map_err(|_| Error::Overflow("slope numerator"))?;
        let den = i64::try_from(d).map_err(|_| Error::Overflow("slope denominator"))?;
        Ok(Slope { num, den })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn is_finite(&self) -> bool {
        self.den != 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `⌊p/q⌋`, or `None` at infinity.
    pub fn floor(&self) -> Option<i64> {
        self.is_finite().then(|| Integer::div_floor(&self.num, &self.den))
    }

    /// `⌈p/q⌉`, or `None` at infinity.
    pub fn ceil(&self) -> Option<i64> {
        self.is_finite().then(|| -Integer::div_floor(&-self.num, &self.den))
    }

    /// Real Möbius image `(a·x + b) / (c·x + d)` computed on the primitive
    /// vector `(p, q)`, so infinity is handled uniformly.
    pub fn mobius(&self, a: i64, b: i64, c: i64, d: i64) -> Result<Slope> {
        let (p, q) = (self.num as i128, self.den as i128);
        Slope::from_i128(a as i128 * p + b as i128 * q, c as i128 * p + d as i128 * q)
    }

    pub fn add_int(&self, k: i64) -> Result<Slope> {
        self.mobius(1, k, 0, 1)
    }

    pub fn neg(&self) -> Slope {
        if self.is_infinite() {
            *self
        } else {
            Slope { num: -self.num, den: self.den }
        }
    }

    /// `1/x`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Slope {
        Slope::from_i128(self.den as i128, self.num as i128).expect("nonzero vector")
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            f64::INFINITY
        } else {
            self.num as f64 / self.den as f64
        }
    }
}

/// Total order on the extended real line with `∞` as the greatest element.
///
/// This is the linear order that the clockwise circular order is cut from.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let lhs = self.num as i128 * other.den as i128;
                let rhs = other.num as i128 * self.den as i128;
                lhs.cmp(&rhs)
            }
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den {
            0 => f.pad("inf"),
            1 => f.pad(&self.num.to_string()),
            d => f.pad(&format!("{}/{}", self.num, d)),
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let t = s.trim();
        match t {
            "inf" | "+inf" | "-inf" => return Ok(Slope::INFINITY),
            _ => {}
        }
        let bad = || Error::Parse(s.to_string());
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        Slope::new(p, q).map_err(|_| bad())
    }
}

impl From<i64> for Slope {
    fn from(m: i64) -> Slope {
        Slope::from_int(m)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
