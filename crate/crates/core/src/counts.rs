//! Closed-form counts of tight contact structures.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::contfrac::{expand_negative, nf_expand, phi, psi, shifted_product};
use crate::error::{out_of_domain, Error, Result};
use crate::farey::region_guards;
use crate::slope::Slope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Classified,
    LowerBoundOnly,
    InfinitelyMany,
    /// Reserved for regions with no known bound. No input currently maps here.
    Unclassified,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Classified => "classified",
            Status::LowerBoundOnly => "lower_bound_only",
            Status::InfinitelyMany => "infinitely_many",
            Status::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Status> {
        Ok(match s {
            "classified" => Status::Classified,
            "lower_bound_only" => Status::LowerBoundOnly,
            "infinitely_many" => Status::InfinitelyMany,
            "unclassified" => Status::Unclassified,
            _ => return Err(Error::Parse(s.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Total {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Total {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Total::Finite(k) => write!(f, "{k}"),
            Total::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Total {
    type Err = Error;

    fn from_str(s: &str) -> Result<Total> {
        if s == "inf" {
            return Ok(Total::Infinite);
        }
        s.parse().map(Total::Finite).map_err(|_| Error::Parse(s.to_string()))
    }
}

/// JSON form: a number, or the string `"inf"`.
impl Serialize for Total {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Total::Finite(k) => ser.serialize_u64(*k),
            Total::Infinite => ser.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Total {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Total, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(k) => Ok(Total::Finite(k)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountBreakdown {
    pub status: Status,
    pub psi_family: u64,
    pub phi_family: u64,
    pub total: Total,
    /// Only meaningful for [`Status::Classified`].
    pub stein_fillable: bool,
    pub vot_lower: u64,
}

/// Tight structures on a solid torus with boundary slope `p/q`,
/// `q > -p ≥ 1`.
pub fn solid_torus_count(p: i64, q: i64) -> Result<u64> {
    if !(p <= -1 && q > -p) {
        return Err(out_of_domain(format!("solid torus count needs q > -p ≥ 1, got p = {p}, q = {q}")));
    }
    if p.gcd(&q) != 1 {
        return Err(out_of_domain(format!("{p} and {q} are not coprime")));
    }
    let cf = nf_expand(Slope::new(q, p)?)?;
    let (&last, init) = cf.terms().split_last().expect("non-empty");
    let mut acc = last.unsigned_abs();
    for &t in init {
        acc = acc.checked_mul((t + 1).unsigned_abs()).ok_or(Error::Overflow("solid torus count"))?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NrBoundaryCounts {
    pub at_infinity: u64,
    pub at_one: u64,
    /// Meridian slope `1/(1 - r)` after the change of boundary coordinates
    /// that moves the dividing slope `1` to `∞`.
    pub reparametrized_meridian: Slope,
}

/// Counts on the surgery solid torus with boundary slope `∞` and `1`.
pub fn nr_boundary_counts(r: Slope) -> Result<NrBoundaryCounts> {
    if r.is_infinite() {
        return Err(Error::InfiniteInput("solid torus counts"));
    }
    Ok(NrBoundaryCounts {
        at_infinity: phi(r)?,
        at_one: psi(r)?,
        reparametrized_meridian: r.mobius(0, 1, -1, 1)?,
    })
}

/// For `p/q > 0` the smallest `k ≥ 1` with `q - k·p < 0`, together with the
/// negative remainder coefficient `p/(q - k·p)`.
pub(crate) fn positive_split(c: Slope) -> Result<(u64, Slope)> {
    debug_assert!(c.is_finite() && c > Slope::ZERO);
    let (p, q) = (c.num() as i128, c.den() as i128);
    let k = Integer::div_floor(&q, &p) + 1;
    let rest = Slope::from_i128(p, q - k * p)?;
    Ok((k as u64, rest))
}

/// Number of contact structures produced by contact `p/q` surgery on a
/// Legendrian knot.
pub fn dg_surgery_count(p: i64, q: i64) -> Result<u64> {
    if p == 0 {
        return Err(Error::ZeroCoefficient);
    }
    if q < 1 {
        return Err(out_of_domain(format!("denominator must be positive, got {q}")));
    }
    let c = Slope::new(p, q)?;
    let neg = if c < Slope::ZERO { c } else { positive_split(c)?.1 };
    shifted_product(expand_negative(neg)?.terms())
}

pub fn in_r_plus(r: Slope) -> bool {
    region_guards(r).in_r_plus
}

/// Lower bound on the number of virtually overtwisted structures among the
/// classified ones.
pub fn vot_lower(n: i64, r: Slope) -> Result<u64> {
    if n < 5 || r.is_infinite() {
        return Err(out_of_domain(format!("no virtually overtwisted bound for n = {n}, r = {r}")));
    }
    if in_r_plus(r) {
        Ok((psi(r)? + 2 * phi(r)?).saturating_sub(6))
    } else if r < Slope::ZERO {
        Ok(psi(r)?.saturating_sub(2))
    } else {
        Err(out_of_domain(format!("no virtually overtwisted bound for r = {r}")))
    }
}

/// The census entry for `M(n, r)`.
pub fn main_count(n: i64, r: Slope) -> Result<CountBreakdown> {
    if n < 3 {
        return Err(out_of_domain(format!("n must be at least 3, got {n}")));
    }
    if r.is_infinite() {
        return Err(out_of_domain("r = inf is not a surgery of this family"));
    }
    if r.is_zero() {
        return Ok(CountBreakdown {
            status: Status::InfinitelyMany,
            psi_family: 0,
            phi_family: 0,
            total: Total::Infinite,
            stein_fillable: false,
            vot_lower: 0,
        });
    }
    let psi_family = psi(r)?;
    let negative = r < Slope::ZERO;
    let classified = n >= 5 && (in_r_plus(r) || negative);
    let phi_family = if negative || r < Slope::ONE { 0 } else { 2 * phi(r)? };
    let (status, vot) = if classified {
        (Status::Classified, vot_lower(n, r)?)
    } else {
        (Status::LowerBoundOnly, 0)
    };
    Ok(CountBreakdown {
        status,
        psi_family,
        phi_family,
        total: Total::Finite(psi_family + phi_family),
        stein_fillable: classified,
        vot_lower: vot,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lit: &str) -> Slope {
        lit.parse().unwrap()
    }

    #[test]
    fn solid_tori() {
        assert_eq!(solid_torus_count(-1, 2).unwrap(), 2);
        assert_eq!(solid_torus_count(-1, 3).unwrap(), 3);
        assert_eq!(solid_torus_count(-2, 3).unwrap(), 2);
        assert!(solid_torus_count(-1, 1).is_err());
        assert!(solid_torus_count(1, 3).is_err());
        assert!(solid_torus_count(-2, 4).is_err());
    }

    #[test]
    fn boundary_counts() {
        let c = nr_boundary_counts(s("5/2")).unwrap();
        assert_eq!((c.at_infinity, c.at_one), (2, 3));
        assert_eq!(c.reparametrized_meridian, s("-2/3"));
        let c = nr_boundary_counts(s("1")).unwrap();
        assert_eq!((c.at_infinity, c.at_one), (1, 0));
        assert_eq!(c.reparametrized_meridian, Slope::INFINITY);
        let c = nr_boundary_counts(s("-3")).unwrap();
        assert_eq!((c.at_infinity, c.at_one), (1, 4));
    }

    #[test]
    fn surgery_counts() {
        assert_eq!(dg_surgery_count(-1, 1).unwrap(), 1);
        assert_eq!(dg_surgery_count(3, 2).unwrap(), 3);
        assert_eq!(dg_surgery_count(-3, 2).unwrap(), 2);
        assert_eq!(dg_surgery_count(1, 1).unwrap(), 1);
        assert_eq!(dg_surgery_count(0, 1), Err(Error::ZeroCoefficient));
    }

    #[test]
    fn census_entries() {
        let w = main_count(5, s("5/2")).unwrap();
        assert_eq!(w.status, Status::Classified);
        assert_eq!((w.psi_family, w.phi_family, w.total), (3, 4, Total::Finite(7)));
        assert!(w.stein_fillable);
        assert_eq!(main_count(6, s("2")).unwrap().total, Total::Finite(3));
        assert_eq!(main_count(5, s("-3")).unwrap().total, Total::Finite(4));
        assert_eq!(main_count(5, s("0")).unwrap().status, Status::InfinitelyMany);
        assert_eq!(main_count(5, s("1")).unwrap().status, Status::LowerBoundOnly);
        assert_eq!(main_count(5, s("4")).unwrap().status, Status::LowerBoundOnly);
        assert_eq!(main_count(3, s("5/2")).unwrap().status, Status::LowerBoundOnly);
        let small = main_count(5, s("1/2")).unwrap();
        assert_eq!((small.status, small.phi_family), (Status::LowerBoundOnly, 0));
        assert!(main_count(2, s("5/2")).is_err());
        assert!(main_count(5, s("inf")).is_err());
    }

    #[test]
    fn vot_bounds() {
        assert_eq!(vot_lower(5, s("5/2")).unwrap(), 1);
        assert_eq!(vot_lower(5, s("2")).unwrap(), 0);
        assert_eq!(vot_lower(5, s("-3")).unwrap(), 2);
        assert!(vot_lower(4, s("5/2")).is_err());
        assert!(vot_lower(5, s("9/2")).is_err());
    }
}
