//! Farey graph arithmetic and bypass dynamics on convex tori.
//!
//! The boundary circle is ordered clockwise by increasing real value with a
//! single wrap through `∞`: starting at `0` the clockwise walk visits
//! `1/2, 1, 2, ∞, -2, -1` and returns to `0`.

use num_integer::Integer;

use crate::error::{out_of_domain, Error, Result};
use crate::quadratic::CirclePoint;
use crate::slope::Slope;

/// Determinant of the primitive vectors of two slopes.
fn det(a: &Slope, b: &Slope) -> i128 {
    a.num() as i128 * b.den() as i128 - b.num() as i128 * a.den() as i128
}

/// `true` iff `a` and `b` span a Farey edge, i.e. `|p_a q_b - p_b q_a| = 1`.
pub fn farey_edge(a: Slope, b: Slope) -> bool {
    det(&a, &b).abs() == 1
}

/// Which half of the Farey disk a construction lives in. In the left half
/// `∞` is represented by the vector `-1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfPlane {
    Right,
    Left,
}

/// Mediant of two Farey neighbours using the half-plane construction.
///
/// When one endpoint is `∞` the half plane is read off the other endpoint:
/// non-negative slopes live on the right (`∞ = 1/0`), negative slopes on
/// the left (`∞ = -1/0`). Use [`mediant_in`] to pick the half explicitly.
pub fn mediant(a: Slope, b: Slope) -> Result<Slope> {
    let finite = if a.is_infinite() { b } else { a };
    let half = if finite.is_finite() && finite.num() < 0 {
        HalfPlane::Left
    } else {
        HalfPlane::Right
    };
    mediant_in(a, b, half)
}

pub fn mediant_in(a: Slope, b: Slope, half: HalfPlane) -> Result<Slope> {
    if !farey_edge(a, b) {
        return Err(Error::NotAdjacent(a, b));
    }
    let vector = |s: Slope| -> (i128, i128) {
        if s.is_infinite() && half == HalfPlane::Left {
            (-1, 0)
        } else {
            (s.num() as i128, s.den() as i128)
        }
    };
    let (pa, qa) = vector(a);
    let (pb, qb) = vector(b);
    Slope::from_i128(pa + pb, qa + qb)
}

/// `true` iff `x` lies strictly inside the clockwise arc from `a` to `b`.
pub fn clockwise_between(a: &CirclePoint, x: &CirclePoint, b: &CirclePoint) -> Result<bool> {
    use std::cmp::Ordering::*;
    let ab = a.cmp_linear(b);
    if ab == Equal {
        return Err(Error::DegenerateArc(a.to_string()));
    }
    let after_a = x.cmp_linear(a) == Greater;
    let before_b = x.cmp_linear(b) == Less;
    Ok(if ab == Less { after_a && before_b } else { after_a || before_b })
}

/// Convenience wrapper of [`clockwise_between`] for rational slopes.
pub fn clockwise_between_slopes(a: Slope, x: Slope, b: Slope) -> Result<bool> {
    clockwise_between(&a.into(), &x.into(), &b.into())
}

/// Unimodular map `M` with `M(s) = ∞`, as `(y, -x, -q, p)` acting on
/// column vectors `(p, q)` by `(p, q) ↦ (y·p - x·q, -q·p + p·q)`.
struct Transport {
    p: i64,
    q: i64,
    x: i64,
    y: i64,
}

impl Transport {
    fn to_infinity(s: Slope) -> Transport {
        let (p, q) = (s.num(), s.den());
        // p·y - q·x = 1
        let eg = p.extended_gcd(&q);
        debug_assert_eq!(eg.gcd, 1);
        Transport { p, q, x: -eg.y, y: eg.x }
    }

    /// Image of `r` as a real number `u/v` (not normalized).
    fn image(&self, r: Slope) -> (i128, i128) {
        let (u, v) = (r.num() as i128, r.den() as i128);
        let (p, q, x, y) = (self.p as i128, self.q as i128, self.x as i128, self.y as i128);
        (y * u - x * v, -q * u + p * v)
    }

    /// Preimage of the integer `k`, i.e. of the vector `(k, 1)`.
    fn preimage(&self, k: i128) -> Result<Slope> {
        let (p, q, x, y) = (self.p as i128, self.q as i128, self.x as i128, self.y as i128);
        Slope::from_i128(p * k + x, q * k + y)
    }
}

/// Arc direction used by bypass attachment.
pub fn bypass_direction_is_clockwise(flips: u32) -> bool {
    flips % 2 == 1
}

/// Dividing slope after a bypass attachment along a ruling curve.
///
/// `s` is the current dividing slope and `r` the ruling slope. Each unit of
/// `flips` reverses the arc direction; odd parity walks clockwise (slopes
/// increase), which is the direction of thickening the fibered piece. The
/// result is the Farey neighbour of `s` inside the directed arc from `s` to
/// `r` that lies furthest toward `r`, so an `r` adjacent to `s` is returned
/// unchanged.
pub fn bypass_slope(s: Slope, r: Slope, flips: u32) -> Result<Slope> {
    if s == r {
        return Err(Error::DegenerateInput(format!("dividing and ruling slope both {s}")));
    }
    let t = Transport::to_infinity(s);
    let (u, v) = t.image(r);
    debug_assert!(v != 0);
    // neighbours of ∞ are the integers; the clockwise arc from ∞ to u/v
    // contains the integers ≤ u/v, the anticlockwise one those ≥ u/v
    let k = if bypass_direction_is_clockwise(flips) {
        Integer::div_floor(&u, &v)
    } else {
        -Integer::div_floor(&-u, &v)
    };
    t.preimage(k)
}

/// Membership in `S(r)`: neighbours of `r` clockwise of `r` and
/// anticlockwise of `∞`.
pub fn in_s(r: Slope, s: Slope) -> Result<bool> {
    if r.is_infinite() {
        return Err(Error::InfiniteInput("S(r)"));
    }
    Ok(farey_edge(r, s) && clockwise_between_slopes(r, s, Slope::INFINITY)?)
}

/// All members of `S(r)` with denominator at most `den_bound`, ordered
/// along the arc from `r` toward `∞`.
pub fn enumerate_s(r: Slope, den_bound: u64) -> Result<Vec<Slope>> {
    if r.is_infinite() {
        return Err(Error::InfiniteInput("S(r)"));
    }
    let t = Transport::to_infinity(r);
    // M(∞) = y / (-q); the arc (r, ∞) maps to integers k < -y/q
    let (u, v) = t.image(Slope::INFINITY);
    let upper = if u.is_multiple_of(&v) { u / v - 1 } else { Integer::div_floor(&u, &v) };
    let bound = den_bound as i128;
    let (q, y) = (t.q as i128, t.y as i128);
    // denominators q·k + y are negative and grow in magnitude as k decreases
    let lowest = if q == 0 { upper } else { Integer::div_floor(&(-bound - y), &q).max(i128::MIN / 4) };
    let mut out = Vec::new();
    let mut k = lowest.min(upper);
    while k <= upper {
        let den = (q * k + y).abs();
        if den <= bound {
            out.push(t.preimage(k)?);
        }
        k += 1;
    }
    Ok(out)
}

/// Region predicates on the boundary slope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegionGuards {
    /// `s ∈ [2, 4) ∪ [5, ∞)`.
    pub in_r_plus: bool,
    /// `s = (4k + 1)/k` for some `k ≥ 1`.
    pub exceptional: bool,
    /// `4 < s ≤ 5`.
    pub in_gap: bool,
}

pub fn region_guards(s: Slope) -> RegionGuards {
    if s.is_infinite() {
        return RegionGuards { in_r_plus: false, exceptional: false, in_gap: false };
    }
    let two = Slope::from_int(2);
    let four = Slope::from_int(4);
    let five = Slope::from_int(5);
    RegionGuards {
        in_r_plus: (s >= two && s < four) || s >= five,
        exceptional: s.den() >= 1 && s.num() as i128 - 4 * s.den() as i128 == 1,
        in_gap: s > four && s <= five,
    }
}

/// Outcome of iterated bypass thickening of the fibered piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThickeningResult {
    ReachedInfinity { path: Vec<Slope> },
    /// Bypass walk to a slope `-1/k`, continued by the basic slices
    /// `(-1/k, 0)` and `(0, 1)` recorded in `structural_tail`.
    ReachedOne { bypass_path: Vec<Slope>, structural_tail: Vec<Slope> },
    Stalled { at: Slope },
}

/// Thickening for boundary slopes `s > 2`: attach bypasses of ruling slope
/// `0` until `∞` is reached, as long as every slope stays at least `2` and
/// avoids the exceptional slopes `(4k + 1)/k`.
pub fn thicken_positive(s: Slope) -> Result<ThickeningResult> {
    let two = Slope::from_int(2);
    if s.is_finite() && s <= two {
        return Err(out_of_domain(format!("positive thickening needs s > 2, got {s}")));
    }
    let mut path = vec![s];
    let mut cur = s;
    while cur.is_finite() {
        let g = region_guards(cur);
        if cur < two || g.exceptional {
            return Ok(ThickeningResult::Stalled { at: cur });
        }
        cur = bypass_slope(cur, Slope::ZERO, 1)?;
        path.push(cur);
    }
    Ok(ThickeningResult::ReachedInfinity { path })
}

fn is_reciprocal_of_natural(s: Slope) -> bool {
    s.num() == -1 && s.den() >= 1
}

/// Thickening for negative boundary slopes: attach bypasses until the slope
/// has the form `-1/k`.
pub fn thicken_negative(s: Slope) -> Result<ThickeningResult> {
    if s.is_infinite() || s >= Slope::ZERO {
        return Err(out_of_domain(format!("negative thickening needs s < 0, got {s}")));
    }
    let mut path = vec![s];
    let mut cur = s;
    while !is_reciprocal_of_natural(cur) {
        cur = bypass_slope(cur, Slope::ZERO, 1)?;
        path.push(cur);
    }
    Ok(ThickeningResult::ReachedOne {
        bypass_path: path,
        structural_tail: vec![Slope::ZERO, Slope::ONE],
    })
}
