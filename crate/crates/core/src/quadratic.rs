//! Exact real quadratic irrationals and points of the Farey boundary circle.
//!
//! A [`Quadratic`] is `(a + b√d)/c` with `c > 0`, `d > 1` square-free and
//! `gcd(a, b, c) = 1`. All comparisons reduce to the sign of `A + B√d`,
//! decided by squaring, so no floating point is involved.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::slope::Slope;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Quadratic {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

/// A point on the boundary circle of the Farey graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CirclePoint {
    Rational(Slope),
    Quadratic(Quadratic),
}

fn square_free_part(d: i128) -> (i128, i128) {
    // returns (k, m) with d = k^2 * m and m square-free
    let mut m = d;
    let mut k = 1;
    let mut f = 2;
    while f * f <= m {
        while m % (f * f) == 0 {
            m /= f * f;
            k *= f;
        }
        f += 1;
    }
    (k, m)
}

fn mul(x: i128, y: i128) -> i128 {
    x.checked_mul(y).expect("quadratic arithmetic overflow")
}

fn add(x: i128, y: i128) -> i128 {
    x.checked_add(y).expect("quadratic arithmetic overflow")
}

/// Sign of `x + y·√d` for `d > 0`.
fn sign_surd(x: i128, y: i128, d: i128) -> Ordering {
    let sx = x.cmp(&0);
    let sy = y.cmp(&0);
    if sy == Ordering::Equal {
        return sx;
    }
    if sx == Ordering::Equal || sx == sy {
        return sy;
    }
    // opposite signs: compare magnitudes
    let xx = mul(x, x);
    let yyd = mul(mul(y, y), d);
    match sx {
        Ordering::Greater => xx.cmp(&yyd),
        _ => yyd.cmp(&xx),
    }
}

/// Element of `ℚ(√d)` in wide integers, used for exact field arithmetic.
#[derive(Clone, Copy, Debug)]
struct FieldElt {
    a: i128,
    b: i128,
    c: i128,
    d: i128,
}

impl FieldElt {
    fn reduce(self) -> FieldElt {
        let FieldElt { mut a, mut b, mut c, d } = self;
        if c < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if g > 1 {
            a /= g;
            b /= g;
            c /= g;
        }
        FieldElt { a, b, c, d }
    }

    /// `(p + q·self) / (r + s·self)` for integers p, q, r, s.
    fn mobius(self, p: i128, q: i128, r: i128, s: i128) -> Option<FieldElt> {
        let FieldElt { a, b, c, d } = self;
        // numerator and denominator over the common denominator c
        let (na, nb) = (add(mul(p, c), mul(q, a)), mul(q, b));
        let (da, db) = (add(mul(r, c), mul(s, a)), mul(s, b));
        let norm = mul(da, da) - mul(mul(db, db), d);
        if norm == 0 {
            return None;
        }
        // (na + nb√d)(da - db√d) / norm
        let ra = mul(na, da) - mul(mul(nb, db), d);
        let rb = mul(nb, da) - mul(na, db);
        Some(FieldElt { a: ra, b: rb, c: norm, d }.reduce())
    }
}

impl Quadratic {
    /// Builds `(a + b√d)/c`, extracting square factors of `d`.
    ///
    /// Returns a rational [`CirclePoint`] when the surd part vanishes.
    #[allow(clippy::new_ret_no_self)]
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<CirclePoint> {
        if c == 0 {
            return Err(Error::DegenerateInput("zero denominator in quadratic".into()));
        }
        if d < 0 {
            return Err(Error::DegenerateInput("negative radicand".into()));
        }
        let (k, m) = square_free_part(d as i128);
        FieldElt { a: a as i128, b: b as i128 * k, c: c as i128, d: m }
            .reduce()
            .into_point()
    }

    pub fn parts(&self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }

    fn field(&self) -> FieldElt {
        FieldElt { a: self.a as i128, b: self.b as i128, c: self.c as i128, d: self.d as i128 }
    }

    pub fn to_f64(&self) -> f64 {
        (self.a as f64 + self.b as f64 * (self.d as f64).sqrt()) / self.c as f64
    }

    fn cmp_rational(&self, s: &Slope) -> Ordering {
        if s.is_infinite() {
            return Ordering::Less;
        }
        let (p, q) = (s.num() as i128, s.den() as i128);
        let (a, b, c, d) = (self.a as i128, self.b as i128, self.c as i128, self.d as i128);
        sign_surd(mul(q, a) - mul(p, c), mul(q, b), d)
    }

    fn cmp_quadratic(&self, other: &Quadratic) -> Ordering {
        let (a1, b1, c1, d1) = (self.a as i128, self.b as i128, self.c as i128, self.d as i128);
        let (a2, b2, c2, d2) =
            (other.a as i128, other.b as i128, other.c as i128, other.d as i128);
        let x = mul(a1, c2) - mul(a2, c1);
        let y = mul(b1, c2);
        let z = -mul(b2, c1);
        if d1 == d2 {
            return sign_surd(x, y + z, d1);
        }
        // sign of u + v with u = x + y√d1, v = z√d2
        let su = sign_surd(x, y, d1);
        let sv = z.cmp(&0);
        if su == Ordering::Equal {
            return sv;
        }
        if sv == Ordering::Equal || su == sv {
            return su;
        }
        // u^2 - v^2 = (x^2 + y^2 d1 - z^2 d2) + 2xy√d1
        let lead = add(mul(x, x), mul(mul(y, y), d1)) - mul(mul(z, z), d2);
        match sign_surd(lead, mul(2, mul(x, y)), d1) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => Ordering::Equal,
        }
    }
}

impl FieldElt {
    fn into_point(self) -> Result<CirclePoint> {
        let e = self.reduce();
        let narrow = |v: i128| i64::try_from(v).map_err(|_| Error::Overflow("quadratic"));
        if e.b == 0 || e.d == 0 || e.d == 1 {
            let num = e.a + if e.d == 1 { e.b } else { 0 };
            return Ok(CirclePoint::Rational(Slope::from_i128(num, e.c)?));
        }
        Ok(CirclePoint::Quadratic(Quadratic {
            a: narrow(e.a)?,
            b: narrow(e.b)?,
            c: narrow(e.c)?,
            d: narrow(e.d)?,
        }))
    }
}

impl CirclePoint {
    pub const INFINITY: CirclePoint = CirclePoint::Rational(Slope::INFINITY);

    pub fn is_infinite(&self) -> bool {
        matches!(self, CirclePoint::Rational(s) if s.is_infinite())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            CirclePoint::Rational(s) => s.to_f64(),
            CirclePoint::Quadratic(q) => q.to_f64(),
        }
    }

    /// Position on the extended real line, `∞` greatest.
    pub fn cmp_linear(&self, other: &CirclePoint) -> Ordering {
        use CirclePoint::*;
        match (self, other) {
            (Rational(x), Rational(y)) => x.cmp(y),
            (Quadratic(q), Rational(s)) => q.cmp_rational(s),
            (Rational(s), Quadratic(q)) => q.cmp_rational(s).reverse(),
            (Quadratic(x), Quadratic(y)) => x.cmp_quadratic(y),
        }
    }

    /// Projective image `(c + d·x)/(a + b·x)` of the slope `x = y/x`-vector
    /// under the integer matrix `(a, b; c, d)`.
    pub fn act(&self, a: i64, b: i64, c: i64, d: i64) -> Result<CirclePoint> {
        match self {
            CirclePoint::Rational(s) => Ok(CirclePoint::Rational(s.mobius(d, c, b, a)?)),
            CirclePoint::Quadratic(q) => {
                let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
                // an irrational point never hits the pole of an integral map
                q.field()
                    .mobius(c, d, a, b)
                    .expect("irrational point is not a pole")
                    .into_point()
            }
        }
    }
}

impl From<Slope> for CirclePoint {
    fn from(s: Slope) -> CirclePoint {
        CirclePoint::Rational(s)
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b < 0 { '-' } else { '+' };
        let mag = self.b.abs();
        let surd = if mag == 1 { format!("√{}", self.d) } else { format!("{mag}√{}", self.d) };
        if self.c == 1 {
            write!(f, "{} {sign} {surd}", self.a)
        } else {
            write!(f, "({} {sign} {surd})/{}", self.a, self.c)
        }
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CirclePoint::Rational(s) => write!(f, "{s}"),
            CirclePoint::Quadratic(q) => write!(f, "{q}"),
        }
    }
}
