//! The monodromy of the genus-one fibration of the trefoil-side complement,
//! acting on `H_1` of the fiber.
//!
//! Slopes are read in the surface convention: the vector `(x, y)` has slope
//! `y/x`, so `∞` is `(0, 1)`.

use std::fmt;

use crate::error::{out_of_domain, Error, Result};
use crate::farey::{clockwise_between, farey_edge};
use crate::quadratic::{CirclePoint, Quadratic};
use crate::slope::Slope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MCMatrix {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl MCMatrix {
    pub const IDENTITY: MCMatrix = MCMatrix { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<MCMatrix> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 {
            return Err(Error::NotUnimodular(a, b, c, d));
        }
        Ok(MCMatrix { a, b, c, d })
    }

    pub fn entries(&self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    pub fn checked_mul(&self, o: &MCMatrix) -> Result<MCMatrix> {
        let f = |x: i64, y: i64, z: i64, w: i64| {
            x.checked_mul(y)
                .and_then(|p| z.checked_mul(w).and_then(|q| p.checked_add(q)))
                .ok_or(Error::Overflow("matrix product"))
        };
        Ok(MCMatrix {
            a: f(self.a, o.a, self.b, o.c)?,
            b: f(self.a, o.b, self.b, o.d)?,
            c: f(self.c, o.a, self.d, o.c)?,
            d: f(self.c, o.b, self.d, o.d)?,
        })
    }

    pub fn pow(&self, k: u32) -> Result<MCMatrix> {
        let mut acc = MCMatrix::IDENTITY;
        let mut base = *self;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for MCMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// `φ_n = (2 - n, 1; -1, 0)`.
pub fn phi_matrix(n: i64) -> Result<MCMatrix> {
    if n < 3 {
        return Err(out_of_domain(format!("monodromy needs n ≥ 3, got {n}")));
    }
    MCMatrix::new(2 - n, 1, -1, 0)
}

/// Checks `φ_n = L·R·L^(n-1)` with `L = (1, 0; -1, 1)` and `R = (1, 1; 0, 1)`.
pub fn verify_phi_factorization(n: i64) -> Result<bool> {
    let phi = phi_matrix(n)?;
    let l = MCMatrix::new(1, 0, -1, 1)?;
    let r = MCMatrix::new(1, 1, 0, 1)?;
    let exp = u32::try_from(n - 1).map_err(|_| Error::Overflow("factorization exponent"))?;
    let product = l.checked_mul(&r)?.checked_mul(&l.pow(exp)?)?;
    Ok(product == phi)
}

pub fn is_pseudo_anosov(m: &MCMatrix) -> bool {
    m.trace().abs() > 2
}

pub fn act_on_slope(m: &MCMatrix, s: Slope) -> Slope {
    // (x, y) -> (ax + by, cx + dy) on the vector (q, p) of p/q
    s.mobius(m.d, m.c, m.b, m.a).expect("unimodular maps send primitive vectors to primitive vectors")
}

pub fn act_on_point(m: &MCMatrix, x: &CirclePoint) -> Result<CirclePoint> {
    x.act(m.a, m.b, m.c, m.d)
}

/// Attracting and repelling fixed points of a hyperbolic matrix, the
/// attracting one belonging to the eigenvalue of larger modulus.
pub fn fixed_points(m: &MCMatrix) -> Result<(CirclePoint, CirclePoint)> {
    if !is_pseudo_anosov(m) {
        return Err(out_of_domain(format!("{m} is not hyperbolic")));
    }
    let (a, b, _, d) = m.entries();
    let disc = m.trace() * m.trace() - 4;
    // slope s with eigenvector (1, s): b s^2 + (a - d) s - c = 0, eigenvalue a + b s
    let sign = m.trace().signum();
    let attracting = Quadratic::new(d - a, sign, 2 * b, disc)?;
    let repelling = Quadratic::new(d - a, -sign, 2 * b, disc)?;
    Ok((attracting, repelling))
}

pub fn fixed_slopes(n: i64) -> Result<(CirclePoint, CirclePoint)> {
    if n < 5 {
        return Err(out_of_domain(format!("φ_{n} is not pseudo-Anosov")));
    }
    fixed_points(&phi_matrix(n)?)
}

/// `0 < s_a < 1/2` and `2 < s_r`, decided exactly.
pub fn fixed_slope_bounds(n: i64) -> Result<bool> {
    use std::cmp::Ordering::*;
    let (sa, sr) = fixed_slopes(n)?;
    let half = CirclePoint::from(Slope::new(1, 2)?);
    Ok(sa.cmp_linear(&Slope::ZERO.into()) == Greater
        && sa.cmp_linear(&half) == Less
        && sr.cmp_linear(&Slope::from_int(2).into()) == Greater)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleReport {
    pub n: i64,
    pub checks: Vec<Check>,
}

impl TriangleReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn triangle_adjacent(t: [Slope; 3]) -> bool {
    farey_edge(t[0], t[1]) && farey_edge(t[1], t[2]) && farey_edge(t[0], t[2])
}

/// Adjacency of the triangles `{∞, -1, 0}` and `{1/2, 2/3, 1}`, and their
/// position on either side of the fixed slopes: the first in the clockwise
/// arc from `s_r` to `s_a`, the second in the opposite arc.
pub fn triangle_certificate(n: i64) -> Result<TriangleReport> {
    let (sa, sr) = fixed_slopes(n)?;
    let outer = [Slope::INFINITY, Slope::from_int(-1), Slope::ZERO];
    let inner = [Slope::new(1, 2)?, Slope::new(2, 3)?, Slope::ONE];
    let mut checks = vec![
        Check { name: "{inf, -1, 0} adjacent".into(), pass: triangle_adjacent(outer) },
        Check { name: "{1/2, 2/3, 1} adjacent".into(), pass: triangle_adjacent(inner) },
    ];
    for v in outer {
        checks.push(Check {
            name: format!("{v} clockwise from s_r to s_a"),
            pass: clockwise_between(&sr, &v.into(), &sa)?,
        });
    }
    for v in inner {
        checks.push(Check {
            name: format!("{v} anticlockwise from s_r to s_a"),
            pass: clockwise_between(&sa, &v.into(), &sr)?,
        });
    }
    Ok(TriangleReport { n, checks })
}

/// Iterates `φ_n` on the slope `1` until the float image is within `tol` of
/// the attracting slope. Returns the number of steps and the final error.
pub fn converge_to_attractor(n: i64, tol: f64, max_steps: usize) -> Result<(usize, f64)> {
    let phi = phi_matrix(n)?;
    let target = fixed_slopes(n)?.0.to_f64();
    let mut s = Slope::ONE;
    let mut err = (s.to_f64() - target).abs();
    for step in 1..=max_steps {
        let (a, b, c, d) = phi.entries();
        s = s.mobius(d, c, b, a)?;
        err = (s.to_f64() - target).abs();
        if err < tol {
            return Ok((step, err));
        }
    }
    Ok((max_steps, err))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lit: &str) -> Slope {
        lit.parse().unwrap()
    }

    #[test]
    fn matrices() {
        assert_eq!(phi_matrix(5).unwrap().entries(), (-3, 1, -1, 0));
        assert!(phi_matrix(2).is_err());
        assert!(MCMatrix::new(2, 0, 0, 1).is_err());
        assert!(verify_phi_factorization(5).unwrap());
        assert!(verify_phi_factorization(100).unwrap());
    }

    #[test]
    fn traces() {
        assert!(is_pseudo_anosov(&phi_matrix(5).unwrap()));
        assert!(!is_pseudo_anosov(&MCMatrix::IDENTITY));
        assert!(!is_pseudo_anosov(&phi_matrix(4).unwrap()));
    }

    #[test]
    fn slope_action() {
        for n in 3..10 {
            assert_eq!(act_on_slope(&phi_matrix(n).unwrap(), Slope::INFINITY), Slope::ZERO);
        }
        assert_eq!(act_on_slope(&MCMatrix::IDENTITY, s("5/2")), s("5/2"));
        assert_eq!(act_on_slope(&phi_matrix(5).unwrap(), s("0")), s("1/3"));
    }

    #[test]
    fn fixed_slopes_n5() {
        let (sa, sr) = fixed_slopes(5).unwrap();
        // 2/(3 + √5) = (3 - √5)/2 after rationalizing
        assert_eq!(sa, Quadratic::new(3, -1, 2, 5).unwrap());
        assert_eq!(sr, Quadratic::new(3, 1, 2, 5).unwrap());
        let phi = phi_matrix(5).unwrap();
        assert_eq!(act_on_point(&phi, &sa).unwrap(), sa);
        assert_eq!(act_on_point(&phi, &sr).unwrap(), sr);
        assert!(fixed_slope_bounds(5).unwrap());
        assert!(fixed_slopes(4).is_err());
    }

    #[test]
    fn fixed_slopes_n6() {
        let (sa, _) = fixed_slopes(6).unwrap();
        // 2/(4 + √12) = 2 - √3
        assert_eq!(sa, Quadratic::new(2, -1, 1, 3).unwrap());
        assert!((sa.to_f64() - 0.2679491924311227).abs() < 1e-15);
    }

    #[test]
    fn circle_order_with_quadratics() {
        let (sa, sr) = fixed_slopes(5).unwrap();
        assert!(clockwise_between(&sr, &s("-1").into(), &sa).unwrap());
    }

    #[test]
    fn triangles() {
        assert!(triangle_certificate(5).unwrap().all_pass());
        assert!(triangle_certificate(50).unwrap().all_pass());
        assert!(triangle_certificate(4).is_err());
    }

    #[test]
    fn convergence() {
        for n in [5, 6, 10] {
            let (_, err) = converge_to_attractor(n, 1e-12, 100).unwrap();
            assert!(err < 1e-12);
        }
    }
}
