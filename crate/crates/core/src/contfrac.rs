//! Negative continued fractions `[r0, r1, ..., rk] = r0 - 1/(r1 - 1/(...))`
//! and the counting functions `Φ` and `Ψ`.

use crate::error::{out_of_domain, Error, Result};
use crate::slope::Slope;

/// A canonical expansion: `r0 ≤ -1` and every later term `≤ -2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NegContFrac {
    terms: Vec<i64>,
}

impl NegContFrac {
    pub fn new(terms: Vec<i64>) -> Result<NegContFrac> {
        check_terms(&terms)?;
        Ok(NegContFrac { terms })
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn eval(&self) -> Slope {
        eval_unchecked(&self.terms).expect("canonical expansions evaluate")
    }
}

fn check_terms(terms: &[i64]) -> Result<()> {
    match terms.split_first() {
        None => Err(Error::MalformedTerms(vec![], "empty expansion")),
        Some((&r0, _)) if r0 > -1 => Err(Error::MalformedTerms(terms.to_vec(), "leading term must be ≤ -1")),
        Some((_, tail)) if tail.iter().any(|&t| t > -2) => {
            Err(Error::MalformedTerms(terms.to_vec(), "tail terms must be ≤ -2"))
        }
        _ => Ok(()),
    }
}

fn eval_unchecked(terms: &[i64]) -> Result<Slope> {
    let (&last, rest) = terms.split_last().expect("non-empty");
    // value kept as a/b with b > 0
    let (mut a, mut b) = (last as i128, 1i128);
    for &t in rest.iter().rev() {
        // t - b/a
        let na = (t as i128).checked_mul(a).and_then(|x| x.checked_sub(b));
        let na = na.ok_or(Error::Overflow("continued fraction value"))?;
        b = a;
        a = na;
    }
    Slope::from_i128(a, b)
}

/// Greedy expansion of any finite negative rational.
///
/// For `x ≤ -1` this is the canonical expansion; for `-1 < x < 0` the
/// leading term is `-1`.
pub fn expand_negative(x: Slope) -> Result<NegContFrac> {
    if x.is_infinite() || x >= Slope::ZERO {
        return Err(out_of_domain(format!("expansion needs a negative rational, got {x}")));
    }
    let (mut p, mut q) = (x.num() as i128, x.den() as i128);
    let mut terms = Vec::new();
    loop {
        let r = p.div_euclid(q);
        terms.push(i64::try_from(r).map_err(|_| Error::Overflow("continued fraction term"))?);
        let rem = p - r * q;
        if rem == 0 {
            break;
        }
        // -1/(p/q - r) = -q/rem
        p = -q;
        q = rem;
    }
    Ok(NegContFrac { terms })
}

/// Canonical expansion of `x ≤ -1`.
pub fn nf_expand(x: Slope) -> Result<NegContFrac> {
    if x.is_infinite() || x > Slope::from_int(-1) {
        return Err(out_of_domain(format!("canonical expansion needs x ≤ -1, got {x}")));
    }
    expand_negative(x)
}

pub fn nf_eval(terms: &[i64]) -> Result<Slope> {
    check_terms(terms)?;
    eval_unchecked(terms)
}

/// `|t0·(t1 + 1)···(tk + 1)|`.
pub(crate) fn shifted_product(terms: &[i64]) -> Result<u64> {
    let mut acc: u64 = terms[0].unsigned_abs();
    for &t in &terms[1..] {
        acc = acc
            .checked_mul((t + 1).unsigned_abs())
            .ok_or(Error::Overflow("counting product"))?;
    }
    Ok(acc)
}

/// `Φ(r)`: shift `r` into `(0, 1]`, expand `-1/r` and multiply.
pub fn phi(r: Slope) -> Result<u64> {
    let c = r.ceil().ok_or(Error::InfiniteInput("Φ"))?;
    let shifted = r.add_int(1 - c)?;
    let cf = nf_expand(shifted.recip().neg())?;
    shifted_product(cf.terms())
}

/// `Ψ(r) = Φ(1/(1 - r))`, with `Ψ(1) = 0`.
pub fn psi(r: Slope) -> Result<u64> {
    if r.is_infinite() {
        return Err(Error::InfiniteInput("Ψ"));
    }
    if r == Slope::ONE {
        return Ok(0);
    }
    phi(r.mobius(0, 1, -1, 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lit: &str) -> Slope {
        lit.parse().unwrap()
    }

    fn expand(lit: &str) -> Vec<i64> {
        nf_expand(s(lit)).unwrap().terms().to_vec()
    }

    #[test]
    fn expansions() {
        assert_eq!(expand("-2"), vec![-2]);
        assert_eq!(expand("-1"), vec![-1]);
        assert_eq!(expand("-4/3"), vec![-2, -2, -2]);
        assert_eq!(expand("-7/5"), vec![-2, -2, -3]);
        assert_eq!(expand_negative(s("-2/3")).unwrap().terms(), &[-1, -3]);
        assert!(nf_expand(s("-1/2")).is_err());
        assert!(nf_expand(s("inf")).is_err());
        assert!(expand_negative(s("0")).is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(nf_eval(&[-1]).unwrap(), s("-1"));
        assert_eq!(nf_eval(&[-2, -2, -2]).unwrap(), s("-4/3"));
        assert_eq!(nf_eval(&[-3]).unwrap(), s("-3"));
        // hand-evaluated: -2 - 1/(-2 - 1/(-3)) = -2 + 3/5
        assert_eq!(nf_eval(&[-2, -2, -3]).unwrap(), s("-7/5"));
        assert!(matches!(nf_eval(&[]), Err(Error::MalformedTerms(..))));
        assert!(matches!(nf_eval(&[0]), Err(Error::MalformedTerms(..))));
        assert!(matches!(nf_eval(&[-2, -1]), Err(Error::MalformedTerms(..))));
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(s("5/2")).unwrap(), 2);
        assert_eq!(phi(s("1/3")).unwrap(), 3);
        for m in -10..10 {
            assert_eq!(phi(Slope::from_int(m)).unwrap(), 1);
        }
        assert_eq!(phi(s("inf")), Err(Error::InfiniteInput("Φ")));
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(s("1")).unwrap(), 0);
        assert_eq!(psi(s("5/2")).unwrap(), 3);
        assert_eq!(psi(s("-3")).unwrap(), 4);
        assert_eq!(psi(s("2")).unwrap(), 1);
        assert_eq!(psi(s("3")).unwrap(), 2);
    }
}
