//! Words in Dehn twists about the curves `α, β, γ, δ, σ` on the fiber, and
//! their reduction to a normal form.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{out_of_domain, Error, Result};

/// Curve symbols, declared in the fixed order used to sort commuting
/// letters: `γ < α < β < δ < σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Curve {
    Gamma,
    Alpha,
    Beta,
    Delta,
    Sigma,
}

impl Curve {
    pub const ALL: [Curve; 5] = [Curve::Gamma, Curve::Alpha, Curve::Beta, Curve::Delta, Curve::Sigma];

    pub fn symbol(&self) -> char {
        match self {
            Curve::Alpha => 'α',
            Curve::Beta => 'β',
            Curve::Gamma => 'γ',
            Curve::Delta => 'δ',
            Curve::Sigma => 'σ',
        }
    }
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Curve> {
        Ok(match s {
            "α" | "a" | "alpha" => Curve::Alpha,
            "β" | "b" | "beta" => Curve::Beta,
            "γ" | "c" | "gamma" => Curve::Gamma,
            "δ" | "d" | "delta" => Curve::Delta,
            "σ" | "s" | "sigma" => Curve::Sigma,
            _ => return Err(Error::UnknownSymbol(s.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub curve: Curve,
    pub exp: i64,
}

impl Letter {
    pub fn new(curve: Curve, exp: i64) -> Letter {
        Letter { curve, exp }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistWord {
    pub letters: Vec<Letter>,
    /// Unordered pairs of disjoint curves, stored with the smaller first.
    pub commuting: BTreeSet<(Curve, Curve)>,
}

fn ordered(x: Curve, y: Curve) -> (Curve, Curve) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

impl TwistWord {
    /// A word with the default commuting pair `{α, γ}`.
    pub fn new(letters: Vec<Letter>) -> TwistWord {
        let commuting = [ordered(Curve::Alpha, Curve::Gamma)].into_iter().collect();
        TwistWord { letters, commuting }
    }

    pub fn with_commuting(mut self, x: Curve, y: Curve) -> TwistWord {
        self.commuting.insert(ordered(x, y));
        self
    }

    pub fn commute(&self, x: Curve, y: Curve) -> bool {
        self.commuting.contains(&ordered(x, y))
    }

    pub fn concat(&self, other: &TwistWord) -> TwistWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        let commuting = self.commuting.union(&other.commuting).copied().collect();
        TwistWord { letters, commuting }
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.exp > 0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exp).sum()
    }
}

/// Whitespace-separated letters such as `α β α^2 γ^-1`; Latin `a`–`s`
/// aliases and `alpha`-style names are accepted.
impl FromStr for TwistWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<TwistWord> {
        let letters = s
            .split_whitespace()
            .map(|tok| {
                let (sym, exp) = match tok.split_once('^') {
                    Some((sym, e)) => (sym, e.parse().map_err(|_| Error::Parse(tok.to_string()))?),
                    None => (tok, 1),
                };
                Ok(Letter::new(sym.parse()?, exp))
            })
            .collect::<Result<_>>()?;
        Ok(TwistWord::new(letters))
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match l.exp {
                1 => write!(f, "{}", l.curve.symbol())?,
                e => write!(f, "{}^{e}", l.curve.symbol())?,
            }
        }
        Ok(())
    }
}

/// Rewrites to a fixpoint: drop zero exponents, merge neighbours on the same
/// curve and sort adjacent commuting letters into curve order.
pub fn reduce_twist_word(w: &TwistWord) -> TwistWord {
    let mut v: Vec<Letter> = w.letters.iter().copied().filter(|l| l.exp != 0).collect();
    let mut changed = true;
    while changed {
        changed = false;
        let mut i = 0;
        while i + 1 < v.len() {
            let (x, y) = (v[i], v[i + 1]);
            if x.curve == y.curve {
                v[i].exp += y.exp;
                v.remove(i + 1);
                if v[i].exp == 0 {
                    v.remove(i);
                }
                changed = true;
                i = i.saturating_sub(1);
            } else if x.curve > y.curve && w.commute(x.curve, y.curve) {
                v.swap(i, i + 1);
                changed = true;
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
    }
    TwistWord { letters: v, commuting: w.commuting.clone() }
}

/// `α β α^(n-1) γ^-1` with the boundary twist `Δ` written as
/// `α^-2 γ δ σ`, reduced.
pub fn stein_witness(n: i64) -> Result<TwistWord> {
    if n < 3 {
        return Err(out_of_domain(format!("Stein witness needs n ≥ 3, got {n}")));
    }
    use Curve::*;
    let w = TwistWord::new(vec![
        Letter::new(Alpha, 1),
        Letter::new(Beta, 1),
        Letter::new(Alpha, n - 1),
        Letter::new(Gamma, -1),
        Letter::new(Alpha, -2),
        Letter::new(Gamma, 1),
        Letter::new(Delta, 1),
        Letter::new(Sigma, 1),
    ]);
    Ok(reduce_twist_word(&w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> TwistWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_display() {
        let x = w("a b a^2 c^-1");
        assert_eq!(x.to_string(), "α β α^2 γ^-1");
        assert_eq!(w(&x.to_string()), x);
        assert_eq!(w("").to_string(), "1");
        assert_eq!("a z".parse::<TwistWord>(), Err(Error::UnknownSymbol("z".into())));
    }

    #[test]
    fn reductions() {
        assert_eq!(reduce_twist_word(&w("γ^-1 α^-2 γ")), w("α^-2"));
        assert_eq!(reduce_twist_word(&w("")), w(""));
        assert_eq!(reduce_twist_word(&w("α γ")), w("γ α"));
        assert_eq!(reduce_twist_word(&w("β α γ α^-1 β")), w("β γ β"));
        // β and δ do not commute by default
        assert_eq!(reduce_twist_word(&w("δ β")), w("δ β"));
        assert_eq!(reduce_twist_word(&w("δ β").with_commuting(Curve::Beta, Curve::Delta)).letters, w("β δ").letters);
    }

    #[test]
    fn witness() {
        let x = stein_witness(5).unwrap();
        assert_eq!(x, w("α β α^2 δ σ"));
        assert!(x.is_positive());
        assert_eq!(x.exponent_sum(), 6);
        assert_eq!(stein_witness(3).unwrap(), w("α β δ σ"));
        assert!(stein_witness(2).is_err());
    }
}
