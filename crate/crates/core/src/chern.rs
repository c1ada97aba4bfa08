//! First homology of `M(n, r)` and the Poincaré duals of first Chern classes
//! of the two families of Stein-fillable structures.
//!
//! `H_1(M(n, p/q)) = ⟨μ, ν | nμ = 0, pν = 0⟩`, where `μ` is the meridian of
//! the trefoil component and `ν` that of the other component.

use std::fmt;

use num_integer::Integer;

use crate::contfrac::expand_negative;
use crate::counts::{in_r_plus, positive_split};
use crate::error::{out_of_domain, Error, Result};
use crate::slope::Slope;
use crate::surgery::{phi_family_link, psi_family_link, RotAssignment, Sign};

/// `ℤ_n ⊕ ℤ_p`; `p = 0` stands for a free summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct H1 {
    pub n: u64,
    pub p: u64,
}

impl H1 {
    pub fn is_torsion(&self) -> bool {
        self.p != 0
    }

    pub fn order(&self) -> Option<u64> {
        self.is_torsion().then(|| self.n * self.p)
    }

    /// Invariant factors `d1 | d2` with trivial factors dropped; a `0`
    /// denotes a `ℤ` summand.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let (g, l) = if self.p == 0 { (self.n, 0) } else { (self.n.gcd(&self.p), self.n.lcm(&self.p)) };
        [g, l].into_iter().filter(|&d| d != 1).collect()
    }
}

impl fmt::Display for H1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.p == 0 { "ℤ".to_string() } else { format!("ℤ_{}", self.p) };
        write!(f, "ℤ_{} ⊕ {p}", self.n)
    }
}

pub fn h1(n: i64, r: Slope) -> Result<H1> {
    if n < 1 {
        return Err(out_of_domain(format!("n must be positive, got {n}")));
    }
    if r.is_infinite() {
        return Err(Error::InfiniteInput("H_1"));
    }
    Ok(H1 { n: n as u64, p: r.num().unsigned_abs() })
}

/// `a·μ + b·ν` with residues reduced into `[0, n)` and `[0, |p|)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct H1Element {
    pub group: H1,
    pub n_part: u64,
    pub p_part: u64,
}

impl H1Element {
    pub fn new(group: H1, mu: i64, nu: i64) -> Result<H1Element> {
        if !group.is_torsion() {
            return Err(Error::UnsupportedCase(format!("{group} is not torsion")));
        }
        Ok(H1Element {
            group,
            n_part: mu.rem_euclid(group.n as i64) as u64,
            p_part: nu.rem_euclid(group.p as i64) as u64,
        })
    }

    pub fn add(&self, other: &H1Element) -> Result<H1Element> {
        if self.group != other.group {
            return Err(Error::DegenerateInput("elements of different groups".into()));
        }
        H1Element::new(
            self.group,
            (self.n_part + other.n_part) as i64,
            (self.p_part + other.p_part) as i64,
        )
    }
}

impl fmt::Display for H1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[μ] + {}[ν]", self.n_part, self.p_part)
    }
}

/// Coefficients `c_i` with `[μ_i] = c_i·[μ_0]` along the trefoil push-off
/// chain, obtained by eliminating the components last to first.
pub fn chain_reduction_coeffs(tail_terms: &[i64]) -> Vec<i64> {
    let k = tail_terms.len();
    let r = |i: usize| tail_terms[i - 1] as i128;
    // forms[i] expresses μ_i in the basis μ_0, ..., μ_k
    let mut forms: Vec<Vec<i128>> = (0..=k)
        .map(|i| {
            let mut v = vec![0; k + 1];
            v[i] = 1;
            v
        })
        .collect();
    for j in (1..=k).rev() {
        let mut rule = vec![0i128; k + 1];
        match j {
            1 => rule[0] = 2,
            2 => {
                rule[1] = r(1) + 1;
                rule[0] = -1;
            }
            _ => {
                rule[j - 1] = r(j - 1);
                rule[j - 2] = -1;
            }
        }
        for form in forms.iter_mut() {
            let c = std::mem::take(&mut form[j]);
            if c != 0 {
                for (f, g) in form.iter_mut().zip(&rule) {
                    *f += c * g;
                }
            }
        }
    }
    forms.iter().map(|f| i64::try_from(f[0]).expect("chain coefficient fits in i64")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Psi,
    Phi,
}

/// The `ν`-coefficient of a Φ-family class is left symbolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unreduced;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiChern {
    /// Residue mod `n`.
    pub mu_coeff: u64,
    pub nu_coeff: Unreduced,
    pub rot_tuple: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChernData {
    Psi(H1Element),
    Phi(PhiChern),
}

fn check_len(expected: usize, choice: &RotAssignment) -> Result<()> {
    if choice.components.len() != expected {
        return Err(out_of_domain(format!(
            "choice has {} components, diagram has {expected}",
            choice.components.len()
        )));
    }
    Ok(())
}

pub fn chern_data(family: Family, n: i64, r: Slope, choice: &RotAssignment) -> Result<ChernData> {
    match family {
        Family::Psi => psi_chern(n, r, choice).map(ChernData::Psi),
        Family::Phi => phi_chern(n, r, choice).map(ChernData::Phi),
    }
}

fn psi_chern(n: i64, r: Slope, choice: &RotAssignment) -> Result<H1Element> {
    if n < 3 || r.is_infinite() || r == Slope::ONE {
        return Err(out_of_domain(format!("no Ψ-family class for n = {n}, r = {r}")));
    }
    if r < Slope::from_int(2) {
        return Err(Error::UnsupportedCase(format!(
            "Ψ-family homology reduction needs r ≥ 2, got {r}; rotation numbers {:?}",
            choice.rots()
        )));
    }
    let link = psi_family_link(r)?;
    check_len(link.len(), choice)?;
    let tail = if r == Slope::from_int(2) {
        vec![]
    } else {
        let (_, rest) = positive_split(r.add_int(-1)?)?;
        expand_negative(rest)?.terms().to_vec()
    };
    debug_assert_eq!(tail.len() + 1, link.len());
    let coeffs = chain_reduction_coeffs(&tail);
    let m: i128 = choice.components.iter().zip(&coeffs).map(|(c, &k)| c.rot as i128 * k as i128).sum();
    let group = h1(n, r)?;
    let m = m.rem_euclid(group.p as i128) as i64;
    H1Element::new(group, 0, m)
}

fn phi_chern(n: i64, r: Slope, choice: &RotAssignment) -> Result<PhiChern> {
    let link = phi_family_link(n, r)?;
    check_len(link.len(), choice)?;
    let mu: i64 = link
        .trefoil
        .components
        .iter()
        .zip(&choice.components)
        .filter(|(c, _)| c.sign == Sign::MinusOne)
        .map(|(_, s)| s.rot)
        .sum();
    Ok(PhiChern {
        mu_coeff: mu.rem_euclid(n) as u64,
        nu_coeff: Unreduced,
        rot_tuple: choice.rots(),
    })
}

/// Whether the `μ`-coefficients separate the Φ-family from the Ψ-family.
pub fn families_distinct(n: i64, r: Slope) -> Result<bool> {
    if n < 3 || !in_r_plus(r) {
        return Err(out_of_domain(format!("family separation needs n ≥ 3 and r in R+, got n = {n}, r = {r}")));
    }
    let plus = (n - 2).rem_euclid(n);
    let minus = (2 - n).rem_euclid(n);
    Ok(plus != 0 && minus != 0)
}
