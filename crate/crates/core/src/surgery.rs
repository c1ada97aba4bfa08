//! Rational contact surgery on Legendrian knots, converted into contact
//! `(±1)`-surgeries on stabilized push-offs, and the enumeration of the
//! resulting stabilization choices.

use std::fmt;

use crate::contfrac::expand_negative;
use crate::counts::positive_split;
use crate::error::{out_of_domain, Error, Result};
use crate::slope::Slope;

/// The two Legendrian knots that appear in the surgery diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Knot {
    /// Right-handed trefoil with `tb = 1`, `rot = 0`.
    Trefoil,
    /// Unknot with `tb = -1`, `rot = 0`.
    Unknot,
}

impl Knot {
    pub fn tb(&self) -> i64 {
        match self {
            Knot::Trefoil => 1,
            Knot::Unknot => -1,
        }
    }

    pub fn rot(&self) -> i64 {
        0
    }
}

impl std::str::FromStr for Knot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Knot> {
        match s.to_ascii_lowercase().as_str() {
            "trefoil" => Ok(Knot::Trefoil),
            "unknot" => Ok(Knot::Unknot),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurgeryInstruction {
    pub knot: Knot,
    /// Measured against the contact framing.
    pub coefficient: Slope,
}

impl SurgeryInstruction {
    pub fn new(knot: Knot, coefficient: Slope) -> SurgeryInstruction {
        SurgeryInstruction { knot, coefficient }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    PlusOne,
    MinusOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub sign: Sign,
    pub stab_budget: u32,
    pub base_rot: i64,
}

/// Components in push-off order: each one is a push-off of the previous,
/// stabilized `stab_budget` more times.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConvertedLink {
    pub components: Vec<Component>,
}

impl ConvertedLink {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `Π (budget + 1)`.
    pub fn choice_count(&self) -> u64 {
        self.components.iter().map(|c| c.stab_budget as u64 + 1).product()
    }
}

impl fmt::Display for ConvertedLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            match (c.sign, c.stab_budget) {
                (Sign::PlusOne, _) => f.write_str("+1")?,
                (Sign::MinusOne, 0) => f.write_str("-1")?,
                (Sign::MinusOne, 1) => f.write_str("-1 (1 stab)")?,
                (Sign::MinusOne, b) => write!(f, "-1 ({b} stabs)")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StabChoice {
    pub pos: u32,
    pub neg: u32,
    /// Rotation number of the component after its stabilizations. It
    /// accumulates along the chain since each component starts as a
    /// push-off of the previous one.
    pub rot: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotAssignment {
    pub components: Vec<StabChoice>,
}

impl RotAssignment {
    pub fn rots(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.rot).collect()
    }
}

/// Reason why the surgery is known to be overtwisted, if any.
pub fn overtwisted_guard(instr: &SurgeryInstruction) -> Option<&'static str> {
    let c = instr.coefficient;
    if c.is_zero() {
        return Some("contact 0-surgery");
    }
    if instr.knot == Knot::Unknot && c > Slope::ZERO && c < Slope::ONE {
        return Some("unknot with 0<r<1");
    }
    None
}

fn negative_chain(c: Slope, base_rot: i64, out: &mut Vec<Component>) -> Result<()> {
    let cf = expand_negative(c)?;
    for (i, &t) in cf.terms().iter().enumerate() {
        // the leading term is shifted by one: c = [r0 + 1, r1, ...]
        let budget = if i == 0 { t + 1 } else { t + 2 };
        let stab_budget = u32::try_from(budget.unsigned_abs()).map_err(|_| Error::Overflow("stabilization budget"))?;
        out.push(Component { sign: Sign::MinusOne, stab_budget, base_rot });
    }
    Ok(())
}

pub fn convert_contact_surgery(instr: &SurgeryInstruction) -> Result<ConvertedLink> {
    if let Some(reason) = overtwisted_guard(instr) {
        return Err(Error::Overtwisted(reason.to_string()));
    }
    let c = instr.coefficient;
    if c.is_infinite() {
        return Err(Error::DegenerateInput("surgery coefficient inf".into()));
    }
    let base_rot = instr.knot.rot();
    let mut components = Vec::new();
    if c == Slope::ONE {
        components.push(Component { sign: Sign::PlusOne, stab_budget: 0, base_rot });
    } else if c < Slope::ZERO {
        negative_chain(c, base_rot, &mut components)?;
    } else {
        let (k, rest) = positive_split(c)?;
        for _ in 0..k {
            components.push(Component { sign: Sign::PlusOne, stab_budget: 0, base_rot });
        }
        negative_chain(rest, base_rot, &mut components)?;
    }
    Ok(ConvertedLink { components })
}

/// Every way of splitting each budget into positive and negative
/// stabilizations, lexicographic in the number of positive ones.
pub fn enumerate_stab_choices(link: &ConvertedLink) -> Vec<RotAssignment> {
    let mut out = Vec::with_capacity(link.choice_count() as usize);
    let mut pos = vec![0u32; link.len()];
    loop {
        let mut rot = link.components.first().map_or(0, |c| c.base_rot);
        let components = link
            .components
            .iter()
            .zip(&pos)
            .map(|(c, &p)| {
                let neg = c.stab_budget - p;
                rot += p as i64 - neg as i64;
                StabChoice { pos: p, neg, rot }
            })
            .collect();
        out.push(RotAssignment { components });
        // odometer, last component fastest
        let mut i = link.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pos[i] < link.components[i].stab_budget {
                pos[i] += 1;
                break;
            }
            pos[i] = 0;
        }
    }
}

/// Contact `(r - 1)`-surgery on the trefoil.
pub fn psi_family_link(r: Slope) -> Result<ConvertedLink> {
    if r.is_infinite() {
        return Err(Error::InfiniteInput("Ψ-family diagram"));
    }
    convert_contact_surgery(&SurgeryInstruction::new(Knot::Trefoil, r.add_int(-1)?))
}

/// Stabilization choices of the Ψ-family; empty when the diagram is
/// overtwisted.
pub fn psi_family_choices(r: Slope) -> Result<Vec<RotAssignment>> {
    match psi_family_link(r) {
        Ok(link) => Ok(enumerate_stab_choices(&link)),
        Err(Error::Overtwisted(_)) => Ok(Vec::new()),
        Err(e) => Err(e),
    }
}

/// Contact `(n - 1)`-surgery on the trefoil together with contact
/// `-1/(r - 1)`-surgery on the unknot. For `r = 1` the unknot carries `∞`
/// surgery and is dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiFamilyLink {
    pub trefoil: ConvertedLink,
    pub unknot: Option<ConvertedLink>,
}

impl PhiFamilyLink {
    pub fn len(&self) -> usize {
        self.trefoil.len() + self.unknot.as_ref().map_or(0, |u| u.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn choice_count(&self) -> u64 {
        self.trefoil.choice_count() * self.unknot.as_ref().map_or(1, |u| u.choice_count())
    }
}

pub fn phi_family_link(n: i64, r: Slope) -> Result<PhiFamilyLink> {
    if n < 3 {
        return Err(out_of_domain(format!("Φ-family needs n ≥ 3, got {n}")));
    }
    if r.is_infinite() || r < Slope::ONE {
        return Err(out_of_domain(format!("Φ-family needs 1 ≤ r < inf, got {r}")));
    }
    let trefoil = convert_contact_surgery(&SurgeryInstruction::new(Knot::Trefoil, Slope::from_int(n - 1)))?;
    let unknot = if r == Slope::ONE {
        None
    } else {
        let c = r.add_int(-1)?.recip().neg();
        Some(convert_contact_surgery(&SurgeryInstruction::new(Knot::Unknot, c))?)
    };
    Ok(PhiFamilyLink { trefoil, unknot })
}

/// Choices for the trefoil chain followed by the unknot chain.
pub fn phi_family_choices(link: &PhiFamilyLink) -> Vec<RotAssignment> {
    let tref = enumerate_stab_choices(&link.trefoil);
    let unk = match &link.unknot {
        Some(u) => enumerate_stab_choices(u),
        None => vec![RotAssignment { components: vec![] }],
    };
    let mut out = Vec::with_capacity(tref.len() * unk.len());
    for t in &tref {
        for u in &unk {
            let mut components = t.components.clone();
            components.extend_from_slice(&u.components);
            out.push(RotAssignment { components });
        }
    }
    out
}
