//! Self-checks run by `whitehead-census verify`.

use std::fmt;

use num_integer::Integer;

use crate::chern::{chern_data, families_distinct, ChernData, Family};
use crate::counts::{dg_surgery_count, in_r_plus, main_count, Status, Total};
use crate::error::Result;
use crate::farey::{enumerate_s, farey_edge, region_guards, thicken_negative, thicken_positive, ThickeningResult};
use crate::monodromy::{fixed_slope_bounds, triangle_certificate, verify_phi_factorization};
use crate::slope::Slope;
use crate::surgery::{
    convert_contact_surgery, enumerate_stab_choices, phi_family_choices, phi_family_link, psi_family_choices, Knot,
    SurgeryInstruction,
};
use crate::twist::{reduce_twist_word, stein_witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Farey,
    Monodromy,
    Surgery,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Counts, Suite::Farey, Suite::Monodromy, Suite::Surgery];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Farey => "farey",
            Suite::Monodromy => "monodromy",
            Suite::Surgery => "surgery",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| crate::Error::Parse(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<(String, bool)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .checks
            .iter()
            .map(|(name, ok)| format!("{name} {}", if *ok { "ok" } else { "FAIL" }))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

/// Reduced fractions `p/q` with `lo ≤ p/q ≤ hi` and `q ≤ den_bound`.
fn rationals(lo: i64, hi: i64, den_bound: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    for q in 1..=den_bound {
        for p in lo * q..=hi * q {
            if p.gcd(&q) == 1 {
                out.push(Slope::new(p, q).expect("q ≥ 1"));
            }
        }
    }
    out.sort();
    out
}

fn counts_suite() -> Result<Vec<(String, bool)>> {
    let weeks = main_count(5, Slope::new(5, 2)?)?.total;
    let mut table = true;
    for n in 5..=10 {
        for m in -20..=20i64 {
            if m == 1 || m == 4 {
                continue;
            }
            let b = main_count(n, Slope::from_int(m))?;
            let expected = match m {
                0 => Total::Infinite,
                m if m < 0 => Total::Finite((m - 1).unsigned_abs()),
                2 => Total::Finite(3),
                _ => Total::Finite(4),
            };
            let status_ok = if m == 0 { b.status == Status::InfinitelyMany } else { b.status == Status::Classified };
            table &= b.total == expected && status_ok;
        }
    }
    Ok(vec![(format!("weeks={weeks}"), weeks == Total::Finite(7)), ("integer-table".into(), table)])
}

fn farey_suite(den_bound: i64) -> Result<Vec<(String, bool)>> {
    let two = Slope::from_int(2);
    let mut monotone = true;
    for s in rationals(2, 12, den_bound).into_iter().filter(|&s| s > two) {
        let path = match thicken_positive(s)? {
            ThickeningResult::ReachedInfinity { path } => path,
            ThickeningResult::Stalled { .. } => continue,
            ThickeningResult::ReachedOne { .. } => {
                monotone = false;
                continue;
            }
        };
        monotone &= path.windows(2).all(|w| w[0] < w[1] && farey_edge(w[0], w[1]));
    }
    let mut guards = true;
    for r in rationals(2, 12, den_bound).into_iter().filter(|&r| in_r_plus(r)) {
        for s in enumerate_s(r, 2 * den_bound as u64)? {
            let g = region_guards(s);
            guards &= s > two && !g.in_gap;
            guards &= matches!(thicken_positive(s)?, ThickeningResult::ReachedInfinity { .. });
        }
    }
    for r in rationals(-12, 0, den_bound).into_iter().filter(|&r| r < Slope::ZERO) {
        for s in enumerate_s(r, 2 * den_bound as u64)?.into_iter().filter(|s| !s.is_zero()) {
            guards &= s < Slope::ZERO;
            guards &= matches!(thicken_negative(s)?, ThickeningResult::ReachedOne { .. });
        }
    }
    Ok(vec![("bypass-monotone".into(), monotone), ("S(r)-guards".into(), guards)])
}

fn monodromy_suite() -> Result<Vec<(String, bool)>> {
    let mut factor = true;
    for n in 3..=200 {
        factor &= verify_phi_factorization(n)?;
    }
    let mut triangles = true;
    let mut witness = true;
    for n in 5..=50 {
        triangles &= fixed_slope_bounds(n)? && triangle_certificate(n)?.all_pass();
        let w = stein_witness(n)?;
        let target: crate::twist::TwistWord = format!("α β α^{} δ σ", n - 3).parse()?;
        witness &= w.is_positive() && w == reduce_twist_word(&target) && w.exponent_sum() == n + 1;
    }
    Ok(vec![
        ("factorization".into(), factor),
        ("triangles".into(), triangles),
        ("stein-witness".into(), witness),
    ])
}

fn surgery_suite(den_bound: i64) -> Result<Vec<(String, bool)>> {
    let mut oracle = true;
    for q in 1..=den_bound {
        for p in -20..=20i64 {
            if p == 0 || p.gcd(&q) != 1 {
                continue;
            }
            let link = convert_contact_surgery(&SurgeryInstruction::new(Knot::Trefoil, Slope::new(p, q)?))?;
            oracle &= dg_surgery_count(p, q)? == enumerate_stab_choices(&link).len() as u64;
        }
    }
    let mut separation = true;
    for r in rationals(2, 8, den_bound.min(6)).into_iter().filter(|&r| in_r_plus(r)) {
        for n in 3..=12 {
            separation &= families_distinct(n, r)?;
            for c in psi_family_choices(r)? {
                separation &= matches!(chern_data(Family::Psi, n, r, &c)?, ChernData::Psi(e) if e.n_part == 0);
            }
            let plus = (n - 2).rem_euclid(n) as u64;
            let minus = (2 - n).rem_euclid(n) as u64;
            for c in phi_family_choices(&phi_family_link(n, r)?) {
                separation &= matches!(
                    chern_data(Family::Phi, n, r, &c)?,
                    ChernData::Phi(p) if (p.mu_coeff == plus || p.mu_coeff == minus) && p.mu_coeff != 0
                );
            }
        }
    }
    Ok(vec![("dg-vs-enumeration".into(), oracle), ("chern-separation".into(), separation)])
}

pub fn run_suite(suite: Suite, den_bound: u64) -> Result<SuiteReport> {
    let bound = den_bound.clamp(1, 1000) as i64;
    let checks = match suite {
        Suite::Counts => counts_suite()?,
        Suite::Farey => farey_suite(bound)?,
        Suite::Monodromy => monodromy_suite()?,
        Suite::Surgery => surgery_suite(bound)?,
    };
    Ok(SuiteReport { suite, checks })
}
