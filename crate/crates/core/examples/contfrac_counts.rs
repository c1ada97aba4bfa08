//! Negative continued fractions and the counts built from them.

use whitehead_census::contfrac::{nf_eval, nf_expand, phi, psi};
use whitehead_census::counts::{dg_surgery_count, nr_boundary_counts, solid_torus_count};
use whitehead_census::Slope;

fn main() -> whitehead_census::Result<()> {
    for lit in ["-2", "-4/3", "-7/5", "-13/4"] {
        let x: Slope = lit.parse()?;
        let cf = nf_expand(x)?;
        println!("{x:>6} = {:?} (back: {})", cf.terms(), nf_eval(cf.terms())?);
    }

    println!();
    println!("{:>6} {:>4} {:>4}", "r", "Φ", "Ψ");
    for lit in ["1", "2", "5/2", "3", "7/3", "1/3", "-3", "-5/2"] {
        let r: Slope = lit.parse()?;
        println!("{r:>6} {:>4} {:>4}", phi(r)?, psi(r)?);
    }

    println!();
    println!("solid torus, slope 3/(-2): {}", solid_torus_count(-2, 3)?);
    println!("contact 3/2 surgery: {} structures", dg_surgery_count(3, 2)?);
    println!("contact -3/2 surgery: {} structures", dg_surgery_count(-3, 2)?);
    let nr = nr_boundary_counts("5/2".parse()?)?;
    println!("N_(5/2): {} at inf, {} at 1 (meridian becomes {})", nr.at_infinity, nr.at_one, nr.reparametrized_meridian);
    Ok(())
}
