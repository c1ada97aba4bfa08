//! Homology classes that tell the two families apart.

use whitehead_census::chern::{chern_data, families_distinct, h1, ChernData, Family};
use whitehead_census::surgery::{phi_family_choices, phi_family_link, psi_family_choices};
use whitehead_census::Slope;

fn main() -> whitehead_census::Result<()> {
    let (n, r): (i64, Slope) = (5, "5/2".parse()?);
    let g = h1(n, r)?;
    println!("H_1(M({n}, {r})) = {g}, order {:?}", g.order());

    for c in psi_family_choices(r)? {
        if let ChernData::Psi(e) = chern_data(Family::Psi, n, r, &c)? {
            println!("Ψ rot {:?}: PD(c1) = {e}", c.rots());
        }
    }
    for c in phi_family_choices(&phi_family_link(n, r)?) {
        if let ChernData::Phi(p) = chern_data(Family::Phi, n, r, &c)? {
            println!("Φ rot {:?}: PD(c1) = {}[μ] + h[ν]", p.rot_tuple, p.mu_coeff);
        }
    }
    println!("families distinct: {}", families_distinct(n, r)?);
    Ok(())
}
