//! The Weeks manifold is M(5, 5/2).
//!
//!     cargo run --example weeks_manifold

use whitehead_census::counts::main_count;
use whitehead_census::contfrac::{phi, psi};
use whitehead_census::Slope;

fn main() -> whitehead_census::Result<()> {
    let r: Slope = "5/2".parse()?;
    println!("Φ({r}) = {}, Ψ({r}) = {}", phi(r)?, psi(r)?);

    let b = main_count(5, r)?;
    println!("status      {}", b.status);
    println!("Ψ-family    {}", b.psi_family);
    println!("Φ-family    {}", b.phi_family);
    println!("total       {}", b.total);
    println!("Stein       {}", b.stein_fillable);
    println!("vot ≥       {}", b.vot_lower);
    Ok(())
}
