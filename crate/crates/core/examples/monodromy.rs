//! The monodromy matrix, its fixed slopes and the triangle certificate.

use whitehead_census::monodromy::{
    act_on_slope, converge_to_attractor, fixed_slopes, is_pseudo_anosov, phi_matrix, triangle_certificate,
    verify_phi_factorization,
};
use whitehead_census::Slope;

fn main() -> whitehead_census::Result<()> {
    for n in [3, 4, 5, 6, 10] {
        let m = phi_matrix(n)?;
        println!(
            "φ_{n} = {m}  trace {}  factorization {}  pA {}",
            m.trace(),
            verify_phi_factorization(n)?,
            is_pseudo_anosov(&m)
        );
    }

    let phi5 = phi_matrix(5)?;
    let mut s = Slope::INFINITY;
    print!("orbit of inf under φ_5:");
    for _ in 0..6 {
        print!(" {s}");
        s = act_on_slope(&phi5, s);
    }
    println!();

    let (sa, sr) = fixed_slopes(5)?;
    println!("s_a = {sa} ≈ {:.6}, s_r = {sr} ≈ {:.6}", sa.to_f64(), sr.to_f64());
    let (steps, err) = converge_to_attractor(5, 1e-12, 60)?;
    println!("iterates from 1 reach s_a within {err:.1e} after {steps} steps");

    for check in triangle_certificate(5)?.checks {
        println!("  [{}] {}", if check.pass { "ok" } else { "!!" }, check.name);
    }
    Ok(())
}
