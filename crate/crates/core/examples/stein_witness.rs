//! A positive Dehn twist factorization of the monodromy.

use whitehead_census::twist::{reduce_twist_word, stein_witness, TwistWord};

fn main() -> whitehead_census::Result<()> {
    let w: TwistWord = "γ^-1 α^-2 γ".parse()?;
    println!("{w}  =>  {}", reduce_twist_word(&w));

    for n in [3, 5, 8] {
        let w = stein_witness(n)?;
        println!("n = {n}: {w}  (positive: {}, exponent sum {})", w.is_positive(), w.exponent_sum());
    }
    Ok(())
}
