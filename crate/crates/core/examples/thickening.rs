//! Bypass thickening of the fibered piece.

use whitehead_census::farey::{thicken_negative, thicken_positive, ThickeningResult};
use whitehead_census::Slope;

fn show(s: Slope, t: ThickeningResult) {
    let fmt = |p: &[Slope]| p.iter().map(Slope::to_string).collect::<Vec<_>>().join(" -> ");
    match t {
        ThickeningResult::ReachedInfinity { path } => println!("{s:>6}: {}", fmt(&path)),
        ThickeningResult::ReachedOne { bypass_path, structural_tail } => {
            println!("{s:>6}: {} then {}", fmt(&bypass_path), fmt(&structural_tail))
        }
        ThickeningResult::Stalled { at } => println!("{s:>6}: stalled at exceptional slope {at}"),
    }
}

fn main() -> whitehead_census::Result<()> {
    for lit in ["7/2", "11/3", "22/5", "17/4", "6", "inf"] {
        let s: Slope = lit.parse()?;
        show(s, thicken_positive(s)?);
    }
    for lit in ["-1", "-3/2", "-5/7", "-12/5"] {
        let s: Slope = lit.parse()?;
        show(s, thicken_negative(s)?);
    }
    Ok(())
}
