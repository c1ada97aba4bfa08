//! Integer surgeries M(n, m) for a few n.

use whitehead_census::census::{census, render, Format};
use whitehead_census::Slope;

fn main() -> whitehead_census::Result<()> {
    let rs: Vec<Slope> = (-5..=7).map(Slope::from_int).collect();
    let rows = census(&[3, 4, 5, 6], &rs, false)?;
    print!("{}", render(&rows, Format::Table));
    Ok(())
}
