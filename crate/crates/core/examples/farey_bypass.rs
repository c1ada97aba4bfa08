//! Farey neighbours, mediants and single bypass attachments.

use whitehead_census::farey::{bypass_slope, enumerate_s, farey_edge, mediant, mediant_in, HalfPlane};
use whitehead_census::Slope;

fn s(lit: &str) -> Slope {
    lit.parse().unwrap()
}

fn main() -> whitehead_census::Result<()> {
    println!("edge(0, inf) = {}", farey_edge(s("0"), s("inf")));
    println!("edge(5/2, 1/2) = {}", farey_edge(s("5/2"), s("1/2")));
    println!("mediant(0, 1) = {}", mediant(s("0"), s("1"))?);
    println!("mediant(0, inf) = {} on the right, {} on the left",
        mediant(s("0"), s("inf"))?,
        mediant_in(s("0"), s("inf"), HalfPlane::Left)?);

    // ruling slope 0, both directions
    for (dividing, ruling) in [("5/2", "0"), ("3", "0"), ("-5/7", "0"), ("inf", "5/2")] {
        let (d, r) = (s(dividing), s(ruling));
        println!("bypass {d} along {r}: {} (reversed: {})", bypass_slope(d, r, 1)?, bypass_slope(d, r, 0)?);
    }

    let r = s("5/2");
    let members: Vec<String> = enumerate_s(r, 12)?.iter().map(Slope::to_string).collect();
    println!("S({r}) up to denominator 12: {}", members.join(", "));
    Ok(())
}
