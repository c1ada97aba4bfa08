//! Machine-readable census output, computed in parallel.
//!
//!     cargo run --example census_export -- json

use whitehead_census::census::{census, parse_n_range, parse_r_list, render, rows_from_csv, rows_to_csv, Format};

fn main() -> whitehead_census::Result<()> {
    let format: Format = std::env::args().nth(1).as_deref().unwrap_or("csv").parse()?;
    let ns = parse_n_range("5..=7")?;
    let rs = parse_r_list("-3,-1/2,0,1/2,1,2,5/2,3,4,9/2,5")?;
    let rows = census(&ns, &rs, true)?;
    assert_eq!(rows_from_csv(&rows_to_csv(&rows))?, rows);
    print!("{}", render(&rows, format));
    Ok(())
}
