use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use whitehead_census::census::{self, row_to_json, CensusRow, Format};
use whitehead_census::contfrac::{nf_expand, phi, psi};
use whitehead_census::farey::{bypass_slope, thicken_negative, thicken_positive, ThickeningResult};
use whitehead_census::surgery::{convert_contact_surgery, Knot, SurgeryInstruction};
use whitehead_census::verify::{run_suite, Suite};
use whitehead_census::{Error, Slope};

#[derive(Parser)]
#[command(name = "whitehead-census", version, about = "Tight contact structures on surgeries on the Whitehead link")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Table,
    Json,
    Csv,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Table => Format::Table,
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "table")]
    format: OutFormat,
    /// Write to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Census entry for a single M(n, r).
    Count {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[command(flatten)]
        output: Output,
    },
    /// Census over a grid of n and r.
    Census {
        /// `5`, `5..8`, `5..=8` or a comma list.
        #[arg(long, alias = "n-range", allow_hyphen_values = true)]
        n: String,
        /// Comma-separated slopes.
        #[arg(long, alias = "r-list", allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        output: Output,
    },
    Phi {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    Psi {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Negative continued fraction of x ≤ -1.
    Contfrac {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    Trace {
        #[command(subcommand)]
        kind: TraceKind,
    },
    Verify {
        #[arg(value_parser = ["all", "counts", "farey", "monodromy", "surgery"], default_value = "all")]
        suite: String,
        /// Denominator bound for the slope sweeps.
        #[arg(long, default_value_t = 12)]
        den_bound: u64,
    },
}

#[derive(Subcommand)]
enum TraceKind {
    /// Bypass thickening of the fibered piece from boundary slope s.
    Thicken {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// One bypass attachment.
    Bypass {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, default_value_t = 1)]
        flips: u32,
    },
    /// Conversion of a rational contact surgery into ±1 surgeries.
    Convert {
        #[arg(long)]
        knot: String,
        #[arg(long, allow_hyphen_values = true)]
        coeff: String,
    },
}

enum Failure {
    Usage(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e)
    }
}

fn slope(s: &str) -> Result<Slope, Error> {
    s.parse()
}

fn emit(text: &str, out: &Option<String>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::DegenerateInput(format!("{path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn join(path: &[Slope]) -> String {
    path.iter().map(Slope::to_string).collect::<Vec<_>>().join(" -> ")
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Count { n, r, output } => {
            let row = CensusRow::compute(n, slope(&r)?)?;
            let text = match output.format {
                OutFormat::Json => row_to_json(&row) + "\n",
                f => census::render(&[row], f.into()),
            };
            emit(&text, &output.out)?;
        }
        Cmd::Census { n, r, parallel, output } => {
            let rows = census::census(&census::parse_n_range(&n)?, &census::parse_r_list(&r)?, parallel)?;
            emit(&census::render(&rows, output.format.into()), &output.out)?;
        }
        Cmd::Phi { r } => println!("{}", phi(slope(&r)?)?),
        Cmd::Psi { r } => println!("{}", psi(slope(&r)?)?),
        Cmd::Contfrac { r } => println!("{:?}", nf_expand(slope(&r)?)?.terms()),
        Cmd::Trace { kind } => println!("{}", trace(kind)?),
        Cmd::Verify { suite, den_bound } => {
            let suites = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let mut ok = true;
            for s in &suites {
                let report = run_suite(*s, den_bound)?;
                ok &= report.passed();
                if suites.len() > 1 {
                    println!("{}: {report}", s.name());
                } else {
                    println!("{report}");
                }
            }
            if !ok {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn trace(kind: TraceKind) -> Result<String, Error> {
    Ok(match kind {
        TraceKind::Thicken { s } => {
            let s = slope(&s)?;
            let result = if s.is_finite() && s < Slope::ZERO { thicken_negative(s)? } else { thicken_positive(s)? };
            match result {
                ThickeningResult::ReachedInfinity { path } => join(&path),
                ThickeningResult::ReachedOne { bypass_path, structural_tail } => {
                    format!("{} => {}", join(&bypass_path), join(&structural_tail))
                }
                ThickeningResult::Stalled { at } => format!("stalled at {at}"),
            }
        }
        TraceKind::Bypass { s, r, flips } => {
            let (s, r) = (slope(&s)?, slope(&r)?);
            format!("{s} -> {}", bypass_slope(s, r, flips)?)
        }
        TraceKind::Convert { knot, coeff } => {
            let knot: Knot = knot.parse()?;
            convert_contact_surgery(&SurgeryInstruction::new(knot, slope(&coeff)?))?.to_string()
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
