//! Exact arithmetic behind the census of tight contact structures on the
//! surgeries `M(n, r)` on the Whitehead link.
//!
//! The crate is organised bottom-up:
//!
//! * [`slope`], [`quadratic`] and [`farey`]: extended rationals, quadratic
//!   boundary points, the Farey graph and bypass dynamics.
//! * [`contfrac`] and [`counts`]: negative continued fractions, `Φ`, `Ψ` and
//!   every closed-form count.
//! * [`surgery`] and [`chern`]: conversion of rational contact surgeries to
//!   `±1` surgeries, stabilization choices and homology bookkeeping.
//! * [`monodromy`] and [`twist`]: the monodromy matrix and Dehn-twist words.
//! * [`census`] and [`verify`]: report rows and self-checking suites used by
//!   the command-line tool.

pub mod census;
pub mod chern;
pub mod contfrac;
pub mod counts;
pub mod error;
pub mod farey;
pub mod monodromy;
pub mod quadratic;
pub mod slope;
pub mod surgery;
pub mod twist;
pub mod verify;

pub use error::{Error, Result};
pub use quadratic::{CirclePoint, Quadratic};
pub use slope::Slope;
