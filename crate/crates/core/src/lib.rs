//! Exact surgery invariants of knots and two-component links in the 3-sphere.
//!
//! The crate evaluates the Boyer–Lines surgery formula for the Casson
//! invariant, the rational surgery formula for the Casson–Walker invariant of
//! surgeries on two-component links, and the Casson–Gordon surgery formula,
//! all in exact rational arithmetic. On top of these it implements necessary
//! conditions for purely and chirally cosmetic surgeries.
//!
//! Module map:
//!
//! * [`arith`]: rationals, slopes, the sawtooth function, Dedekind sums and symbols.
//! * [`links`]: PD-code diagrams, link families and a skein-recursion Conway oracle.
//! * [`seifert`]: Seifert matrices, Alexander data, Levine–Tristram signatures.
//! * [`casson_walker`]: the two surgery formulas.
//! * [`obstructions`]: cosmetic-surgery tests and candidate slope enumeration.

pub mod arith;
pub mod casson_walker;
mod error;
pub mod links;
pub mod obstructions;
pub mod seifert;

pub use arith::{Rational, Slope};
pub use casson_walker::{LinkingMatrix2, SurgeryResult};
pub use error::{Error, Result};
pub use links::{ConwayPoly, Crossing, CrossingSign, LinkDiagram, LinkSurgeryInvariants, SkeinOracle};
pub use obstructions::{Evidence, ObstructionReport, Verdict};
pub use seifert::SeifertMatrix;

pub use num_bigint::BigInt;
