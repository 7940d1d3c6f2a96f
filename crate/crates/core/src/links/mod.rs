//! Oriented link diagrams, link families and Conway polynomials.

mod conway;
mod diagram;
pub mod families;
mod invariants;
mod pd;
pub mod skein;

pub use conway::{BigIntJson, ConwayPoly};
pub use diagram::{Crossing, CrossingSign, LinkDiagram};
pub use families::{braid_closure, hopf_link, pretzel_diagram, pretzel_link, torus2_diagram, unknot, unlink};
pub use invariants::{invariants_from_diagram, pretzel_a3_closed_form, v3, LinkSurgeryInvariants};
pub use pd::{parse_pd, write_pd};
pub use skein::{conway_polynomial, SkeinOracle, DEFAULT_CROSSING_LIMIT};
