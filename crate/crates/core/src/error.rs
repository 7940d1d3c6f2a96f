use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sawtooth undefined at integers (got {0})")]
    SawtoothAtInteger(String),

    #[error("modulus must be nonzero")]
    ZeroModulus,

    #[error("arguments {p} and {q} are not coprime")]
    NotCoprime { p: BigInt, q: BigInt },

    #[error("symbol undefined at infinite slope")]
    InfiniteSlope,

    #[error("slope 0/0 is not a slope")]
    NullSlope,

    #[error("malformed slope {0:?}")]
    MalformedSlope(String),

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("diagram too large for skein oracle ({crossings} crossings, limit {limit})")]
    CrossingLimit { crossings: usize, limit: usize },

    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },

    #[error("component index {0} out of range")]
    ComponentIndex(usize),

    #[error("matrix is not a valid Seifert matrix for this pipeline")]
    NotSeifert,

    #[error("Seifert matrix does not describe a knot (constant Conway coefficient {0})")]
    NotAKnot(BigInt),

    #[error("omega is not on the unit circle (|omega| = {0})")]
    NotUnitModulus(String),

    #[error("formula applied outside its stated range: {0}")]
    OutOfRange(String),

    #[error("not a rational homology sphere (linking matrix determinant is zero)")]
    NotRationalHomologySphere,

    #[error("theorem hypotheses require linking number zero (got {0})")]
    NonzeroLinking(BigInt),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
