use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generators must be positive, got 0")]
    ZeroGenerator,

    #[error("generators have gcd {gcd}; the complement is infinite")]
    NotCofinite { gcd: u32 },

    #[error("invalid gap list: {reason}")]
    InvalidGapList { reason: String },

    #[error("complement is not closed under addition: {a} + {b} = {sum} is a gap")]
    NotASemigroup { a: u32, b: u32, sum: u32 },

    #[error("{n} is not a positive member of the semigroup")]
    NotMember { n: u32 },

    #[error("semigroup is not {gamma}-hyperelliptic")]
    NotGammaHyperelliptic { gamma: u32 },

    #[error("genus {genus} is below the admissible range (needs genus >= {min}) for gamma = {gamma}")]
    GenusOutOfRange { gamma: u32, genus: u32, min: u32 },

    #[error("expected {expected} odd members below 2g, found {found}")]
    MalformedOddList { expected: usize, found: usize },

    #[error("construction out of range: {reason}")]
    ConstructionOutOfRange { reason: String },

    #[error("invalid parameters: {reason}")]
    InvalidParameters { reason: String },

    #[error("tableaux have different genus ({left} vs {right})")]
    GenusMismatch { left: u32, right: u32 },

    #[error("tree enumeration supports genus <= {max}, requested {requested}")]
    GenusTooLarge { requested: u32, max: u32 },
}
