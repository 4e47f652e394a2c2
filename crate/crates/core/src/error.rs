use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no facets given")]
    EmptyInput,
    #[error("facets have mixed sizes ({first} and {other})")]
    MixedFacetSizes { first: usize, other: usize },
    #[error("invalid facet: {0}")]
    InvalidFacet(String),
    #[error("face {0:?} is not in the complex")]
    FaceNotPresent(Vec<String>),
    #[error("vertex {0:?} is not in the complex")]
    VertexNotPresent(String),
    #[error("dimension {dim} out of range {lo}..={hi}")]
    DimensionOutOfRange { dim: isize, lo: isize, hi: isize },
    #[error("operation needs a {expected}-dimensional complex, got dimension {got}")]
    WrongDimension { expected: isize, got: isize },
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vectors are linearly dependent")]
    DependentVectors,
    #[error("weights must be strictly positive")]
    NonPositiveWeight,
    #[error("search space 2^{log2} exceeds the configured cap 2^{cap}")]
    SearchSpaceTooLarge { log2: u32, cap: u32 },
    #[error("graph on {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("subset must be a nonempty proper subset of the vertex set")]
    InvalidSubset,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("link of vertex {0:?} is disconnected")]
    DisconnectedLink(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unsupported field order q = {0}")]
    UnsupportedField(u32),
    #[error("generator set is not closed under inverses")]
    NonSymmetricGenerators,
    #[error("generated group exceeds the cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("configuration error: {0}")]
    ConfigError(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
