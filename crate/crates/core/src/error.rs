use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported type `{0}`: supported factors are A, B, C, F4 and G2")]
    UnsupportedType(String),
    #[error("invalid rank {rank} for type {family} (need {family}n with n >= {min})")]
    InvalidRank { family: char, rank: usize, min: usize },
    #[error("a Dynkin type needs at least one factor")]
    EmptyType,
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("node {node} out of range (valid nodes: 0..{count})")]
    NodeOutOfRange { node: usize, count: usize },
    #[error("empty parabolic marking")]
    EmptyMarking,
    #[error("marking has {0} nodes; a Fano index needs a maximal parabolic (exactly one node)")]
    NotMaximal(usize),
    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i8>),
    #[error("weight has {got} coefficients, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("weight is not dominant integral")]
    NotDominantIntegral,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("catalog bound must be at least 3, got {0}")]
    CatalogBound(u32),
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("{0} has no drum embedding model; ambient dimension not applicable")]
    NotApplicable(String),
    #[error("inconsistent blow-up data: {0}")]
    Inconsistent(String),
}
