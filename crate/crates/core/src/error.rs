use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("element {element} is both below and above the subposet")]
    AmbiguousComparability { element: usize },
    #[error("subset {0:?} is not convex")]
    NotConvex(Vec<usize>),
    #[error("subset {0:?} is not an order ideal")]
    NotAnIdeal(Vec<usize>),
    #[error("{what}: {got} exceeds the configured bound {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("invalid labelling: {0}")]
    InvalidLabel(String),
    #[error("labelling is not a bijection onto 1..{0}")]
    NotBijective(usize),
    #[error("cylindric cells are not convex in the quotient")]
    NotConvexInQuotient,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("transfer subset is out of range")]
    SubsetOutOfRange,
    #[error("pair of tableaux is not in the image of the transfer map")]
    NotInImage,
    #[error("{nvars} variables cannot resolve an expansion of degree {degree}")]
    TruncationTooSmall { nvars: usize, degree: usize },
    #[error("polynomials have {0} and {1} variables")]
    VarMismatch(usize, usize),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("malformed partitions: {0}")]
    MalformedPartitions(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
