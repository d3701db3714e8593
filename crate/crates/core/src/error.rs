use thiserror::Error;

use crate::lattice::PrimeInterval;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element {0} is out of range for a lattice with {1} elements")]
    ElementOutOfRange(usize, usize),
    #[error("cover pair ({0}, {1}) listed more than once")]
    DuplicateCover(usize, usize),
    #[error("covering relation is not a partial order: {0}")]
    NotAPoset(String),
    #[error("cover pair ({0}, {1}) is implied by transitivity")]
    RedundantCover(usize, usize),
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("{0:?} is not a prime interval")]
    NotAPrimeInterval((usize, usize)),
    #[error("elements {0:?} do not form a sublattice")]
    NotASublattice(Vec<usize>),
    #[error("{0:?} is not a 4-cell")]
    NotAFourCell([usize; 4]),
    #[error("element {0} is not a tab")]
    NotATab(usize),
    #[error("element {e} is not the eye inserted into cell {cell:?}")]
    CellMismatch { cell: [usize; 4], e: usize },
    #[error("congruence lattice exceeds {0} members")]
    SizeLimit(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("construction produced an invalid lattice: {0}")]
    ValidationFailed(String),
    #[error("invalid corpus spec: {0}")]
    InvalidSpec(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl Error {
    pub(crate) fn not_prime(p: PrimeInterval) -> Self {
        Error::NotAPrimeInterval((p.lo, p.hi))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
