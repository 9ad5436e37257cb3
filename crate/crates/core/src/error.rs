use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("incompatible rings: {0}")]
    IncompatibleRings(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element is not a unit")]
    NonUnit,
    #[error("matrix is singular (determinant is not a unit)")]
    Singular,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not in class J: its residue has repeated roots")]
    NotInClassJ,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("{0} is not an N-th root of unity for the requested length")]
    NotRootOfUnity(String),
    #[error("spectrum is not the transform of a base-ring element")]
    NotInImage,
    #[error("constant-term form is degenerate: f(0) = 0")]
    DegenerateForm,
    #[error("enumeration budget exceeded: {size} codewords > {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("conditions unmet: {0}")]
    ConditionsUnmet(String),
    #[error("internal certificate failed: {0}")]
    Certificate(String),
}

impl Error {
    /// True for errors caused by inputs violating an operation's preconditions,
    /// as opposed to a mathematical obstruction discovered while computing.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotPrime(_)
                | Error::InvalidRing(_)
                | Error::InvalidInput(_)
                | Error::IncompatibleRings(_)
                | Error::DimensionMismatch { .. }
                | Error::NotMonic
                | Error::NotRootOfUnity(_)
                | Error::BudgetExceeded { .. }
        )
    }
}
