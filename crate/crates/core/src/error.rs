use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("linear system has no solution")]
    NoSolution,
    #[error("map is not convolution invertible")]
    NotInvertible,
    #[error("cocycle is not convolution invertible")]
    CocycleNotInvertible,
    #[error("symbol {0} outside the domain of the map")]
    OutsideDomain(String),
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },
    #[error("evaluation at degree {degree} exceeds the exact window (< {window})")]
    WindowExceeded { degree: usize, window: usize },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid Lie algebra: {0}")]
    InvalidLie(String),
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("section is not a right inverse of the projection at {0}")]
    SectionInvalid(String),
    #[error("value {0} does not lie in the image of the kernel")]
    NotInKernel(String),
    #[error("subobject does not map onto the quotient")]
    NotSurjective,
    #[error("intersection with the base does not match the kernel: {0}")]
    KernelMismatch(String),
    #[error("span is not closed: {0}")]
    NotClosed(String),
    #[error("action fails the module axioms: {0}")]
    ActionInvalid(String),
    #[error("cleavage check failed: {0}")]
    NotCleft(String),
    #[error("homomorphism check failed at {0}")]
    HomomorphismFailure(String),
    #[error("quotient algebra unsupported: {0}")]
    UnsupportedQuotient(String),
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
}
