use alloc::string::String;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree {0} out of range")]
    DegreeOutOfRange(u32),
    #[error("field order too large for p = {p}, k = {k}")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("matrix order exceeds cap {0}")]
    OrderExceedsCap(u64),
    #[error("group has more than {0} elements")]
    GroupTooLarge(usize),
    #[error("no generators supplied")]
    NoGenerators,
    #[error("not a homomorphism: relation fails at element {element}, generator {generator}")]
    NotAHomomorphism { element: usize, generator: usize },
    #[error("weight {weight} is not p-restricted for p = {p}")]
    WeightOutOfRange { weight: u32, p: u32 },
    #[error("twist exponent {b} out of range for a field of degree {k}")]
    TwistDegreeOutOfRange { b: u32, k: u32 },
    #[error("representations live on different groups or fields")]
    GroupMismatch,
    #[error("matrix is not an element of the group")]
    NotInGroup,
    #[error("meataxe inconclusive after {0} attempts")]
    Inconclusive(usize),
    #[error("supplied module {0} is not irreducible")]
    ListNotIrreducible(usize),
    #[error("irreducible list does not cover the socle")]
    IncompleteIrreducibleList,
    #[error("neither module is certified irreducible; heuristic answer {0}")]
    HeuristicOnly(bool),
    #[error("cocycle does not satisfy the cocycle relations")]
    NotACocycle,
    #[error("module is not irreducible")]
    NotIrreducible,
    #[error("module is irreducible but not absolutely irreducible (End has dimension {0})")]
    NotAbsolutelyIrreducible(usize),
    #[error("invalid root system type {0}")]
    InvalidType(String),
    #[error("inequality excluded for type {0}")]
    ExcludedType(String),
    #[error("Weil construction failed: {0}")]
    WeilConstructionFailed(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
}

pub type Result<T> = core::result::Result<T, Error>;
