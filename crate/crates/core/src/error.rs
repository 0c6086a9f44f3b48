use alloc::string::String;

/// Every failure the core library can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown root system type {0:?}")]
    UnknownType(String),
    #[error("simple index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("{0} is not a minimal coset representative")]
    NotMinimalRepresentative(String),
    #[error("right operators are only defined on the full flag variety")]
    RightOperatorOnParabolic,
    #[error("operator family {0} is not available in this theory")]
    WrongTheory(&'static str),
    #[error("exact division failed at fixed point {0}")]
    NotDivisible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("classes live on different spaces")]
    SpaceMismatch,
    #[error("word {0:?} is not reduced")]
    NonReducedWord(String),
    #[error("line bundle weight is not invariant under the parabolic subgroup")]
    NonInvariantWeight,
    #[error("restriction at {0} is not a polynomial")]
    NonPolynomial(String),
    #[error("pairing matrix is singular")]
    SingularPairing,
    #[error("Schubert expansion did not terminate: {0}")]
    ExpansionFailed(String),
    #[error("structure table invalid at ({u}, {v}): {reason}")]
    InvalidTable { u: String, v: String, reason: String },
    #[error("quantum product needs entry ({0}, {1}) which the table does not supply")]
    MissingTableEntry(String, String),
    #[error("q-degree has arity {got}, expected {expected}")]
    QDegreeArity { expected: usize, got: usize },
    #[error("no generator fact for {0}")]
    MissingGeneratorFact(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
