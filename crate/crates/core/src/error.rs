use thiserror::Error;

/// Every failure the library can report.
///
/// The variants are grouped by the layer that raises them; the CLI maps
/// `Parse`/`Degree` to a usage failure and everything else to a math failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different prime fields (F_{left} vs F_{right})")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large for the prime-field backend")]
    ModulusTooLarge(u64),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("term `{term}` has degree {degree}; forms have degree at most 2")]
    Degree { term: String, degree: u32 },

    #[error("Disc(q) = 0: the center and the algebra A(q) are undefined")]
    DegenerateDisc,
    #[error("Det(q) = 0: the conic is degenerate")]
    DegenerateDet,
    #[error("elements belong to different quadratic forms")]
    FormMismatch,
    #[error("matrix does not have the shape of an element of {0}")]
    ShapeMismatch(&'static str),
    #[error("middle element has determinant zero and cannot be inverted")]
    SingularElement,

    #[error("point ({x}, {y}) is not on the conic")]
    NotOnConic { x: String, y: String },
    #[error("no solution found within height bound {0}")]
    NotFound(u64),
    #[error("value {0} violates Disc(q)·α ≠ Det(q)")]
    DomainViolation(String),
    #[error("witness ({x}, {y}) does not evaluate to {alpha}")]
    BadWitness { x: String, y: String, alpha: String },

    #[error("point ({0}) is not on the variety a x² + b y² + c z² = 0")]
    NotOnVariety(String),
    #[error("(0, 0, 0) is not a projective point")]
    ZeroPoint,

    #[error("element does not belong to this ternary structure")]
    StructureMismatch,
    #[error("exhaustive check over {points} points is infeasible (n³ > {limit})")]
    InfeasibleSize { points: usize, limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
