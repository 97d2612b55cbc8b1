use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid prime modulus {0}: need an odd prime below 2^32")]
    InvalidModulus(u64),
    #[error("cannot parse {0:?} as a rational literal")]
    ParseScalar(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements live in different fields")]
    FieldMismatch,
    #[error("zero form: {0}")]
    ZeroForm(&'static str),
    #[error("gcd undefined: both inputs are zero")]
    GcdUndefined,
    #[error("characteristic {p} too small for {what}")]
    CharacteristicTooSmall { p: u64, what: &'static str },
    #[error("expected a form of degree {expected}, got {actual}")]
    WrongDegree { expected: usize, actual: usize },
    #[error("degenerate cross-ratio: lambda must avoid 0 and 1")]
    DegenerateCrossRatio,
    #[error("partition ({a},{b}) does not fit in the 2x{width} box")]
    OutsideBox { a: u32, b: u32, width: u32 },
    #[error("ambient dimension N must be at least 1")]
    InvalidAmbient,
    #[error("Grassmannian contexts differ: N={0} vs N={1}")]
    ContextMismatch(u32, u32),
    #[error("mixed codimensions {0} and {1} in one class")]
    MixedDegree(u32, u32),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("non-integral Schubert degree for ({a},{b}) at N={n}")]
    NonIntegralDegree { a: u32, b: u32, n: u32 },
    #[error("cannot parse class expression: {0}")]
    ParseClass(String),
    #[error("flag class grading mismatch: {0}")]
    Grading(String),
    #[error("principal parts rank {0} outside 1..=4")]
    RankOutOfRange(u32),
    #[error("not a pencil: the two conics are proportional")]
    NotAPencil,
    #[error("classification theorem violated: {0}")]
    ClassificationViolated(String),
    #[error("could not draw a pencil after {0} attempts")]
    SamplingExhausted(u32),
    #[error("malformed pencil: {0}")]
    MalformedPencil(String),
}
