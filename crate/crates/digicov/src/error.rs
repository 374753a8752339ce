use thiserror::Error;

/// Errors raised by the domain operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("adjacency parameter t={t} out of range for dimension n={n} (need 1 <= t <= n)")]
    BadAdjacency { t: u32, n: u32 },
    #[error("point has dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point {0} is not a point of the image")]
    PointNotInImage(String),
    #[error("image is empty")]
    EmptyImage,
    #[error("map is not total: source point {0} has no assignment")]
    MissingAssignment(String),
    #[error("source point {0} is assigned more than once")]
    DuplicateAssignment(String),
    #[error("assigned value {0} is not a point of the target image")]
    ValueNotInTarget(String),
    #[error(
        "restriction is ill-formed: image of {x} is {y}, which is outside the chosen codomain"
    )]
    RestrictionEscapes { x: String, y: String },
    #[error("cannot compose: middle images differ")]
    CompositionMismatch,
    #[error("simple closed curve needs l >= 4, got l={0}")]
    CurveTooShort(usize),
    #[error("simple closed curve has duplicate point at index {0}")]
    DuplicateCurvePoint(usize),
    #[error("curve points at indices {i} and {j} are consecutive but not adjacent")]
    ConsecutiveNotAdjacent { i: usize, j: usize },
    #[error("curve points at indices {i} and {j} are adjacent but not consecutive")]
    NonConsecutiveAdjacent { i: usize, j: usize },
    #[error("unknown catalog curve name: {0}")]
    UnknownCatalogName(String),
    #[error("interval bounds inverted: {a} > {b}")]
    BadInterval { a: i64, b: i64 },
    #[error("window [0, {window_end}] too short to map onto a curve of length {l}")]
    WindowTooShort { window_end: i64, l: usize },
    #[error("curve length {big} is not a multiple of {small}")]
    LengthNotMultiple { big: usize, small: usize },
    #[error("search space of {estimate} candidates exceeds the ceiling {ceiling}")]
    SearchSpaceExceeded { estimate: u128, ceiling: u128 },
    #[error("invalid enumeration bounds: {0}")]
    BadBounds(String),
    #[error("unknown predicate name: {0}")]
    UnknownPredicate(String),
}
