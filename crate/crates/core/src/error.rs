use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sector angle must be positive, got {0}")]
    NonPositiveAngle(String),
    #[error("angle sequence is empty")]
    EmptySequence,
    #[error("a flat vertex fold has even degree, got {0} creases")]
    OddDegree(usize),
    #[error("expected {expected} labels, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("angle sequence {0} violates Kawasaki's condition")]
    NotFlatFoldable(String),
    #[error("angle sequence is approximate; exact angles are required")]
    Inexact,
    #[error("run at sector {start} of length {len} does not match the angle sequence")]
    RunMismatch { start: usize, len: usize },
    #[error("folded directions do not close up (alternating sum {0})")]
    Closure(String),
    #[error("{sectors} sectors exceed the exhaustive search limit of {limit}")]
    Capacity { sectors: usize, limit: usize },
    #[error("malformed crease pattern: {0}")]
    Structural(String),
    #[error("crease pattern is not planar: {0}")]
    Planarity(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid mountain-valley string: {0}")]
    InvalidLabel(String),
}
