use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("index {index} outside the admissible range {range}")]
    Domain { index: i64, range: String },

    #[error("non-integral division {numerator} / {denominator}")]
    NonIntegral { numerator: String, denominator: String },

    #[error("invalid chord {a}-{b} on a {size}-gon: {reason}")]
    InvalidChord { a: i64, b: i64, size: u32, reason: &'static str },

    #[error("invalid diagonal {0}")]
    InvalidDiagonal(String),

    #[error("diagonals {0} and {1} cross")]
    Incompatible(String, String),

    #[error("face has {got} diagonals, more than the facet size {max}")]
    TooManyDiagonals { got: usize, max: usize },

    #[error("malformed face: {0}")]
    MalformedFace(String),

    #[error("image outside the bijection's domain: {0}")]
    InvalidImage(String),

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("ground sets overlap in vertex {0}")]
    GroundSetOverlap(u32),

    #[error("resource limit exceeded: {what} projected at {projected}, bound is {bound}")]
    ResourceLimit { what: &'static str, projected: String, bound: u64 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
