use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("malformed tables: {0}")]
    Malformed(String),

    #[error("element {element} is out of range for order {order}")]
    OutOfRange { element: usize, order: usize },

    #[error("n = {0} is too small: the construction requires n >= 3")]
    OrderTooSmall(u32),

    #[error("n = {n} exceeds the configured cap of {cap}")]
    OrderTooLarge { n: u32, cap: u32 },

    #[error("element {0} has no left inverse")]
    NoInverse(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("structural error at {location}: {message}")]
    Structure { location: String, message: String },

    #[error("gyrosemidirect product is not a group: {axiom} fails at {witness:?}")]
    NotAGroup {
        axiom: &'static str,
        witness: Vec<usize>,
    },

    #[error("inconsistent tables: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
