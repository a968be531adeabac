use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed simplex {simplex:?}: {reason}")]
    MalformedSimplex { simplex: Vec<u32>, reason: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("cochains live on different complexes: {0}")]
    MismatchedHost(String),

    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),

    #[error("cochain of degree {degree} is not a cocycle")]
    NotCocycle { degree: usize },

    #[error("degree {degree} is outside the computed range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("group action is not free on cells ({0}); subdivide the complex and retry")]
    NonFreeAction(String),

    #[error("malformed cover: {0}")]
    MalformedCover(String),

    #[error("orientation error: {0}")]
    Orientation(String),

    #[error("resource guard exceeded: {cells} cells requested, guard is {guard} ({detail})")]
    ResourceGuard {
        cells: usize,
        guard: usize,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
