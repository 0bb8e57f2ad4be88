use thiserror::Error;

/// Errors shared across the crate.
///
/// `Internal` is reserved for verification failures of our own constructions:
/// every certificate (word, orientation, realizer) is re-checked before it is
/// returned, so `Internal` indicates a bug, never bad user input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex labels collide: {}", .0.join(", "))]
    LabelCollision(Vec<String>),

    #[error("graph is disconnected; this operation is defined for connected graphs")]
    Disconnected,

    #[error("graph is not a comparability graph")]
    NotComparability,

    #[error("word alphabet does not match vertex set (missing: [{}], extra: [{}])",
            .missing.join(", "), .extra.join(", "))]
    AlphabetMismatch {
        missing: Vec<String>,
        extra: Vec<String>,
    },

    #[error("invalid split: {0}")]
    InvalidSplit(String),

    #[error("not a transitive orientation: {a}->{b} and {b}->{c} but {a}->{c} is missing")]
    NotTransitive { a: String, b: String, c: String },

    #[error("instance too large for {what} (limit {limit}, got {actual})")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("vertex `{vertex}` is not {role}-feasible under any transitive orientation")]
    RoleInfeasible { vertex: String, role: &'static str },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal verification failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
