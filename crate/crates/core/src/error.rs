use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label `{label}` is not in {context}")]
    LabelNotFound { label: String, context: String },

    #[error("label sets are not disjoint: {overlap}")]
    NotDisjoint { overlap: String },

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("invalid label `{0}`: labels are nonempty alphanumeric atoms")]
    InvalidLabel(String),

    #[error("the empty set carries no structure (positive species)")]
    EmptySet,

    #[error("invalid bijection: {0}")]
    InvalidBijection(String),

    #[error("domain mismatch: expected {expected}, found {found}")]
    DomainMismatch { expected: String, found: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid composition element: {0}")]
    InvalidElement(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("law sweep needs {estimated} instances, above the cap of {cap}; raise the cap or allow large sweeps")]
    BoundsTooLarge { estimated: u64, cap: u64 },

    #[error("{0} is not an operad axiom")]
    NotAnAxiom(String),

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("fixture operad `{name}` fails its own axiom suite: {detail}")]
    FixtureFailed { name: String, detail: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
