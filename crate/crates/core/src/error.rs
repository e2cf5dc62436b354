use thiserror::Error;

/// Errors raised by theory construction, parsing, and the bounded
/// enumeration entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate argument name `{0}`")]
    DuplicateName(String),

    #[error("argument index {index} is outside the universe of {size} arguments")]
    OutOfUniverse { index: usize, size: usize },

    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("universe of {size} elements exceeds the supported maximum of {max}")]
    UniverseTooLarge { size: usize, max: usize },

    #[error(
        "enumeration over {size} arguments exceeds the cap of {cap} (raise the cap explicitly)"
    )]
    EnumerationCap { size: usize, cap: usize },

    #[error("program has {size} atoms, exceeding the cap of {cap}")]
    AtomCap { size: usize, cap: usize },

    #[error("theory is not normal (must be affirmative and local)")]
    NotNormal,

    #[error("lower set is not included in the upper set")]
    LowerNotSubset,

    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{line}:{column}: non-ground programs are unsupported (found variable `{name}`)")]
    NonGround {
        line: usize,
        column: usize,
        name: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
