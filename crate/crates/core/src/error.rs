use thiserror::Error;

use crate::modelfile::ParseError;
use crate::search::Validation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters @create_search_space: {0}")]
    InvalidParameters(String),

    #[error("unknown technique `{0}`")]
    UnknownTechnique(String),

    #[error("unknown function `{name}`{}", suggestion_suffix(.suggestions))]
    UnknownFunction {
        name: String,
        suggestions: Vec<String>,
    },

    #[error("`{function}` takes {expected} decision variable(s), got {got}")]
    Arity {
        function: String,
        expected: usize,
        got: usize,
    },

    #[error("search space bounds have not been set")]
    BoundsUnset,

    #[error("invalid search space:\n{0}")]
    Validation(Validation),

    #[error("hypercomplex dimension must be at least 1, got {0}")]
    InvalidHypercomplexDim(usize),

    #[error("{technique} has no hypercomplex variant; supported: {supported}")]
    UnsupportedLift {
        technique: String,
        supported: String,
    },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn suggestion_suffix(suggestions: &[String]) -> String {
    if suggestions.is_empty() {
        String::new()
    } else {
        format!("; did you mean {}?", suggestions.join(", "))
    }
}
