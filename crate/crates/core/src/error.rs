use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate relation for {0}")]
    DuplicateRelation(String),

    /// A relation word mentions a generator at or below the index allowed
    /// for its left-hand side.
    #[error("relation for {relation} may only use generators after `{bound}`, found `{found}`")]
    IndexRestriction {
        relation: String,
        bound: String,
        found: String,
    },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("collection exceeded the step budget of {0}")]
    StepLimit(u64),

    #[error("subgroup of order {order} exceeds the element budget of {budget}")]
    ElementLimit { order: u64, budget: u64 },

    #[error("element does not belong to this presentation")]
    MixedPresentations,

    #[error("subgroups belong to different ambient groups")]
    MixedAmbients,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("presentation is inconsistent: overlap {overlap} collects to {left:?} and {right:?}")]
    Inconsistent {
        overlap: String,
        left: Vec<u32>,
        right: Vec<u32>,
    },

    /// `line` or `column` is zero when unknown.
    #[error("{}", located(*line, *column, inner))]
    Located {
        line: usize,
        column: usize,
        inner: Box<Error>,
    },
}

fn located(line: usize, column: usize, inner: &Error) -> String {
    match (line, column) {
        (0, 0) => format!("{inner}"),
        (0, c) => format!("column {c}: {inner}"),
        (l, 0) => format!("line {l}: {inner}"),
        (l, c) => format!("line {l}, column {c}: {inner}"),
    }
}

impl Error {
    /// The underlying error with any source position stripped.
    pub fn kind(&self) -> &Error {
        match self {
            Error::Located { inner, .. } => inner.kind(),
            other => other,
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self.kind(), Error::StepLimit(_) | Error::ElementLimit { .. })
    }

    pub(crate) fn at(self, line: usize, column: usize) -> Error {
        match self {
            located @ Error::Located { .. } => located,
            inner => Error::Located {
                line,
                column,
                inner: Box::new(inner),
            },
        }
    }
}
