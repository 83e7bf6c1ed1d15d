use std::path::PathBuf;

/// Errors produced by the group engine and the verification pipeline.
#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("not a bijection: {0}")]
    NotBijection(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} is outside the degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group is not transitive on the given orbit")]
    NotTransitive,
    #[error("point set is not invariant under the group")]
    NotInvariant,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: String,
        cap: String,
    },
    #[error("time budget exhausted during {0}")]
    BudgetExhausted(&'static str),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("action does not have exactly two orbits of equal length: {0}")]
    NotTwoOrbit(String),
    #[error("{path}: generator {index}: {reason}")]
    BadGenerator {
        path: String,
        index: usize,
        reason: String,
    },
    #[error("{path}: {reason}")]
    Parse { path: String, reason: String },
    #[error("{path}: group is not transitive on {degree} points")]
    NonTransitiveEntry { path: String, degree: usize },
    #[error("{path}: degree {found} does not match the corpus degree {expected}")]
    CorpusDegree {
        path: String,
        expected: usize,
        found: usize,
    },
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn cap(what: &'static str, value: impl ToString, cap: impl ToString) -> Self {
        Error::CapExceeded {
            what,
            value: value.to_string(),
            cap: cap.to_string(),
        }
    }

    /// True for errors that mean "too big for the configured envelope"
    /// rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::BudgetExhausted(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
