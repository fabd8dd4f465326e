use thiserror::Error;

/// Everything that can go wrong while building or checking an algebraic object.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input has the wrong shape or cannot be parsed.
    #[error("malformed input: {0}")]
    Malformed(String),
    /// A mathematical axiom or condition does not hold; `witness` names the
    /// first offending instance.
    #[error("{axiom} fails at {witness}")]
    Axiom { axiom: String, witness: String },
    /// Two objects that must coincide do not.
    #[error("mismatch: {0}")]
    Mismatch(String),
    /// A construction would exceed the configured size guard.
    #[error("{what} of size {size} exceeds the cap of {cap}")]
    Cap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    /// A postcondition that theory guarantees did not hold.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn axiom(axiom: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Axiom {
            axiom: axiom.into(),
            witness: witness.into(),
        }
    }

    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::Mismatch(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code for the CLI: 1 for mathematical failures, 2 for
    /// usage and parse problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Axiom { .. } | Error::Internal(_) => 1,
            Error::Malformed(_) | Error::Mismatch(_) | Error::Cap { .. } => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
