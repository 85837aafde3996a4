use thiserror::Error;

/// Errors produced by algebra, ensemble, state and dynamics operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("context mismatch: expected {expected}, found {found}")]
    ContextMismatch { expected: String, found: String },

    #[error("ensemble form incompatible with algebra kind: {detail}")]
    FormMismatch { detail: String },

    #[error("quantity is not Hermitian: residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    NotHermitian { residual: f64, tolerance: f64 },

    #[error("quantity is not unitary: residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    NotUnitary { residual: f64, tolerance: f64 },

    #[error("not an effect: {detail}")]
    NotAnEffect { detail: String },

    #[error("not an event: {detail}")]
    NotAnEvent { detail: String },

    #[error(
        "for noncommuting effects, 'and' and 'or' are undefined \
         (commutator norm {commutator_norm:.3e} exceeds {tolerance:.3e})"
    )]
    NoncommutingEffects { commutator_norm: f64, tolerance: f64 },

    #[error("broken ensemble: {detail}")]
    BrokenEnsemble { detail: String },

    #[error("dimension overflow: requested {requested}, limit {limit}")]
    DimensionOverflow { requested: usize, limit: usize },

    #[error("invalid argument: {detail}")]
    InvalidArgument { detail: String },

    #[error("undefined value: {detail}")]
    UndefinedValue { detail: String },

    #[error("precondition failed: {detail}")]
    PreconditionFailed { detail: String },

    #[error("parse error: {detail}")]
    Parse { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn ctx_mismatch(expected: impl Into<String>, found: impl Into<String>) -> Self {
        Error::ContextMismatch {
            expected: expected.into(),
            found: found.into(),
        }
    }

    pub(crate) fn invalid(detail: impl Into<String>) -> Self {
        Error::InvalidArgument {
            detail: detail.into(),
        }
    }
}
