use thiserror::Error;

/// Errors raised by the analysis routines.
///
/// Verdicts (a failed certificate, an uncolorable cover) are not errors; they are
/// reported through the result types of the individual operations.
#[derive(Debug, Error)]
pub enum Error {
    /// An input exceeds the size an exhaustive routine is allowed to handle.
    #[error("size guard: {what} is {actual}, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A mathematical precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A real-valued argument lies outside the domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// The bracketing interval of a root search does not contain a sign change.
    #[error("no crossing on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoCrossing {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// An input file could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A constructed object failed its own postcondition. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn guard(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::SizeGuard {
            what,
            limit,
            actual,
        }
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for the errors that stem from the caller's input (guards, preconditions,
    /// domains, malformed files) rather than from I/O or internal faults.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::SizeGuard { .. }
                | Error::Precondition(_)
                | Error::Domain(_)
                | Error::NoCrossing { .. }
                | Error::Parse { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
