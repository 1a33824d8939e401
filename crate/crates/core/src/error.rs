use thiserror::Error;

/// Errors raised by the bound computations, the simulators and the degree oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A numeric argument is outside the domain of the function (NaN, infinity).
    #[error("domain error: {0}")]
    Domain(String),
    /// An argument violates the operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The instance does not lie in the upper-left region of the requested anchor.
    #[error("region error: {0}")]
    Region(String),
    /// The requested computation exceeds a configured size cap.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    /// A caller broke the contract of an operation (e.g. a missing queried bit).
    #[error("contract violation: {0}")]
    Contract(String),
    /// Upper and lower bounds contradict each other.
    #[error("inconsistent bounds: {0}")]
    Consistency(String),
    /// Something that should be impossible happened.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
