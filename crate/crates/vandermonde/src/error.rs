use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// An input is outside the mathematical domain of the operation
    /// (e.g. `stirling2(3, 5)` or the leading term of the zero polynomial).
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally malformed data: mismatched variable counts, non-square
    /// matrices, non-exact division, syntax errors.
    #[error("invalid input: {0}")]
    Structural(String),

    /// A resource guard tripped. This is a reported failure, never a wrong
    /// answer; rerun with a larger budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}
