use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter domain: {0}")]
    Domain(String),

    #[error("recurrence coefficient gamma_{index} is not available")]
    Supply { index: usize },

    #[error("singular point: {what} at x = {x}")]
    Singular { what: &'static str, x: f64 },

    #[error("positivity violated: {0}")]
    Positivity(String),

    #[error("inconsistent input: {0}")]
    Consistency(String),

    #[error("quadrature order {order} is too low; need at least {required}")]
    Exactness { order: usize, required: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
