use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not unicyclic: {vertices} vertices, {edges} edges")]
    NotUnicyclic { vertices: usize, edges: usize },

    #[error("invalid interval: lower end {lower} is not below upper end {upper}")]
    InvalidInterval { lower: String, upper: String },

    #[error("matrix is not symmetric at ({0}, {1})")]
    NonSymmetric(usize, usize),

    #[error("eigensolver did not converge after {0} sweeps")]
    NumericFailure(usize),

    #[error("edge ({0}, {1}) is not present")]
    EdgeNotPresent(usize, usize),

    #[error("graph has {n} vertices, above the cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
