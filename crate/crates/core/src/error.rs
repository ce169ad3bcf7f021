use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group order {order} (must be between 1 and {cap})")]
    InvalidOrder { order: usize, cap: usize },

    #[error("{what}: order cap {cap} exceeded (reached {reached} elements)")]
    OrderCapExceeded {
        what: String,
        reached: usize,
        cap: usize,
    },

    #[error("{group}: more than {cap} subgroups; raise the subgroup cap to enumerate it")]
    SubgroupCapExceeded { group: String, cap: usize },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("cayley table: {0}")]
    NotLatin(String),

    #[error("cayley table: associativity fails at ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("cayley table: no identity element")]
    NoIdentity,

    #[error("cayley table: element {0} has no inverse")]
    NoInverse(usize),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("{p} is not a prime")]
    NotPrime { p: u64 },

    #[error("no Sylow {p}-subgroup: {p} does not divide {order}")]
    NoSylow { p: u64, order: usize },

    #[error("lattice integrity: {0}")]
    Integrity(String),

    #[error("group spec {expr:?}, position {position}: {message}")]
    Spec {
        expr: String,
        position: usize,
        message: String,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
