//! Exact-arithmetic combinatorics of lattice paths with north, east and
//! diagonal steps: path statistics (area, bounce, numph, dinv), parking
//! functions, standard Young tableaux, sparse q,t-polynomials, Schur
//! expansions, and the statistic-preserving bijections connecting them.
//!
//! Everything is computed over the integers; enumerations are exhaustive and
//! emitted in canonical order so results are reproducible byte for byte.
//! The [`verify`] module cross-checks the identities relating all of the
//! above against a brute-force quasisymmetric oracle and produces
//! machine-readable reports.

pub mod bijections;
pub mod cache;
pub mod parking;
pub mod pathcore;
pub mod qtsym;
pub mod tableaux;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("wrong step counts: expected {expected}, found {found}")]
    WrongStepCounts { expected: String, found: String },
    #[error("prefix of length {index} falls below the main diagonal")]
    PrefixBelowDiagonal { index: usize },
    #[error("enumeration limit exceeded: {what} (size estimate {estimate})")]
    LimitExceeded { what: String, estimate: String },
    #[error("labels decrease inside a column: row {lower_row} carries {lower_label}, row {upper_row} carries {upper_label}")]
    ColumnDescent {
        lower_row: usize,
        upper_row: usize,
        lower_label: u32,
        upper_label: u32,
    },
    #[error("reading word is not a big/small shuffle for d = {d}")]
    NotShuffleForm { d: u32 },
    #[error("operation requires dinv = 0, found {dinv}")]
    PreconditionFailed { dinv: u64 },
    #[error("labels fit no supported criterion domain")]
    DomainUnsupported,
    #[error("invalid shape: {0}")]
    BadShape(String),
    #[error("descent set has the wrong cardinality: expected {expected}, found {found}")]
    BadCardinality { expected: usize, found: usize },
    #[error("polynomial is not symmetric in q,t")]
    NotSymmetric,
    #[error("fundamental-to-Schur solve left a nonzero residual")]
    NonZeroResidual,
    #[error("word is not a Schroder path: {0}")]
    NotSchroder(String),
    #[error("no movable east step: the chain has a single element")]
    EmptyChain,
    #[error("word does not belong to the image of the east-sliding chains")]
    NotInImage,
    #[error("word is not an area-0 word over {{NE, D}}")]
    NotAreaZeroForm,
    #[error("word does not have area 1")]
    NotAreaOne,
    #[error("word is not in the D^jNNEE/D^jNDE family")]
    NotInV,
    #[error("orbit index {index} out of range 0..{order}")]
    IndexOutOfOrbit { index: u32, order: u32 },
    #[error("word is not in the over family")]
    NotOver,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
