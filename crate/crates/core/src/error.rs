use thiserror::Error;

use crate::certifier::CertifyReport;
use crate::lattice::Kind;
use crate::vector::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank for {kind}{rank}: {bound}")]
    InvalidRank {
        kind: Kind,
        rank: usize,
        bound: &'static str,
    },

    #[error("empty lattice spec")]
    EmptySpec,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("dimension mismatch: expected {expected} coefficients, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vertex index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("vector is not in the dual lattice: pairing with {label} is {pairing}")]
    NotInDual { label: String, pairing: Rational },

    #[error("vector lies in the root lattice itself")]
    InLattice,

    #[error("square {square} is below -2; outside the range handled by reduction")]
    OutOfScopeNorm { square: Rational },

    #[error("rank {rank} exceeds the enumeration cap {cap}")]
    RankCap { rank: usize, cap: usize },

    #[error("k = {k} outside the supported range 1..={max}")]
    KCap { k: usize, max: usize },

    #[error("bound must be a negative rational, got {0}")]
    InvalidBound(Rational),

    #[error("target square must be -1 or -2, got {0}")]
    InvalidTarget(Rational),

    #[error("operation requires an irreducible lattice, got {0}")]
    NotIrreducible(String),

    #[error("orbit exceeded cap {cap} after exploring {explored} elements")]
    OrbitCapExceeded { explored: usize, cap: usize },

    #[error("internal error: {0}")]
    Internal(String),

    #[error("certification failed with {} counterexample(s)", .0.failures.len())]
    CertificationFailure(Box<CertifyReport>),
}

impl Error {
    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::EmptySpec => 2,
            Error::Internal(_) | Error::CertificationFailure(_) => 3,
            _ => 1,
        }
    }
}
