use thiserror::Error;

/// Errors raised by the engine. Every variant carries enough context to
/// name the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {letter}{rank}: {reason}")]
    InvalidType {
        letter: String,
        rank: usize,
        reason: &'static str,
    },
    #[error("node label {label} out of range {lo}..={hi}")]
    LabelOutOfRange { label: usize, lo: usize, hi: usize },
    #[error("fundamental coweight {0} is not minuscule")]
    NotMinuscule(usize),
    #[error("permutation {0:?} does not preserve the Cartan matrix")]
    NotAnAutomorphism(Vec<usize>),
    #[error("{what} has {required} elements, above the configured cap of {cap}")]
    CapExceeded {
        what: String,
        required: usize,
        cap: usize,
    },
    #[error("vector is not in the coweight lattice (pairings {0:?})")]
    NotInCoweightLattice(Vec<String>),
    #[error("cocharacter has depth {depth}, below the required {required}")]
    DepthTooSmall { depth: String, required: i64 },
    #[error("iteration did not stabilize within {0} periods")]
    NoStabilization(usize),
    #[error("not implemented: {0}")]
    Unimplemented(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
