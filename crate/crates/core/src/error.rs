use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported dimension {0} (supported: 1..=10)")]
    UnsupportedDimension(usize),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("{routine} did not converge after {iterations} iterations")]
    NonConvergence {
        routine: &'static str,
        iterations: usize,
    },

    #[error("enumeration would visit {requested} points, cap is {cap}")]
    ResourceLimit { requested: u128, cap: u64 },

    /// The Epstein zeta function has a simple pole at nu = d for y in the dual lattice.
    #[error("pole: nu = {nu} equals the dimension and y lies in the dual lattice")]
    Pole { nu: f64 },

    #[error("model breakdown: {0}")]
    Breakdown(String),

    #[error("direct sum tail bound {bound:e} exceeds tolerance {tolerance:e}")]
    InsufficientRadius { bound: f64, tolerance: f64 },

    #[error("unknown case id {0:?}")]
    UnknownCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {v}")))
    }
}

pub(crate) fn check_finite_slice(name: &str, v: &[f64]) -> Result<()> {
    match v.iter().find(|t| !t.is_finite()) {
        Some(t) => Err(Error::Domain(format!("{name} must be finite, got {t}"))),
        None => Ok(()),
    }
}
