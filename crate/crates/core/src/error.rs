use thiserror::Error;

use crate::Complex64;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition {
        parts: Vec<u32>,
        reason: &'static str,
    },

    #[error("partition {parts:?} has weight {actual}, expected {expected}")]
    WeightMismatch {
        parts: Vec<u32>,
        expected: u32,
        actual: u32,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("s = {s} exceeds multiset size n = {n}")]
    SExceedsN { s: usize, n: usize },

    #[error("enumeration of {count} items exceeds the cap of {cap}")]
    EnumerationTooLarge { count: u128, cap: u128 },

    #[error("rational root search needs more than {cap} candidates")]
    DivisorSearchOverflow { cap: usize },

    #[error("root finder did not converge after {iterations} iterations (max residual {max_residual:e})")]
    NonConvergence {
        iterations: usize,
        best: Vec<Complex64>,
        residuals: Vec<f64>,
        max_residual: f64,
    },

    #[error("input has {actual} elements, expected C({n}, {s}) = {expected}")]
    SizeMismatch {
        n: usize,
        s: usize,
        expected: u128,
        actual: usize,
    },

    #[error("(n, s) = ({n}, {s}) is not solvable: F_{{s,k}}(n) vanishes for k in {vanishing_k:?}")]
    Unsolvable {
        n: usize,
        s: usize,
        vanishing_k: Vec<u32>,
    },

    #[error("recovered polynomial has no complete rational factorisation (remainder degree {remainder_degree})")]
    IrrationalRoots { remainder_degree: usize },

    #[error("recovered multiset does not reproduce the input s-sums (deviation {deviation})")]
    VerificationFailed { deviation: String },

    #[error("parse error: {0}")]
    Parse(String),
}
