use thiserror::Error;

/// Errors surfaced by the library. Internal invariant breaches (e.g. mixing
/// scalars from different fields inside one computation) panic instead: they
/// are programmer errors, not data errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed scalar literal {0:?}")]
    ScalarParse(String),

    #[error("zero denominator in scalar literal {0:?}")]
    ZeroDenominator(String),

    #[error("denominator of {literal:?} is divisible by the modulus {modulus}")]
    NonInvertibleDenominator { literal: String, modulus: u64 },

    #[error("{0} is not a valid prime modulus")]
    NotPrime(u64),

    #[error("prime modulus {0} exceeds the supported bound 2^31")]
    ModulusTooLarge(u64),

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error(
        "Leibniz identity fails at basis triple ({i}, {j}, {k}): residual [{}]",
        residual.join(", ")
    )]
    LeibnizIdentityViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<String>,
    },

    #[error("subspace is not a two-sided ideal: basis vector {index} bracket escapes the subspace")]
    NotAnIdeal { index: usize },

    #[error("bracket is not alternating/antisymmetric on the basis: not a Lie algebra")]
    NotALieAlgebra,

    #[error("well-definedness failure in {0}: a relation image escapes the saturated relation space")]
    WellDefinedness(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),

    #[error("invalid algebra file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
