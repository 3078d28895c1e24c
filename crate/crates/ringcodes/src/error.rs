//! Error type shared by the whole crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports.
///
/// Each variant has a stable machine-readable code (see [`Error::code`])
/// so front ends can map failures without string matching.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The modulus is not a prime number.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The modulus is prime but larger than the supported bound.
    #[error("prime {0} exceeds the supported bound {1}")]
    PrimeOutOfRange(u64, u64),
    /// The excluded root `s` is not a residue modulo `p`.
    #[error("excluded root {s} is outside 0..{p}")]
    ResidueOutOfRange { s: u64, p: u64 },
    /// Two operands were built over different primes.
    #[error("operands use different moduli: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    /// Polynomial division by the zero polynomial.
    #[error("polynomial division by zero")]
    DivisionByZeroPoly,
    /// A component index that is not a retained root of the ring.
    #[error("component index {index} is not a retained root (p = {p}, excluded root {s})")]
    InvalidComponentIndex { index: u64, p: u64, s: u64 },
    /// A sequence had the wrong number of entries.
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    /// Inversion of a non-unit; the listed component roots are where it vanishes.
    #[error("element is not a unit: zero components at roots {0:?}")]
    NotAUnit(Vec<u64>),
    /// Matrices of incompatible shapes.
    #[error("shape mismatch: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    /// A component family with the wrong number of members.
    #[error("expected {expected} component matrices, got {got}")]
    WrongComponentCount { expected: usize, got: usize },
    /// Exhaustive distance enumeration would exceed the configured cap.
    #[error("enumeration needs {required} codewords, cap is {cap}")]
    EnumerationCapExceeded { required: u128, cap: u64 },
    /// Minimum distance of a code whose every component is zero.
    #[error("every component code is zero")]
    AllComponentsZero,
    /// Rows of a generator matrix are linearly dependent.
    #[error("rank {rank} is less than the {rows} rows supplied")]
    RankDeficient { rank: usize, rows: usize },
    /// A matrix expected in systematic form `(I_k | M)` is not.
    #[error("matrix is not in systematic form")]
    NotSystematic,
    /// A cyclic generator polynomial that does not divide `x^n - 1`.
    #[error("generator for component {0} is invalid (zero, or does not divide x^n - 1)")]
    InvalidGenerator(u64),
    /// `x^n - 1` has an irreducible factor of degree above one.
    #[error(
        "x^{n} - 1 does not split into linear factors mod {p}: residual degree {residual_degree}"
    )]
    DoesNotSplit {
        n: usize,
        p: u64,
        residual_degree: usize,
    },
    /// Text input that does not match the polynomial grammar.
    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },
    /// A coefficient literal too large to represent.
    #[error("coefficient literal out of range at byte {position}")]
    CoefficientOutOfRange { position: usize },
}

impl Error {
    /// Stable identifier for machine consumption (`code=<NAME>` records).
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::PrimeOutOfRange(_, _) => "PrimeOutOfRange",
            Error::ResidueOutOfRange { .. } => "ResidueOutOfRange",
            Error::ModulusMismatch(_, _) => "ModulusMismatch",
            Error::DivisionByZeroPoly => "DivisionByZeroPoly",
            Error::InvalidComponentIndex { .. } => "InvalidComponentIndex",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotAUnit(_) => "NotAUnit",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::WrongComponentCount { .. } => "WrongComponentCount",
            Error::EnumerationCapExceeded { .. } => "EnumerationCapExceeded",
            Error::AllComponentsZero => "AllComponentsZero",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::NotSystematic => "NotSystematic",
            Error::InvalidGenerator(_) => "InvalidGenerator",
            Error::DoesNotSplit { .. } => "DoesNotSplit",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::CoefficientOutOfRange { .. } => "CoefficientOutOfRange",
        }
    }

    /// True for errors caused by malformed input rather than by a
    /// computation that cannot proceed.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::NotPrime(_)
                | Error::PrimeOutOfRange(_, _)
                | Error::ResidueOutOfRange { .. }
                | Error::ModulusMismatch(_, _)
                | Error::InvalidComponentIndex { .. }
                | Error::LengthMismatch { .. }
                | Error::ShapeMismatch { .. }
                | Error::WrongComponentCount { .. }
                | Error::SyntaxError { .. }
                | Error::CoefficientOutOfRange { .. }
        )
    }
}
