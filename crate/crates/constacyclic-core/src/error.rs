//! Error types shared by every module of the crate.

use alloc::vec::Vec;
use core::fmt;

/// A named violation of a code-spec constraint.
///
/// Validation collects every violation it finds instead of stopping at the
/// first, so diagnostics name each broken constraint individually.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `i` is outside the admissible range for the spec kind.
    IOutOfRange { lo: u64, hi: u64 },
    /// `t` must satisfy `0 <= t < i` when `h` is nonzero.
    TOutOfRange { hi: u64 },
    /// `omega` must be strictly below the torsion exponent `T`.
    OmegaNotBelowTorsionExponent,
    /// `omega` must be at least `t + 1` when `h` is nonzero.
    OmegaTooSmallForH,
    /// A nonzero `h` must have a nonzero constant coefficient.
    HConstantZero,
    /// `h` has more coefficients than the representative bound allows.
    HDegreeTooLarge { max: u64 },
    /// The chain classification needs `lambda = alpha + u beta` with
    /// `alpha != 0`.
    LambdaFieldPartZero,
    /// The chain classification needs `beta != 0`.
    LambdaUPartZero,
    /// The residue-constant classification needs `lambda` in the base field,
    /// i.e. a zero u-part.
    LambdaUPartNonzero,
    /// `s` must be at least 1.
    SOutOfRange,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IOutOfRange { lo, hi } => write!(f, "i out of range {lo}..{hi}"),
            Violation::TOutOfRange { hi } => write!(f, "t out of range 0..{hi}"),
            Violation::OmegaNotBelowTorsionExponent => write!(f, "omega >= T"),
            Violation::OmegaTooSmallForH => write!(f, "omega < t + 1 with nonzero h"),
            Violation::HConstantZero => write!(f, "h_0 = 0"),
            Violation::HDegreeTooLarge { max } => write!(f, "deg h > {max}"),
            Violation::LambdaFieldPartZero => write!(f, "lambda.a = 0"),
            Violation::LambdaUPartZero => write!(f, "lambda.b = 0 for chain kind"),
            Violation::LambdaUPartNonzero => write!(f, "lambda.b != 0 for field-constant kind"),
            Violation::SOutOfRange => write!(f, "s < 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The characteristic must be an odd prime.
    NotOddPrime { p: u64 },
    /// Modulus polynomial is malformed (length, range, or leading term).
    BadModulus { reason: &'static str },
    /// Modulus polynomial factors over F_p.
    ReducibleModulus,
    /// `p^m` (or `p^s`) exceeds the size this crate is willing to handle.
    FieldTooLarge,
    /// A coefficient lies outside `[0, p)`; the index names the offender.
    CoefficientOutOfRange { index: usize },
    /// Operands belong to different field contexts.
    MixedContexts,
    /// Inversion (or a negative power) of a non-unit.
    NotAUnit,
    /// Vectors of different lengths where equal lengths are required.
    LengthMismatch { left: usize, right: usize },
    /// Quotient-ring operands disagree on `(n, lambda)`.
    QuotientMismatch,
    /// The zero polynomial has no reciprocal.
    ZeroPolynomial,
    /// Exponent outside the admissible range of a nilpotent power.
    PowerOutOfRange { k: u64, max: u64 },
    /// Enumeration would produce more than `cap` items.
    CapExceeded { needed: u128, cap: u128 },
    /// A vector has the wrong number of coordinates for this basis.
    DimensionMismatch { expected: usize, got: usize },
    /// Minimum distance is undefined: the code has no nonzero codeword.
    NoNonzeroCodeword,
    /// The comparison polynomial is only defined when the inverse
    /// automorphism fixes the nilpotent base, i.e. `gamma0 = theta(gamma0^-1)`.
    DualBaseNotFixed,
    /// A brute-force computation would exceed the configured matrix limit.
    MatrixTooLarge { dims: usize, limit: usize },
    /// The spec violates one or more classification constraints.
    InvalidSpec(Vec<Violation>),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotOddPrime { p } => write!(f, "{p} is not an odd prime"),
            Error::BadModulus { reason } => write!(f, "bad modulus: {reason}"),
            Error::ReducibleModulus => write!(f, "modulus polynomial is reducible"),
            Error::FieldTooLarge => write!(f, "field or ambient size beyond supported scale"),
            Error::CoefficientOutOfRange { index } => {
                write!(f, "coefficient at index {index} out of range")
            }
            Error::MixedContexts => write!(f, "operands belong to different field contexts"),
            Error::NotAUnit => write!(f, "not a unit"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::QuotientMismatch => write!(f, "quotient contexts (n, lambda) differ"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::PowerOutOfRange { k, max } => write!(f, "power {k} out of range 0..={max}"),
            Error::CapExceeded { needed, cap } => {
                write!(f, "enumeration needs {needed} items, cap is {cap}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NoNonzeroCodeword => write!(f, "no nonzero codeword"),
            Error::DualBaseNotFixed => write!(
                f,
                "dual base mismatch: inverse automorphism does not fix the nilpotent base"
            ),
            Error::MatrixTooLarge { dims, limit } => {
                write!(f, "matrix dimension {dims} exceeds limit {limit}")
            }
            Error::InvalidSpec(violations) => {
                write!(f, "invalid spec:")?;
                for v in violations {
                    write!(f, " [{v}]")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
