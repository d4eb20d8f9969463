use std::fmt;

/// Errors surfaced by the exact-arithmetic and dynamics pipelines.
///
/// Every variant corresponds to a mathematically meaningful failure mode;
/// none of them are recoverable by retrying with the same inputs (randomized
/// routines retry internally before reporting `SupportHypothesis`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Resultant of two zero polynomials.
    UndefinedResultant,
    /// Composition of a correspondence with itself collapsed to zero.
    DegenerateComposition,
    /// The correspondence contains the diagonal of P^1 x P^1.
    DiagonalComponent,
    /// Periodic-point divisors are not in general position; the division
    /// defining the formal-period form is not exact.
    NonGenericCorrespondence(String),
    /// A periodic point is a singular point of the correspondence, so the
    /// multiplier is undefined there.
    MultiplierUndefined,
    /// A spectrum form that should be a perfect power is not.
    NotPerfectPower,
    /// A form does not split over the requested field; carries the degrees
    /// of its irreducible factors.
    NonSplit { factor_degrees: Vec<usize> },
    /// Derivative vanished identically on a nonconstant polynomial.
    InseparableInput,
    /// Linear system is solvable but underdetermined.
    RankDeficient { rank: usize },
    /// Linear system has no solution.
    InconsistentSystem { rank: usize },
    /// Hilbert series have different pole orders at t = 1.
    DimensionMismatch,
    /// Hilbert series of a zero-dimensional algebra where positive dimension
    /// is required.
    ZeroDimensional,
    /// Operation requires a saturator-1 series; apply a Veronese section first.
    SaturatorNotOne { saturator: usize },
    /// Repeated evaluation points make the alternant determinant vanish.
    DegenerateAlternant,
    /// A closed-form bound was requested outside its domain of validity.
    OutOfRange(String),
    /// The one-parameter cubic family degenerates for these inputs.
    DegenerateFamily(String),
    /// The fiber computation produced a structure the certificate cannot
    /// account for (e.g. a multiplier polynomial that is not three double
    /// roots).
    UnexpectedFiberStructure(String),
    /// Interpolation support hypothesis violated or sampling repeatedly
    /// unlucky.
    SupportHypothesis(String),
    /// Interpolation verification rows have nonzero residuals.
    VerificationFailed(String),
    /// Malformed input document or string.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UndefinedResultant => write!(f, "undefined resultant"),
            Error::DegenerateComposition => write!(f, "degenerate composition"),
            Error::DiagonalComponent => write!(f, "diagonal component"),
            Error::NonGenericCorrespondence(msg) => {
                write!(f, "non-generic correspondence: {msg}")
            }
            Error::MultiplierUndefined => {
                write!(f, "multiplier undefined at singular periodic point")
            }
            Error::NotPerfectPower => write!(f, "spectrum not a perfect power"),
            Error::NonSplit { factor_degrees } => {
                write!(f, "form does not split; irreducible factor degrees {factor_degrees:?}")
            }
            Error::InseparableInput => write!(f, "inseparable input"),
            Error::RankDeficient { rank } => write!(f, "rank-deficient system (rank {rank})"),
            Error::InconsistentSystem { rank } => {
                write!(f, "inconsistent system (rank {rank})")
            }
            Error::DimensionMismatch => write!(f, "dimension mismatch"),
            Error::ZeroDimensional => write!(f, "zero-dimensional"),
            Error::SaturatorNotOne { saturator } => {
                write!(f, "saturator is {saturator}; take the Veronese section first")
            }
            Error::DegenerateAlternant => {
                write!(f, "degenerate alternant; use the tableau route")
            }
            Error::OutOfRange(msg) => write!(f, "formula out of range: {msg}"),
            Error::DegenerateFamily(msg) => write!(f, "degenerate family: {msg}"),
            Error::UnexpectedFiberStructure(msg) => {
                write!(f, "unexpected fiber structure: {msg}")
            }
            Error::SupportHypothesis(msg) => {
                write!(f, "support hypothesis violated or unlucky grading: {msg}")
            }
            Error::VerificationFailed(msg) => write!(f, "verification failed: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
