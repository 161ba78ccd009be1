use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// No generators were supplied.
    EmptyGenerators,
    /// A semigroup generator was zero or negative.
    NonPositiveGenerator(i64),
    /// The generators have a common divisor, so the complement is infinite.
    NotNumerical { gcd: i64 },
    /// Two ideals live over different semigroups.
    SemigroupMismatch,
    /// Apéry sets need a positive element of the semigroup.
    NotInSemigroup(i64),
    /// The step of an arithmetic sequence must be positive.
    NonPositiveStep(i64),
    /// The operation needs a symmetric semigroup.
    NotSymmetric,
    /// The operation needs a two-generated semigroup `<a, b>`.
    NotTwoGenerated { generators: Vec<i64> },
    /// A hypothesis of a bound requires non-principal ideals.
    PrincipalIdeal,
    /// Too many generators to enumerate all splits.
    SplitCapExceeded { mu: usize, cap: usize },
    /// The correction set does not contain `A + B`.
    CorrectionNotSuperset,
    /// Two boundary classes produced the same cyclic key.
    DuplicateBoundaryKey(i64),
    /// Two routes for the same quantity disagreed.
    RouteMismatch { direct: u64, quotient: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGenerators => write!(f, "generator list is empty"),
            Error::NonPositiveGenerator(g) => {
                write!(f, "semigroup generator {g} is not positive")
            }
            Error::NotNumerical { gcd } => {
                write!(f, "not a numerical semigroup: generators have gcd {gcd}")
            }
            Error::SemigroupMismatch => write!(f, "ideals are over different semigroups"),
            Error::NotInSemigroup(n) => {
                write!(f, "{n} is not a positive element of the semigroup")
            }
            Error::NonPositiveStep(n) => write!(f, "step {n} must be positive"),
            Error::NotSymmetric => write!(f, "semigroup is not symmetric"),
            Error::NotTwoGenerated { generators } => {
                write!(f, "semigroup {generators:?} is not two-generated")
            }
            Error::PrincipalIdeal => write!(f, "ideal is principal"),
            Error::SplitCapExceeded { mu, cap } => {
                write!(
                    f,
                    "ideal has {mu} generators, split enumeration capped at {cap}"
                )
            }
            Error::CorrectionNotSuperset => {
                write!(f, "correction set does not contain the sum ideal")
            }
            Error::DuplicateBoundaryKey(k) => {
                write!(f, "two boundary classes share the cyclic key {k}")
            }
            Error::RouteMismatch { direct, quotient } => write!(
                f,
                "torsion length routes disagree: direct count {direct}, dual quotient {quotient}"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
