use core::fmt;

use thiserror::Error;

/// Why a path string or step sequence was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathErrorKind {
    /// A character outside the accepted alphabets, or a mix of the two.
    Alien(char),
    /// The step at this index takes the path below the x-axis.
    BelowAxis,
    /// The path does not return to the x-axis.
    Unbalanced,
}

impl fmt::Display for PathErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathErrorKind::Alien(c) => write!(f, "unexpected character {c:?}"),
            PathErrorKind::BelowAxis => f.write_str("path goes below the x-axis"),
            PathErrorKind::Unbalanced => f.write_str("path does not end on the x-axis"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,
    #[error("continued fraction denominator at level {level} is not invertible")]
    FractionLevelNotInvertible { level: usize },
    #[error("coefficient index {index} exceeds truncation order {order}")]
    CoefficientOutOfRange { index: usize, order: usize },
    #[error("coefficient of x^{index} is not an integer")]
    NonIntegral { index: usize },
    #[error("invalid path at index {index}: {kind}")]
    InvalidPath { index: usize, kind: PathErrorKind },
    #[error("enumeration of semilength {n} exceeds the guard {guard}")]
    EnumerationGuard { n: usize, guard: usize },
    #[error("height {k} is below the minimum {min} for this operation")]
    HeightTooSmall { k: usize, min: usize },
    #[error("end height {end} lies outside the band [0, {band}]")]
    EndHeightOutsideBand { end: usize, band: usize },
    #[error("path has a valley at height 0")]
    ValleyAtZero,
    #[error("weight spec lists {have} {what} weights but depth is {depth}")]
    ShortWeights { what: &'static str, have: usize, depth: usize },
}
