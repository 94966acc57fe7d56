//! Error types shared across the crate.

use alloc::string::String;
use core::fmt;

/// Position-carrying error produced by the polynomial expression parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source string where the error was detected.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.offset, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Attempted to form a rational function with zero denominator.
    DivisionByZero,
    /// Inverse of an identically singular matrix of rational functions.
    SingularMatrix,
    /// (0, 0) is not a point of the projective line.
    NotAPoint,
    /// Entries of one column do not share a common homogeneous degree.
    MixedDegrees { col: usize },
    /// A curve column is identically zero.
    ZeroColumn { col: usize },
    /// The curve matrix has generic rank below d.
    DegenerateRank,
    /// The selected affine chart block is identically singular.
    ChartUnavailable,
    /// det(y') vanishes identically, so the Schwarzian is undefined.
    DerivativeSingular,
    /// The sigma-zero test requires deg(f) = d and a nonvanishing delta.
    SigmaHypotheses,
    /// The delta criterion requires deg(f) = d.
    DeltaRequiresDegreeD,
    /// Klein-quadric geometry is defined only for d = 2.
    KleinRequiresD2,
    /// The assembled 2d x 2d matrix is singular.
    NotAGroupElement,
    /// sigma(f) != 0, so f is not a matrix Moebius map.
    NotMoebius,
    /// The chosen base point is outside the chart domain or y' is singular there.
    BasePointSingular,
    /// A dimension sequence that cannot arise from a splitting type.
    BadH0Profile,
    /// d must be a positive integer.
    InvalidDimension,
    Parse(ParseError),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero rational function"),
            Error::SingularMatrix => write!(f, "singular matrix function"),
            Error::NotAPoint => write!(f, "not a point of the projective line"),
            Error::MixedDegrees { col } => write!(f, "column {col} mixes degrees"),
            Error::ZeroColumn { col } => write!(f, "column {col} is identically zero"),
            Error::DegenerateRank => write!(f, "degenerate curve matrix"),
            Error::ChartUnavailable => write!(f, "curve does not meet this chart"),
            Error::DerivativeSingular => {
                write!(f, "derivative identically singular - sigma undefined")
            }
            Error::SigmaHypotheses => {
                write!(f, "sigma-zero test requires deg(f) = d and delta != 0")
            }
            Error::DeltaRequiresDegreeD => write!(f, "delta criterion requires deg(f) = d"),
            Error::KleinRequiresD2 => write!(f, "Klein quadric defined only for d=2"),
            Error::NotAGroupElement => write!(f, "not a group element"),
            Error::NotMoebius => write!(f, "curve is not a matrix Moebius map"),
            Error::BasePointSingular => write!(f, "pick another base point"),
            Error::BadH0Profile => write!(f, "not an h0 profile"),
            Error::InvalidDimension => write!(f, "d must be a positive integer"),
            Error::Parse(e) => write!(f, "{e}"),
        }
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
