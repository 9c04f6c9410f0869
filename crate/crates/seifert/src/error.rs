use alloc::string::String;
use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation that requires a square matrix got a rectangular one.
    NonSquare { rows: usize, cols: usize },
    /// Matrix dimensions do not line up for the requested operation.
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    /// The entry list does not match the declared shape.
    BadShape { rows: usize, cols: usize, len: usize },
    /// A congruence transform was requested with a matrix of determinant != +-1.
    NotUnimodular,
    /// The matrix fails det(V - V^T) = 1 and so is not a Seifert matrix.
    NotSeifert,
    /// A symmetric-matrix operation got a non-symmetric input.
    NotSymmetric,
    /// Signatures are only computed for symmetric matrices of size <= 4.
    SignatureTooLarge(usize),
    /// An S-move cannot be applied to the given matrix.
    InvalidMove(&'static str),
    /// The zero polynomial has no canonical unit normalization.
    ZeroPolynomial,
    /// Pretzel parameters must all be odd.
    EvenPretzelParameter,
    /// Parameter outside the range where the construction is defined.
    Precondition(String),
    /// A knot specification string could not be parsed.
    Parse(String),
    /// A catalog name is not among the embedded genus-one table.
    UnknownCatalogName(String),
    /// The analysis needs a 2x2 Seifert matrix but the input resolves to another size.
    UnsupportedSize(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            Error::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::BadShape { rows, cols, len } => write!(
                f,
                "entry list of length {len} does not fill a {rows}x{cols} matrix"
            ),
            Error::NotUnimodular => write!(f, "matrix is not unimodular (determinant != +-1)"),
            Error::NotSeifert => write!(f, "matrix fails det(V - V^T) = 1"),
            Error::NotSymmetric => write!(f, "matrix is not symmetric"),
            Error::SignatureTooLarge(n) => {
                write!(f, "signature implemented for size <= 4, got {n}x{n}")
            }
            Error::InvalidMove(why) => write!(f, "invalid S-move: {why}"),
            Error::ZeroPolynomial => write!(f, "the zero polynomial cannot be normalized"),
            Error::EvenPretzelParameter => write!(f, "pretzel parameters must all be odd"),
            Error::Precondition(why) => write!(f, "precondition violated: {why}"),
            Error::Parse(why) => write!(f, "cannot parse knot specification: {why}"),
            Error::UnknownCatalogName(name) => write!(f, "unknown catalog knot {name:?}"),
            Error::UnsupportedSize(n) => {
                write!(f, "analysis requires a 2x2 Seifert matrix, got {n}x{n}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
