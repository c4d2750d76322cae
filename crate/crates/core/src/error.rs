use thiserror::Error;

/// Errors raised by constructions, conversions and solver setup.
///
/// Verification failures are never errors; they are reported through
/// [`crate::set_family::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {q} exceeds the configured cap {cap}")]
    FieldTooLarge { q: u64, cap: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element index {index} out of range for field of order {q}")]
    ElementOutOfRange { index: u32, q: u32 },
    #[error("lines belong to fields of different orders ({0} and {1})")]
    MixedFields(u32, u32),

    #[error("squares have different orders ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("{count} squares supplied but at most {max} fit a family of order {k}")]
    TooManySquares { count: usize, max: usize, k: usize },
    #[error("squares {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("square {0} is not a Latin square")]
    NotLatin(usize),
    #[error("family is not a Latin semiintersecting family: {0}")]
    NotLatinFamily(String),
    #[error("family uses {0} B-blocks, at least 3 are needed")]
    TooFewBlocks(usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("point {point} lies outside its side of a universe with N={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("weights are not balanced: {0}")]
    UnbalancedWeights(String),
    #[error("cannot embed a family with N={from} into N={to}")]
    ShrinkNotAllowed { from: usize, to: usize },
    #[error("{l} copies requested but at most p+1={max} parallel classes exist")]
    TooManyCopies { l: usize, max: usize },
    #[error("N={n} is below p^3={min}")]
    NTooSmall { n: usize, min: usize },
    #[error("p={p} exceeds k={k}")]
    PTooLarge { p: usize, k: usize },

    #[error("graph with {vertices} vertices exceeds the vertex cap {cap}")]
    TooLarge { vertices: u128, cap: usize },
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAClique(usize, usize),
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Variant name, as printed by the command-line front-end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::DivisionByZero => "DivisionByZero",
            Error::ElementOutOfRange { .. } => "ElementOutOfRange",
            Error::MixedFields(..) => "MixedFields",
            Error::OrderMismatch(..) => "OrderMismatch",
            Error::TooManySquares { .. } => "TooManySquares",
            Error::NotOrthogonal(..) => "NotOrthogonal",
            Error::NotLatin(_) => "NotLatin",
            Error::NotLatinFamily(_) => "NotLatinFamily",
            Error::TooFewBlocks(_) => "TooFewBlocks",
            Error::InvalidParams(_) => "InvalidParams",
            Error::PointOutOfRange { .. } => "PointOutOfRange",
            Error::UnbalancedWeights(_) => "UnbalancedWeights",
            Error::ShrinkNotAllowed { .. } => "ShrinkNotAllowed",
            Error::TooManyCopies { .. } => "TooManyCopies",
            Error::NTooSmall { .. } => "NTooSmall",
            Error::PTooLarge { .. } => "PTooLarge",
            Error::TooLarge { .. } => "TooLarge",
            Error::ParamMismatch(_) => "ParamMismatch",
            Error::NotAClique(..) => "NotAClique",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::Malformed(_) => "Malformed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
