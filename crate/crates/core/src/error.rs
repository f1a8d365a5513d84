use std::fmt;

use thiserror::Error;

use crate::rings::RingError;

/// Syntax error in a word, braid, coloring or ring-element literal.
///
/// `position` is a 0-based character offset into the parsed input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },

    #[error("strand mismatch: expected {expected}, found {found}")]
    StrandMismatch { expected: usize, found: usize },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("braid {braid} does not preserve the coloring {coloring}")]
    NotColored { braid: String, coloring: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not invertible over {0}")]
    NotInvertible(String),

    #[error("invalid representation: {}", .0.join("; "))]
    InvalidRepresentation(Vec<String>),

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("det Phi(generator {generator} - 1) is zero; usable generators: {alternatives:?}")]
    ZeroDenominator {
        generator: usize,
        alternatives: Vec<usize>,
    },

    #[error("inconsistent presentation data: {0}")]
    InconsistentData(String),

    #[error("gcd of {} minors is only supported over a univariate Laurent ring over a field", .minors.len())]
    GcdNotSupported { minors: Vec<String> },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
