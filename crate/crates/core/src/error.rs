use thiserror::Error;

/// Errors raised by the arithmetic, combinatorial maps, and the CLI harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: {dividend} / {divisor} leaves a nonzero remainder")]
    NonExactDivision { dividend: String, divisor: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("parts {parts:?} do not sum to {n}")]
    InvalidPartition { n: i64, parts: Vec<i64> },

    #[error("words share the letter(s) {0}; shuffles need complementary letter sets")]
    NotComplementary(String),

    #[error("cell ({row}, {col}) is not in the shape")]
    CellOutOfShape { row: usize, col: usize },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("not in family: {0}")]
    NotInFamily(String),

    #[error("invalid jeu de taquin hole at ({row}, {col}): {reason}")]
    InvalidHole { row: usize, col: usize, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("instance exceeds budget: {0}")]
    BudgetExceeded(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
