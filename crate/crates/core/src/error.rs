use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Where a symbol grid stops being a Latin square. Coordinates are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum LatinViolation {
    NotSquare,
    SymbolOutOfRange { row: usize, col: usize, symbol: i64 },
    RowRepeat { row: usize, cols: (usize, usize), symbol: usize },
    ColumnRepeat { col: usize, rows: (usize, usize), symbol: usize },
    NotPermutationHypermatrix,
}

impl fmt::Display for LatinViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatinViolation::NotSquare => write!(f, "grid is not square"),
            LatinViolation::SymbolOutOfRange { row, col, symbol } => {
                write!(f, "cell ({row},{col}) holds {symbol}, outside the symbol range")
            }
            LatinViolation::RowRepeat { row, cols, symbol } => {
                write!(f, "symbol {symbol} repeats in row {row} at cells ({row},{}) and ({row},{})", cols.0, cols.1)
            }
            LatinViolation::ColumnRepeat { col, rows, symbol } => {
                write!(f, "symbol {symbol} repeats in column {col} at cells ({},{col}) and ({},{col})", rows.0, rows.1)
            }
            LatinViolation::NotPermutationHypermatrix => write!(f, "hypermatrix is not a permutation hypermatrix"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),
    #[error("order {n} is too small: {what} needs order at least {min}")]
    OrderTooSmall { what: &'static str, n: usize, min: usize },
    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not a Latin square: {0}")]
    NotLatin(LatinViolation),
    #[error("not a corner-sum hypermatrix: {0}")]
    NotCornerSum(String),
    #[error("hypermatrix is not in the preimage of the corner-sum lattice")]
    NotInPreimage,
    #[error("not an alternating sign matrix")]
    NotAsm,
    #[error("invalid grid notation: {0}")]
    Notation(String),
    #[error("invalid monotone hypertriangle: {0}")]
    Triangle(String),
    #[error("invalid T-block: {0}")]
    TBlock(String),
    #[error("invalid cycle switch: {0}")]
    CycleSwitch(String),
    #[error("order {n} exceeds the enumeration cap {cap} for {kind}")]
    CapExceeded { kind: String, n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
