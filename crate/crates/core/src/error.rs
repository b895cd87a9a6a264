use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate rectangle [{x_lo},{x_hi}]x[{y_lo},{y_hi}]")]
    DegenerateRect {
        x_lo: i64,
        y_lo: i64,
        x_hi: i64,
        y_hi: i64,
    },
    #[error("coordinate {0} exceeds the supported magnitude 2^20")]
    CoordinateRange(i64),
    #[error("points {first} and {second} share x coordinate {value}")]
    DuplicateX {
        first: usize,
        second: usize,
        value: i64,
    },
    #[error("points {first} and {second} share y coordinate {value}")]
    DuplicateY {
        first: usize,
        second: usize,
        value: i64,
    },
    #[error("point {id} ({x},{y}) is not strictly inside the bounds")]
    OutsideBounds { id: usize, x: i64, y: i64 },
    #[error("query point ({x},{y}) lies outside the bounds")]
    QueryOutside { x: i64, y: i64 },
    #[error("oracle refuses {n} points (cap {cap})")]
    OracleCap { n: usize, cap: usize },
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("entry ({row},{col}) is undefined")]
    UndefinedEntry { row: usize, col: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot place {n} distinct coordinates in the requested bounds")]
    CoordinateBudget { n: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
