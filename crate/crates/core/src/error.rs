//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by precondition violations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("box ({x},{y}) is not a box of the diagram {shape}")]
    BoxNotInDiagram { x: i64, y: i64, shape: String },

    #[error("partition {mu} is not contained in the {m}x{n} rectangle")]
    NotContained { mu: String, m: usize, n: usize },

    #[error("partition {mu} has a box at ({x},{y}) with x >= {m} and y >= {n}; no generic rectangle decomposition exists")]
    GenericShapeViolation {
        mu: String,
        m: usize,
        n: usize,
        x: i64,
        y: i64,
    },

    #[error("box ({x},{y}) is not an inner corner of {shape}")]
    NotAnInnerCorner { x: i64, y: i64, shape: String },

    #[error("box ({x},{y}) is not an outer corner of {shape}")]
    NotAnOuterCorner { x: i64, y: i64, shape: String },

    #[error("{lambda}/{mu} is not a horizontal {r}-strip")]
    NotAHorizontalStrip { mu: String, lambda: String, r: usize },

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation at a pole")]
    EvaluationAtPole,

    #[error("the point ({x},{y}) is not a simple pole (order {order})")]
    NotASimplePole { x: i64, y: i64, order: i64 },

    #[error("the point ({x},{y}) is not regular (order {order})")]
    NotARegularPoint { x: i64, y: i64, order: i64 },

    #[error("assignment search over {total} boxes exceeds the bound {bound}")]
    SearchBoundExceeded { total: usize, bound: usize },

    #[error("cannot parse partition from {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
