// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("state is not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("operator is not unitary (max |U'U - 1| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("qubit index {target} out of range for {qubits} qubit(s)")]
    InvalidTarget { target: usize, qubits: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    InvalidBasisIndex { index: usize, dim: usize },

    #[error("degenerate search: overlap |<t|s>| = {alpha} must lie strictly inside (0, 1)")]
    DegenerateOverlap { alpha: f64 },

    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("sin(phi/2)*sin(varphi/2) vanishes; iteration count is undefined")]
    DegeneratePhase,

    #[error("pulse sequence contains a crusher and has no unitary")]
    CrusherInUnitary,

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("records differ in length ({left} vs {right} rows)")]
    LengthMismatch { left: usize, right: usize },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn out_of_range(name: &'static str, value: f64, range: &'static str) -> Self {
        Error::OutOfRange { name, value, range }
    }

    /// Whether the error stems from user-supplied parameters rather than
    /// from a failure inside the simulation.
    pub fn is_configuration(&self) -> bool {
        !matches!(self, Error::InvariantViolation(_) | Error::Io(_) | Error::Json(_))
    }
}
