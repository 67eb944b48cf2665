// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::{DMatrix, DVector, Matrix2};
use serde::{Deserialize, Serialize};

use super::{c, cis, Kronecker, UnitaryOperator, C64};
use crate::error::{Error, Result};

/// Rotation axis in the rotating frame. `NegX` and `NegY` are the barred
/// axes of pulse notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RotationAxis {
    X,
    Y,
    NegX,
    NegY,
    Z,
}

/// `exp(-i angle sigma_axis / 2)` as a 2x2 matrix.
pub fn rotation_matrix(axis: RotationAxis, angle: f64) -> Matrix2<C64> {
    let (co, si) = ((angle / 2.0).cos(), (angle / 2.0).sin());
    let zero = c(0.0, 0.0);
    match axis {
        RotationAxis::X => Matrix2::new(c(co, 0.0), c(0.0, -si), c(0.0, -si), c(co, 0.0)),
        RotationAxis::NegX => Matrix2::new(c(co, 0.0), c(0.0, si), c(0.0, si), c(co, 0.0)),
        RotationAxis::Y => Matrix2::new(c(co, 0.0), c(-si, 0.0), c(si, 0.0), c(co, 0.0)),
        RotationAxis::NegY => Matrix2::new(c(co, 0.0), c(si, 0.0), c(-si, 0.0), c(co, 0.0)),
        RotationAxis::Z => Matrix2::new(cis(-angle / 2.0), zero, zero, cis(angle / 2.0)),
    }
}

/// Single-qubit rotation on qubit `target` of an `n`-qubit register, with
/// qubit 0 as the high-order bit.
pub fn single_qubit_rotation(axis: RotationAxis, angle: f64, target: usize, qubits: usize) -> Result<UnitaryOperator> {
    if target >= qubits {
        return Err(Error::InvalidTarget { target, qubits });
    }
    let r = rotation_matrix(axis, angle);
    let local = UnitaryOperator::from_matrix_unchecked(DMatrix::from_fn(2, 2, |i, j| r[(i, j)]));
    let before = UnitaryOperator::identity(1 << target);
    let after = UnitaryOperator::identity(1 << (qubits - target - 1));
    Ok(before.kron(&local).kron(&after))
}

/// `diag(exp(i w_0), exp(i w_1), ...)`.
pub fn diagonal_phase_unitary(weights: &[f64]) -> UnitaryOperator {
    let d = DVector::from_iterator(weights.len(), weights.iter().map(|&w| cis(w)));
    UnitaryOperator::from_matrix_unchecked(DMatrix::from_diagonal(&d))
}
