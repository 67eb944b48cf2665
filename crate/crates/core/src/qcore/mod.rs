// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex linear algebra for small Hilbert spaces.
//!
//! Basis ordering follows the usual Kronecker convention: the first qubit is
//! the high-order bit, so `|q1 q2>` lives at index `2*q1 + q2`. Rotations use
//! `exp(-i angle sigma/2)`.

mod density;
mod gates;
mod state;
mod unitary;

pub use density::{conjugate, DensityMatrix};
pub use gates::{diagonal_phase_unitary, rotation_matrix, single_qubit_rotation, RotationAxis};
pub use state::{overlap, StateVector};
pub use unitary::{apply, equal_up_to_global_phase, UnitaryOperator};

pub type C64 = nalgebra::Complex<f64>;

/// Tolerance for unitarity, norm and trace checks on produced objects.
pub const TOLERANCE: f64 = 1e-10;

/// Tolerance applied to caller-supplied state vectors before renormalization.
pub const INPUT_NORM_TOLERANCE: f64 = 1e-8;

/// Kronecker product, with `self` as the high-order factor.
pub trait Kronecker: Sized {
    fn kron(&self, rhs: &Self) -> Self;
}

/// `a ⊗ b`. Both operands must be of the same kind; mixing a state with an
/// operator does not type-check.
pub fn tensor_product<T: Kronecker>(a: &T, b: &T) -> T {
    a.kron(b)
}

#[inline]
pub(crate) fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub(crate) fn cis(theta: f64) -> C64 {
    C64::from_polar(1.0, theta)
}
