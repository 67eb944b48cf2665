// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use std::ops::Mul;

use nalgebra::DMatrix;

use super::{Kronecker, StateVector, C64, TOLERANCE};
use crate::error::{Error, Result};

/// Square complex matrix with `U'U = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryOperator {
    entries: DMatrix<C64>,
}

impl UnitaryOperator {
    /// Wraps `matrix` after checking it is square and unitary within
    /// [`TOLERANCE`].
    pub fn new(matrix: DMatrix<C64>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        if matrix.nrows() == 0 {
            return Err(Error::EmptyDimension);
        }
        let u = Self { entries: matrix };
        let deviation = u.unitarity_deviation();
        if !(..=TOLERANCE).contains(&deviation) {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(u)
    }

    pub(crate) fn from_matrix_unchecked(entries: DMatrix<C64>) -> Self {
        debug_assert!(entries.is_square());
        Self { entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            entries: DMatrix::identity(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.entries[(row, col)]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            entries: self.entries.adjoint(),
        }
    }

    /// `self · rhs`; `rhs` acts first on states.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: rhs.dim(),
            });
        }
        Ok(Self {
            entries: &self.entries * &rhs.entries,
        })
    }

    /// Multiplies the operator by a scalar. The result stays unitary only
    /// when `|scale| = 1`.
    pub fn scaled(&self, scale: C64) -> Self {
        Self {
            entries: self.entries.map(|z| z * scale),
        }
    }

    /// `max |U'U - 1|` over all entries.
    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.dim();
        let prod = self.entries.adjoint() * &self.entries;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((prod[(i, j)] - C64::new(expected, 0.0)).norm());
            }
        }
        worst
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Kronecker for UnitaryOperator {
    fn kron(&self, rhs: &Self) -> Self {
        Self {
            entries: self.entries.kronecker(&rhs.entries),
        }
    }
}

impl Mul for &UnitaryOperator {
    type Output = UnitaryOperator;

    /// Panics on dimension mismatch; use [`UnitaryOperator::compose`] for a
    /// checked product.
    fn mul(self, rhs: Self) -> UnitaryOperator {
        self.compose(rhs).expect("operator dimensions must match")
    }
}

/// `u |s>`.
pub fn apply(u: &UnitaryOperator, s: &StateVector) -> Result<StateVector> {
    if u.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: s.dim(),
        });
    }
    Ok(StateVector::from_vector_unchecked(&u.entries * s.as_vector()))
}

/// True iff `u ≈ c·v` for some unit-modulus `c`, entrywise within `tol`.
///
/// `c` is read off the largest-magnitude entry of `v` (first one on ties).
pub fn equal_up_to_global_phase(u: &UnitaryOperator, v: &UnitaryOperator, tol: f64) -> Result<bool> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: v.dim(),
        });
    }
    let (mut anchor, mut best) = (0, -1.0);
    for (k, z) in v.entries.iter().enumerate() {
        if z.norm() > best {
            best = z.norm();
            anchor = k;
        }
    }
    let ratio = u.entries.as_slice()[anchor] * v.entries.as_slice()[anchor].conj();
    if ratio.norm() == 0.0 {
        return Ok(false);
    }
    let phase = ratio / ratio.norm();
    let worst = u
        .entries
        .iter()
        .zip(v.entries.iter())
        .map(|(a, b)| (a - phase * b).norm())
        .fold(0.0, f64::max);
    Ok(worst <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{c, cis, diagonal_phase_unitary, tensor_product};
    use std::f64::consts::PI;

    fn diag(entries: &[C64]) -> UnitaryOperator {
        UnitaryOperator::new(DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(entries))).unwrap()
    }

    #[test]
    fn identity_kron_identity() {
        let i2 = UnitaryOperator::identity(2);
        assert_eq!(tensor_product(&i2, &i2), UnitaryOperator::identity(4));
    }

    #[test]
    fn adjoint_of_diagonal_phase() {
        let phi = 0.9 * PI;
        let u = diagonal_phase_unitary(&[phi, 0.0, 0.0, 0.0]);
        let expected = diagonal_phase_unitary(&[-phi, 0.0, 0.0, 0.0]);
        assert!(u.adjoint().max_abs_diff(&expected) < 1e-15);
        assert!((&u.adjoint() * &u).max_abs_diff(&UnitaryOperator::identity(4)) < 1e-15);
        assert_eq!(UnitaryOperator::identity(3).adjoint(), UnitaryOperator::identity(3));
    }

    #[test]
    fn apply_phase_flip_on_bell_like_state() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let s = StateVector::new(vec![c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)]).unwrap();
        let z = diag(&[c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]);
        let out = apply(&z, &s).unwrap();
        assert_eq!(out.amplitudes(), &[c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-h, 0.0)]);
        assert_eq!(apply(&UnitaryOperator::identity(4), &s).unwrap(), s);
        assert!(matches!(
            apply(&UnitaryOperator::identity(2), &s),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn global_phase_comparison() {
        let u = diagonal_phase_unitary(&[0.3, -1.2, 2.0, 0.7]);
        assert!(equal_up_to_global_phase(&u, &u, 1e-12).unwrap());
        let shifted = u.scaled(cis(PI / 7.0));
        assert!(equal_up_to_global_phase(&shifted, &u, 1e-12).unwrap());
        assert!(equal_up_to_global_phase(&u, &shifted, 1e-12).unwrap());

        let z = diag(&[c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]);
        let mz = diag(&[c(-1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)]);
        assert!(equal_up_to_global_phase(&z, &mz, 1e-12).unwrap());
        assert!(!equal_up_to_global_phase(&z, &UnitaryOperator::identity(4), 1e-6).unwrap());
        assert!(equal_up_to_global_phase(&z, &UnitaryOperator::identity(2), 1e-6).is_err());
    }

    #[test]
    fn rejects_non_unitary() {
        let m = DMatrix::from_element(2, 2, c(1.0, 0.0));
        assert!(matches!(UnitaryOperator::new(m), Err(Error::NotUnitary { .. })));
        let m = DMatrix::from_element(2, 3, c(0.0, 0.0));
        assert!(matches!(UnitaryOperator::new(m), Err(Error::NotSquare { .. })));
    }
}
