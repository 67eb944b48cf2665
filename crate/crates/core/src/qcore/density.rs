// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::DMatrix;

use super::{StateVector, UnitaryOperator, C64, TOLERANCE};
use crate::error::{Error, Result};

/// Lowest eigenvalue still accepted as positive semidefinite.
const PSD_FLOOR: f64 = -1e-9;

/// Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    entries: DMatrix<C64>,
}

impl DensityMatrix {
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
        let rho = Self { entries: matrix };
        rho.validate()?;
        Ok(rho)
    }

    /// `|psi><psi|`.
    pub fn from_pure(psi: &StateVector) -> Self {
        let v = psi.as_vector();
        Self {
            entries: v * v.adjoint(),
        }
    }

    pub(crate) fn from_matrix_unchecked(entries: DMatrix<C64>) -> Self {
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }

    pub fn trace(&self) -> C64 {
        self.entries.trace()
    }

    /// `tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        (&self.entries * &self.entries).trace().re
    }

    /// Real parts of the diagonal entries, i.e. basis-state populations.
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.entries[(i, i)].re).collect()
    }

    /// Largest `|rho - rho'|` entry.
    pub fn hermiticity_deviation(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.entries[(i, j)] - self.entries[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn min_eigenvalue(&self) -> f64 {
        // Symmetrize first so the eigen solver sees an exactly Hermitian input.
        let h = (&self.entries + self.entries.adjoint()).scale(0.5);
        h.symmetric_eigenvalues().min()
    }

    /// Checks Hermiticity and unit trace within [`TOLERANCE`], and that no
    /// eigenvalue drops below `-1e-9`.
    pub fn validate(&self) -> Result<()> {
        let herm = self.hermiticity_deviation();
        if !(..=TOLERANCE).contains(&herm) {
            return Err(Error::InvalidDensityMatrix(format!(
                "not Hermitian (deviation {herm:e})"
            )));
        }
        let tr = self.trace();
        if !(..=TOLERANCE).contains(&(tr - C64::new(1.0, 0.0)).norm()) {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr} != 1")));
        }
        let min = self.min_eigenvalue();
        if !(PSD_FLOOR..).contains(&min) {
            return Err(Error::InvalidDensityMatrix(format!("negative eigenvalue {min:e}")));
        }
        Ok(())
    }
}

/// `u rho u'`.
pub fn conjugate(u: &UnitaryOperator, rho: &DensityMatrix) -> Result<DensityMatrix> {
    if u.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: rho.dim(),
        });
    }
    let m = u.entries();
    Ok(DensityMatrix {
        entries: m * &rho.entries * m.adjoint(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{apply, c, single_qubit_rotation, tensor_product, RotationAxis};
    use std::f64::consts::PI;

    #[test]
    fn pure_state_round_trip_through_conjugation() {
        let u = single_qubit_rotation(RotationAxis::X, 0.7, 1, 2).unwrap();
        let psi = StateVector::zero(2);
        let rho = DensityMatrix::from_pure(&psi);
        let evolved = conjugate(&u, &rho).unwrap();
        let direct = DensityMatrix::from_pure(&apply(&u, &psi).unwrap());
        let diff = (evolved.entries() - direct.entries()).camax();
        assert!(diff < 1e-15);
        assert_eq!(conjugate(&UnitaryOperator::identity(4), &rho).unwrap(), rho);
    }

    #[test]
    fn theta_y_populations_match_product_form() {
        let theta = PI / 4.0;
        let ry = single_qubit_rotation(RotationAxis::Y, theta, 0, 1).unwrap();
        let pulse = tensor_product(&ry, &ry);
        let rho = conjugate(&pulse, &DensityMatrix::from_pure(&StateVector::zero(2))).unwrap();
        let (cs, sn) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        let expected = [cs.powi(4), cs * cs * sn * sn, sn * sn * cs * cs, sn.powi(4)];
        for (got, want) in rho.diagonal().iter().zip(expected) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn validation_catches_each_defect() {
        let m = DMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(0.1, 0.0), c(0.2, 0.0), c(0.5, 0.0)]);
        assert!(DensityMatrix::new(m).is_err());
        let m = DMatrix::from_diagonal_element(2, 2, c(0.6, 0.0));
        assert!(DensityMatrix::new(m).is_err());
        let m = DMatrix::from_row_slice(2, 2, &[c(1.2, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-0.2, 0.0)]);
        assert!(DensityMatrix::new(m).is_err());
        let ok = DMatrix::from_diagonal_element(2, 2, c(0.5, 0.0));
        let rho = DensityMatrix::new(ok).unwrap();
        assert!((rho.purity() - 0.5).abs() < 1e-15);
    }
}
