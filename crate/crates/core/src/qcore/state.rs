// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::DVector;

use super::{Kronecker, C64, INPUT_NORM_TOLERANCE};
use crate::error::{Error, Result};

/// Normalized complex amplitude vector over computational basis states.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: DVector<C64>,
}

impl StateVector {
    /// Builds a state from amplitudes whose squared norm is within
    /// [`INPUT_NORM_TOLERANCE`] of one. The amplitudes are renormalized.
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::EmptyDimension);
        }
        let v = DVector::from_vec(amplitudes);
        let norm_sqr = v.norm_squared();
        if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > INPUT_NORM_TOLERANCE {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self {
            amplitudes: v.unscale(norm_sqr.sqrt()),
        })
    }

    /// Scales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::EmptyDimension);
        }
        let v = DVector::from_vec(amplitudes);
        let norm = v.norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::NotNormalized { norm_sqr: norm * norm });
        }
        Ok(Self {
            amplitudes: v.unscale(norm),
        })
    }

    /// Computational basis state `|index>` in a space of dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        if index >= dim {
            return Err(Error::InvalidBasisIndex { index, dim });
        }
        let mut v = DVector::zeros(dim);
        v[index] = C64::new(1.0, 0.0);
        Ok(Self { amplitudes: v })
    }

    /// `|0...0>` on `n` qubits.
    pub fn zero(qubits: usize) -> Self {
        let mut v = DVector::zeros(1 << qubits);
        v[0] = C64::new(1.0, 0.0);
        Self { amplitudes: v }
    }

    pub(crate) fn from_vector_unchecked(amplitudes: DVector<C64>) -> Self {
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        self.amplitudes.as_slice()
    }

    pub fn amplitude(&self, index: usize) -> C64 {
        self.amplitudes[index]
    }

    pub fn as_vector(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.norm_squared()
    }

    /// Born-rule probabilities of each basis state.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }
}

impl Kronecker for StateVector {
    fn kron(&self, rhs: &Self) -> Self {
        Self {
            amplitudes: self.amplitudes.kronecker(&rhs.amplitudes),
        }
    }
}

/// Inner product `<a|b>`.
pub fn overlap(a: &StateVector, b: &StateVector) -> Result<C64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(a.amplitudes.dotc(&b.amplitudes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{c, tensor_product};

    #[test]
    fn kron_of_basis_states_follows_high_order_first() {
        let zero = StateVector::basis(2, 0).unwrap();
        let one = StateVector::basis(2, 1).unwrap();
        let s = tensor_product(&zero, &one);
        assert_eq!(s, StateVector::basis(4, 1).unwrap());
        let s = tensor_product(&one, &zero);
        assert_eq!(s, StateVector::basis(4, 2).unwrap());
    }

    #[test]
    fn overlap_basics() {
        let a = StateVector::basis(4, 3).unwrap();
        let b = StateVector::basis(4, 1).unwrap();
        assert_eq!(overlap(&a, &a).unwrap(), c(1.0, 0.0));
        assert_eq!(overlap(&a, &b).unwrap(), c(0.0, 0.0));
        let short = StateVector::basis(2, 0).unwrap();
        assert!(matches!(overlap(&a, &short), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn overlap_conjugates_the_bra() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let a = StateVector::new(vec![c(h, 0.0), c(0.0, h)]).unwrap();
        let b = StateVector::basis(2, 1).unwrap();
        let z = overlap(&a, &b).unwrap();
        assert!((z - c(0.0, -h)).norm() < 1e-15);
    }

    #[test]
    fn rejects_unnormalized_input() {
        let err = StateVector::new(vec![c(1.0, 0.0), c(0.1, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));
        assert!(matches!(StateVector::new(vec![]), Err(Error::EmptyDimension)));
    }

    #[test]
    fn nearly_normalized_input_is_renormalized() {
        let s = StateVector::new(vec![c(1.0 + 1e-9, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((s.norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn basis_index_is_checked() {
        assert!(matches!(
            StateVector::basis(4, 4),
            Err(Error::InvalidBasisIndex { index: 4, dim: 4 })
        ));
    }
}
