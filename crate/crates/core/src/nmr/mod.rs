// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! Two-spin NMR realization of the search iterations.
//!
//! Pulses are ideal hard rotations, chemical shifts are taken as refocused,
//! and only the scalar coupling evolves during delays. The register starts
//! in an ideal `|00>` pseudo-pure state and is read out by dephasing all
//! coherences and recording the populations.

mod compile;
mod pulse;
mod spin;

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::qcore::{conjugate, DensityMatrix, StateVector, C64};

pub use compile::{
    compile_i00, compile_i00_inverse, compile_i11, compile_selective, compile_selective_inverse, composite_z,
    j_evolution, j_evolution_turns, theta_pulse, IterationBlocks, Marked, ZSign,
};
pub use pulse::{degrees, format_significant, PulseAxis, PulseElement, PulseSequence};
pub use spin::{EquilibriumState, Spin, SpinSystem};

/// The `|00>` pseudo-pure state.
pub fn pps_00() -> DensityMatrix {
    DensityMatrix::from_pure(&StateVector::zero(2))
}

/// `Ry(theta)⊗Ry(theta)|00>`: amplitudes
/// `(cos²(θ/2), sin(θ/2)cos(θ/2), sin(θ/2)cos(θ/2), sin²(θ/2))`.
pub fn prepare_superposition(theta: f64) -> Result<StateVector> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::out_of_range("theta", theta, "(0, pi)"));
    }
    let (co, si) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    StateVector::new(
        [co * co, si * co, si * co, si * si]
            .into_iter()
            .map(|a| C64::new(a, 0.0))
            .collect(),
    )
}

/// Zeroes every off-diagonal entry.
pub fn crusher(rho: &DensityMatrix) -> DensityMatrix {
    let m = rho.entries();
    DensityMatrix::from_matrix_unchecked(DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        if i == j {
            m[(i, j)]
        } else {
            C64::new(0.0, 0.0)
        }
    }))
}

/// Populations `(p00, p01, p10, p11)`.
pub fn measure_populations(rho: &DensityMatrix) -> Result<[f64; 4]> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let d = rho.diagonal();
    Ok([d[0], d[1], d[2], d[3]])
}

/// Runs `seq` on `rho0`, first element first. Coherent elements conjugate the
/// state; crushers dephase it.
pub fn run_sequence(seq: &PulseSequence, rho0: &DensityMatrix) -> Result<DensityMatrix> {
    if rho0.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho0.dim(),
        });
    }
    seq.elements()
        .iter()
        .try_fold(rho0.clone(), |rho, e| match e.unitary() {
            Some(u) => conjugate(&u, &rho),
            None => Ok(crusher(&rho)),
        })
}
