// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! Amplitude amplification with systematic phase errors.
//!
//! The apparatus is assumed to realize the selective rotations `I_s^phi` and
//! `I_t^varphi` instead of the ideal inversions. The original iteration is
//! `G = I_s^phi I_t^varphi`; the error-cancelling iteration is
//! `T = I_s^-phi I_t^-varphi I_s^phi I_t^varphi`. In every product the
//! rightmost factor acts first.

mod schedule;
mod two_level;

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{overlap, StateVector, UnitaryOperator, C64};

pub use schedule::{iterate_schedule, trajectory};
pub use two_level::{two_level_schedule, two_level_step, TwoLevelModel};

/// Which iteration operator drives the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Grover's iteration `G`.
    Original,
    /// The error-cancelling iteration `T`.
    Modified,
}

impl Algorithm {
    /// Oracle calls (selective target rotations) consumed by one step.
    pub fn oracle_calls_per_step(self) -> usize {
        match self {
            Algorithm::Original => 1,
            Algorithm::Modified => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Original => "original",
            Algorithm::Modified => "modified",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "original" => Ok(Algorithm::Original),
            "modified" => Ok(Algorithm::Modified),
            other => Err(Error::InvalidConfig(format!("unknown algorithm `{other}`"))),
        }
    }
}

/// Default constant `c` in the phase-matching test `|phi - varphi| <= c·alpha`.
pub const DEFAULT_PHASE_MATCHING_CONSTANT: f64 = 1.0;

/// Selective phase rotation `1 - (1 - e^{i omega}) |psi><psi|`.
pub fn selective_phase(psi: &StateVector, omega: f64) -> UnitaryOperator {
    let v = psi.as_vector();
    let factor = C64::new(1.0, 0.0) - C64::from_polar(1.0, omega);
    let n = psi.dim();
    let m = DMatrix::<C64>::identity(n, n) - (v * v.adjoint()) * factor;
    UnitaryOperator::from_matrix_unchecked(m)
}

/// Equal superposition over `2^n` basis states (Walsh-Hadamard on `|0..0>`).
pub fn uniform_state(qubits: usize) -> Result<StateVector> {
    if qubits == 0 {
        return Err(Error::EmptyDimension);
    }
    let dim = 1usize << qubits;
    let amp = C64::new(1.0 / (dim as f64).sqrt(), 0.0);
    StateVector::normalized(vec![amp; dim])
}

/// A search instance: source `|s>`, marked basis state `|t>`, and the error
/// phases realized on `I_s` and `I_t`.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchProblem {
    source: StateVector,
    target: usize,
    phi: f64,
    varphi: f64,
}

impl SearchProblem {
    pub fn new(source: StateVector, target: usize, phi: f64, varphi: f64) -> Result<Self> {
        if target >= source.dim() {
            return Err(Error::InvalidBasisIndex {
                index: target,
                dim: source.dim(),
            });
        }
        for (name, value) in [("phi", phi), ("varphi", varphi)] {
            if !(value > 0.0 && value < TAU) {
                return Err(Error::out_of_range(name, value, "(0, 2pi)"));
            }
        }
        let alpha = source.amplitude(target).norm();
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::DegenerateOverlap { alpha });
        }
        Ok(Self {
            source,
            target,
            phi,
            varphi,
        })
    }

    pub fn source(&self) -> &StateVector {
        &self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn target_state(&self) -> StateVector {
        StateVector::basis(self.source.dim(), self.target).expect("target validated at construction")
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn varphi(&self) -> f64 {
        self.varphi
    }

    /// `|<t|s>|`.
    pub fn alpha(&self) -> f64 {
        self.source.amplitude(self.target).norm()
    }
}

/// `I_s^phi I_t^varphi` for arbitrary (possibly zero or negative) phases.
pub fn grover_unitary(source: &StateVector, target: &StateVector, phi: f64, varphi: f64) -> Result<UnitaryOperator> {
    selective_phase(source, phi).compose(&selective_phase(target, varphi))
}

/// `I_s^-phi I_t^-varphi I_s^phi I_t^varphi` for arbitrary phases.
pub fn robust_unitary(source: &StateVector, target: &StateVector, phi: f64, varphi: f64) -> Result<UnitaryOperator> {
    let forward = grover_unitary(source, target, phi, varphi)?;
    let reversed = grover_unitary(source, target, -phi, -varphi)?;
    reversed.compose(&forward)
}

pub fn grover_operator(p: &SearchProblem) -> UnitaryOperator {
    grover_unitary(&p.source, &p.target_state(), p.phi, p.varphi).expect("dimensions agree by construction")
}

pub fn robust_operator(p: &SearchProblem) -> UnitaryOperator {
    robust_unitary(&p.source, &p.target_state(), p.phi, p.varphi).expect("dimensions agree by construction")
}

pub fn search_operator(p: &SearchProblem, algorithm: Algorithm) -> UnitaryOperator {
    match algorithm {
        Algorithm::Original => grover_operator(p),
        Algorithm::Modified => robust_operator(p),
    }
}

/// `pi / (4 alpha sin(phi/2) sin(varphi/2))`.
///
/// The count is measured in oracle calls, i.e. in applications of `G`; a run
/// of the modified search peaks after about half as many `T` steps.
pub fn predicted_iterations(alpha: f64, phi: f64, varphi: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::DegenerateOverlap { alpha });
    }
    let sines = (phi / 2.0).sin() * (varphi / 2.0).sin();
    if !(sines.abs() > 1e-12 && sines.is_finite()) {
        return Err(Error::DegeneratePhase);
    }
    Ok(PI / (4.0 * alpha * sines))
}

/// `|phi - varphi| <= c·alpha`.
pub fn phase_matching_satisfied(phi: f64, varphi: f64, alpha: f64, c: f64) -> bool {
    (phi - varphi).abs() <= c * alpha
}

/// `|<a|b>|`, the overlap magnitude used as `alpha`.
pub fn overlap_magnitude(a: &StateVector, b: &StateVector) -> Result<f64> {
    overlap(a, b).map(|z| z.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{apply, c, cis, equal_up_to_global_phase};

    fn uniform2() -> StateVector {
        uniform_state(2).unwrap()
    }

    #[test]
    fn selective_phase_identities() {
        let psi = uniform2();
        assert!(selective_phase(&psi, 0.0).max_abs_diff(&UnitaryOperator::identity(4)) < 1e-15);

        let t = StateVector::basis(4, 3).unwrap();
        let inv = selective_phase(&t, PI);
        let want = crate::qcore::diagonal_phase_unitary(&[0.0, 0.0, 0.0, PI]);
        assert!(inv.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn selective_phase_on_uniform_state_is_rank_one_update() {
        // Direct entrywise evaluation: delta_ij - (1 - e^{iw}) / 4.
        let omega = 0.9 * PI;
        let u = selective_phase(&uniform2(), omega);
        let corr = (c(1.0, 0.0) - cis(omega)) * 0.25;
        for i in 0..4 {
            for j in 0..4 {
                let delta = if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) };
                assert!((u.entry(i, j) - (delta - corr)).norm() < 1e-15);
            }
        }
        assert!(u.unitarity_deviation() < 1e-14);
    }

    #[test]
    fn four_item_grover_is_exact_in_one_step() {
        let p = SearchProblem::new(uniform2(), 3, PI, PI).unwrap();
        let out = apply(&grover_operator(&p), p.source()).unwrap();
        assert!((out.probabilities()[3] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn source_equal_to_target_picks_up_both_phases() {
        let t = StateVector::basis(4, 2).unwrap();
        let (phi, varphi) = (0.4, 1.3);
        let g = grover_unitary(&t, &t, phi, varphi).unwrap();
        let out = apply(&g, &t).unwrap();
        assert!((out.amplitude(2) - cis(phi + varphi)).norm() < 1e-14);
    }

    #[test]
    fn robust_is_two_grover_steps_for_exact_inversions() {
        let p = SearchProblem::new(crate::nmr::prepare_superposition(PI / 9.0).unwrap(), 3, PI, PI).unwrap();
        let g = grover_operator(&p);
        let t = robust_operator(&p);
        assert!(t.max_abs_diff(&(&g * &g)) < 1e-12);
    }

    #[test]
    fn robust_with_zero_phases_is_identity() {
        let s = uniform2();
        let t = StateVector::basis(4, 3).unwrap();
        let u = robust_unitary(&s, &t, 0.0, 0.0).unwrap();
        assert!(equal_up_to_global_phase(&u, &UnitaryOperator::identity(4), 1e-15).unwrap());
    }

    #[test]
    fn problem_validation() {
        let s = uniform2();
        assert!(matches!(
            SearchProblem::new(s.clone(), 4, PI, PI),
            Err(Error::InvalidBasisIndex { .. })
        ));
        assert!(SearchProblem::new(s.clone(), 3, 0.0, PI).is_err());
        assert!(SearchProblem::new(s.clone(), 3, PI, TAU).is_err());
        let t = StateVector::basis(4, 3).unwrap();
        assert!(matches!(
            SearchProblem::new(t, 3, PI, PI),
            Err(Error::DegenerateOverlap { .. })
        ));
        assert!(matches!(
            SearchProblem::new(StateVector::basis(4, 0).unwrap(), 3, PI, PI),
            Err(Error::DegenerateOverlap { .. })
        ));
    }

    #[test]
    fn predicted_iteration_counts() {
        assert!((predicted_iterations(0.5, PI, PI).unwrap() - PI / 2.0).abs() < 1e-15);
        // pi / (4 * 0.00091 * sin(0.45 pi)) evaluated independently:
        // sin(0.45 pi) = 0.98768834059513777.
        let want = PI / (4.0 * 0.00091 * 0.987_688_340_595_137_8);
        let got = predicted_iterations(0.00091, PI, 0.9 * PI).unwrap();
        assert!((got - want).abs() < 1e-9);
        assert!((got - 873.7).abs() < 0.2);
        let got = predicted_iterations(0.030, 0.9 * PI, PI).unwrap();
        assert!((got - 26.5).abs() < 0.05);
        assert!(matches!(
            predicted_iterations(0.1, 0.0, PI),
            Err(Error::DegeneratePhase)
        ));
        assert!(matches!(
            predicted_iterations(0.1, PI, TAU),
            Err(Error::DegeneratePhase)
        ));
        assert!(predicted_iterations(1.0, PI, PI).is_err());
    }

    #[test]
    fn phase_matching_verdicts() {
        assert!(phase_matching_satisfied(0.3, 0.3, 1e-6, 1.0));
        assert!(!phase_matching_satisfied(PI, 0.9 * PI, 0.00091, 1.0));
        assert!(phase_matching_satisfied(0.9 * PI, 0.9 * PI, 0.00091, 1.0));
    }

    #[test]
    fn uniform_states() {
        let s = uniform_state(1).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(s.amplitudes().iter().all(|a| (a - c(h, 0.0)).norm() < 1e-15));
        let s = uniform_state(2).unwrap();
        let t = StateVector::basis(4, 3).unwrap();
        assert!((overlap_magnitude(&t, &s).unwrap() - 0.5).abs() < 1e-15);
        let s = uniform_state(3).unwrap();
        assert!(s
            .amplitudes()
            .iter()
            .all(|a| (a.re - 8f64.sqrt().recip()).abs() < 1e-15));
        assert!(uniform_state(0).is_err());
    }
}
