// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! Compilation of the selective phase rotations into pulse programs.
//!
//! A selective rotation of `|00>` by `phi` is generated by
//! `exp(i phi/2 (Iz1 + Iz2 + 2 Iz1 Iz2))`, and of `|11>` by
//! `exp(i varphi/2 (-Iz1 - Iz2 + 2 Iz1 Iz2))`. The single-spin parts come from
//! composite z-rotations, the bilinear part from a coupling delay of
//! `phi / 2 pi` in units of `1/J`.
//!
//! Inverses follow three rules: the blocks run in reverse order, each
//! composite rotation has its centre pulse phase-shifted by pi, and the delay
//! becomes `(4 pi - phi) / 2 pi J`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use super::{PulseAxis, PulseElement, PulseSequence, Spin, SpinSystem};
use crate::error::{Error, Result};
use crate::qcore::{diagonal_phase_unitary, UnitaryOperator};

/// Direction of a composite z-rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZSign {
    /// Centre pulse about `-x`: realizes `exp(+i beta Iz)`.
    Plus,
    /// Centre pulse about `+x`: realizes `exp(-i beta Iz)`.
    Minus,
}

impl ZSign {
    pub fn flipped(self) -> Self {
        match self {
            ZSign::Plus => ZSign::Minus,
            ZSign::Minus => ZSign::Plus,
        }
    }

    fn centre_axis(self) -> PulseAxis {
        match self {
            ZSign::Plus => PulseAxis::NegX,
            ZSign::Minus => PulseAxis::X,
        }
    }
}

/// Basis state singled out by a selective rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Marked {
    /// `|00>`
    Zeros,
    /// `|11>`
    Ones,
}

/// `[pi/2]_y [beta]_{-x or x} [pi/2]_{-y}` on one spin, in time order.
///
/// A zero `half_angle` drops the centre pulse, leaving two cancelling
/// quarter turns.
pub fn composite_z(half_angle: f64, sign: ZSign, target: Spin) -> Result<PulseSequence> {
    if !(0.0..=TAU).contains(&half_angle) {
        return Err(Error::out_of_range("half_angle", half_angle, "[0, 2pi]"));
    }
    let mut seq = PulseSequence::new();
    seq.push(PulseElement::rf(target, FRAC_PI_2, PulseAxis::Y)?);
    if half_angle > 0.0 {
        seq.push(PulseElement::rf(target, half_angle, sign.centre_axis())?);
    }
    seq.push(PulseElement::rf(target, FRAC_PI_2, PulseAxis::NegY)?);
    Ok(seq)
}

/// Coupling evolution over `turns / J` seconds, `exp(i 2 pi turns Iz1 Iz2)`.
pub fn j_evolution_turns(turns: f64) -> UnitaryOperator {
    // Iz1 Iz2 = diag(1/4, -1/4, -1/4, 1/4)
    let q = TAU * turns / 4.0;
    diagonal_phase_unitary(&[q, -q, -q, q])
}

/// Coupling evolution for `duration` seconds in `system`.
pub fn j_evolution(system: &SpinSystem, duration: f64) -> Result<UnitaryOperator> {
    if !(duration >= 0.0 && duration.is_finite()) {
        return Err(Error::out_of_range("duration", duration, "[0, inf)"));
    }
    Ok(j_evolution_turns(system.turns(duration)))
}

fn check_phase(name: &'static str, phase: f64) -> Result<()> {
    if phase > 0.0 && phase < TAU {
        Ok(())
    } else {
        Err(Error::out_of_range(name, phase, "(0, 2pi)"))
    }
}

fn sign_for(marked: Marked) -> ZSign {
    match marked {
        Marked::Zeros => ZSign::Plus,
        Marked::Ones => ZSign::Minus,
    }
}

/// Selective rotation of `marked` by `phase`: composite z on the first spin,
/// then on the second, then the coupling delay.
pub fn compile_selective(marked: Marked, phase: f64) -> Result<PulseSequence> {
    check_phase("phase", phase)?;
    let sign = sign_for(marked);
    let mut seq = composite_z(phase / 2.0, sign, Spin::First)?.then(&composite_z(phase / 2.0, sign, Spin::Second)?);
    seq.push(PulseElement::delay(phase / TAU)?);
    Ok(seq)
}

/// Inverse of [`compile_selective`] built by the reversal rules.
pub fn compile_selective_inverse(marked: Marked, phase: f64) -> Result<PulseSequence> {
    check_phase("phase", phase)?;
    let sign = sign_for(marked).flipped();
    let mut seq = PulseSequence::new();
    seq.push(PulseElement::delay((2.0 * TAU - phase) / TAU)?);
    Ok(seq
        .then(&composite_z(phase / 2.0, sign, Spin::Second)?)
        .then(&composite_z(phase / 2.0, sign, Spin::First)?))
}

/// `I_00^phi`.
pub fn compile_i00(phi: f64) -> Result<PulseSequence> {
    check_phase("phi", phi)?;
    compile_selective(Marked::Zeros, phi)
}

/// `I_00^-phi`.
pub fn compile_i00_inverse(phi: f64) -> Result<PulseSequence> {
    check_phase("phi", phi)?;
    compile_selective_inverse(Marked::Zeros, phi)
}

/// Error-free inversion of `|11>`: quarter-turn centre pulses and a `1/2J`
/// delay.
pub fn compile_i11() -> PulseSequence {
    compile_selective(Marked::Ones, PI).expect("pi is a valid phase")
}

/// Pulse `theta` about `axis` on both spins.
pub fn theta_pulse(theta: f64, axis: PulseAxis) -> Result<PulseSequence> {
    Ok(PulseSequence::from_elements(vec![
        PulseElement::rf(Spin::First, theta, axis)?,
        PulseElement::rf(Spin::Second, theta, axis)?,
    ]))
}

/// The building blocks of one search iteration on the two-spin register.
#[derive(Clone, Debug, PartialEq)]
pub struct IterationBlocks {
    pub prepare: PulseSequence,
    pub unprepare: PulseSequence,
    pub source_rotation: PulseSequence,
    pub source_rotation_inverse: PulseSequence,
    pub target_rotation: PulseSequence,
    pub target_rotation_inverse: PulseSequence,
}

impl IterationBlocks {
    /// Blocks for source `Ry(theta)⊗Ry(theta)|00>`, target `|11>`, and
    /// realized phases `phi` (on `I_00`) and `varphi` (on `I_11`).
    pub fn new(theta: f64, phi: f64, varphi: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::out_of_range("theta", theta, "(0, pi)"));
        }
        check_phase("varphi", varphi)?;
        // An exact inversion is its own inverse.
        let (target_rotation, target_rotation_inverse) = if varphi == PI {
            (compile_i11(), compile_i11())
        } else {
            (
                compile_selective(Marked::Ones, varphi)?,
                compile_selective_inverse(Marked::Ones, varphi)?,
            )
        };
        Ok(Self {
            prepare: theta_pulse(theta, PulseAxis::Y)?,
            unprepare: theta_pulse(theta, PulseAxis::NegY)?,
            source_rotation: compile_i00(phi)?,
            source_rotation_inverse: compile_i00_inverse(phi)?,
            target_rotation,
            target_rotation_inverse,
        })
    }

    /// `G = Θy I00^phi Θy' I11^varphi`, in time order.
    pub fn grover_iteration(&self) -> PulseSequence {
        self.target_rotation
            .clone()
            .then(&self.unprepare)
            .then(&self.source_rotation)
            .then(&self.prepare)
    }

    /// `T = Θy I00^-phi Θy' I11^-varphi · G`, in time order.
    pub fn robust_iteration(&self) -> PulseSequence {
        self.grover_iteration()
            .then(&self.target_rotation_inverse)
            .then(&self.unprepare)
            .then(&self.source_rotation_inverse)
            .then(&self.prepare)
    }
}
