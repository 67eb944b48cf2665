// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! Pulse programs and their line-oriented text form.
//!
//! ```text
//! RF <spin> <flip_deg> <axis>
//! DELAY <multiple_of_1_over_J>
//! CRUSH
//! ```
//!
//! Numbers are printed with six significant digits. Blank lines and lines
//! starting with `#` are ignored when parsing.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{j_evolution_turns, Spin};
use crate::error::{Error, Result};
use crate::qcore::{single_qubit_rotation, RotationAxis, UnitaryOperator};

/// Phase of an RF pulse in the rotating frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PulseAxis {
    X,
    Y,
    NegX,
    NegY,
}

impl PulseAxis {
    /// The axis shifted by a phase of pi.
    pub fn flipped(self) -> Self {
        match self {
            PulseAxis::X => PulseAxis::NegX,
            PulseAxis::NegX => PulseAxis::X,
            PulseAxis::Y => PulseAxis::NegY,
            PulseAxis::NegY => PulseAxis::Y,
        }
    }

    pub fn rotation_axis(self) -> RotationAxis {
        match self {
            PulseAxis::X => RotationAxis::X,
            PulseAxis::Y => RotationAxis::Y,
            PulseAxis::NegX => RotationAxis::NegX,
            PulseAxis::NegY => RotationAxis::NegY,
        }
    }

    fn token(self) -> &'static str {
        match self {
            PulseAxis::X => "x",
            PulseAxis::Y => "y",
            PulseAxis::NegX => "-x",
            PulseAxis::NegY => "-y",
        }
    }
}

impl FromStr for PulseAxis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "x" => Ok(PulseAxis::X),
            "y" => Ok(PulseAxis::Y),
            "-x" => Ok(PulseAxis::NegX),
            "-y" => Ok(PulseAxis::NegY),
            other => Err(format!("unknown pulse axis `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum PulseElement {
    /// Hard pulse of `flip_angle` radians about `axis` on one spin.
    Rf {
        target: Spin,
        flip_angle: f64,
        axis: PulseAxis,
    },
    /// Free evolution under the scalar coupling, in units of `1/J`.
    Delay { turns: f64 },
    /// Field gradient that dephases all coherences.
    Crusher,
}

impl PulseElement {
    pub fn rf(target: Spin, flip_angle: f64, axis: PulseAxis) -> Result<Self> {
        if !(flip_angle > 0.0 && flip_angle <= TAU) {
            return Err(Error::out_of_range("flip_angle", flip_angle, "(0, 2pi]"));
        }
        Ok(PulseElement::Rf {
            target,
            flip_angle,
            axis,
        })
    }

    pub fn delay(turns: f64) -> Result<Self> {
        if !(turns >= 0.0 && turns.is_finite()) {
            return Err(Error::out_of_range("delay", turns, "[0, inf)"));
        }
        Ok(PulseElement::Delay { turns })
    }

    /// Unitary of a coherent element; `None` for the crusher.
    pub fn unitary(&self) -> Option<UnitaryOperator> {
        match *self {
            PulseElement::Rf {
                target,
                flip_angle,
                axis,
            } => Some(
                single_qubit_rotation(axis.rotation_axis(), flip_angle, target.index(), 2)
                    .expect("spin index is always < 2"),
            ),
            PulseElement::Delay { turns } => Some(j_evolution_turns(turns)),
            PulseElement::Crusher => None,
        }
    }
}

impl fmt::Display for PulseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PulseElement::Rf {
                target,
                flip_angle,
                axis,
            } => write!(
                f,
                "RF {target} {} {}",
                format_significant(flip_angle.to_degrees(), 6),
                axis.token()
            ),
            PulseElement::Delay { turns } => write!(f, "DELAY {}", format_significant(turns, 6)),
            PulseElement::Crusher => f.write_str("CRUSH"),
        }
    }
}

fn parse_element(line: &str) -> std::result::Result<PulseElement, String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let number = |s: &str| s.parse::<f64>().map_err(|e| format!("bad number `{s}`: {e}"));
    match fields.as_slice() {
        ["RF", spin, flip, axis] => {
            let target = Spin::from_label(spin).ok_or_else(|| format!("unknown spin `{spin}`"))?;
            let flip_angle = number(flip)?.to_radians();
            PulseElement::rf(target, flip_angle, axis.parse()?).map_err(|e| e.to_string())
        }
        ["DELAY", turns] => PulseElement::delay(number(turns)?).map_err(|e| e.to_string()),
        ["CRUSH"] => Ok(PulseElement::Crusher),
        _ => Err(format!("unrecognized element `{line}`")),
    }
}

/// Elements applied in order, first element first.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PulseSequence {
    elements: Vec<PulseElement>,
}

impl PulseSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_elements(elements: Vec<PulseElement>) -> Self {
        Self { elements }
    }

    pub fn push(&mut self, element: PulseElement) {
        self.elements.push(element);
    }

    /// Appends `other`, which then runs after `self`.
    pub fn then(mut self, other: &PulseSequence) -> Self {
        self.elements.extend_from_slice(&other.elements);
        self
    }

    pub fn elements(&self) -> &[PulseElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn has_crusher(&self) -> bool {
        self.elements.iter().any(|e| matches!(e, PulseElement::Crusher))
    }

    /// Delay durations, in units of `1/J`, in program order.
    pub fn delays(&self) -> Vec<f64> {
        self.elements
            .iter()
            .filter_map(|e| match e {
                PulseElement::Delay { turns } => Some(*turns),
                _ => None,
            })
            .collect()
    }

    /// Product `U_k ... U_2 U_1` of all element unitaries.
    pub fn unitary(&self) -> Result<UnitaryOperator> {
        self.elements.iter().try_fold(UnitaryOperator::identity(4), |acc, e| {
            e.unitary().map(|u| &u * &acc).ok_or(Error::CrusherInUnitary)
        })
    }
}

impl fmt::Display for PulseSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.elements {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for PulseSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut elements = Vec::new();
        for (n, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let e = parse_element(line).map_err(|message| Error::Parse { line: n + 1, message })?;
            elements.push(e);
        }
        Ok(Self { elements })
    }
}

/// `%g`-style formatting with `digits` significant digits.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Flip angle in radians from degrees, for building programs by hand.
pub fn degrees(deg: f64) -> f64 {
    deg * PI / 180.0
}
