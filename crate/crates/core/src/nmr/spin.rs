// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the two spins. `First` is the high-order qubit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Spin {
    First,
    Second,
}

impl Spin {
    pub const ALL: [Spin; 2] = [Spin::First, Spin::Second];

    /// Qubit index with `First = 0`.
    pub fn index(self) -> usize {
        match self {
            Spin::First => 0,
            Spin::Second => 1,
        }
    }

    /// One-based label used in pulse listings.
    pub fn label(self) -> u8 {
        self.index() as u8 + 1
    }

    pub fn from_label(label: &str) -> Option<Self> {
        match label {
            "1" => Some(Spin::First),
            "2" => Some(Spin::Second),
            _ => None,
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Weakly coupled two-spin system, `H = v1 Iz1 + v2 Iz2 + J Iz1 Iz2`.
///
/// Chemical shifts are refocused in every sequence used here, so the Larmor
/// frequencies are recorded but never evolved.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinSystem {
    j_coupling_hz: f64,
    larmor_hz: [f64; 2],
}

impl SpinSystem {
    pub fn new(j_coupling_hz: f64, larmor_hz: [f64; 2]) -> Result<Self> {
        if !(j_coupling_hz > 0.0 && j_coupling_hz.is_finite()) {
            return Err(Error::out_of_range("j_coupling", j_coupling_hz, "(0, inf)"));
        }
        Ok(Self {
            j_coupling_hz,
            larmor_hz,
        })
    }

    /// 13C-labelled chloroform at 11.7 T: 1H at 500 MHz, 13C at 125 MHz,
    /// J(HC) = 209 Hz.
    pub fn chloroform() -> Self {
        Self {
            j_coupling_hz: 209.0,
            larmor_hz: [500e6, 125e6],
        }
    }

    pub fn j_coupling_hz(&self) -> f64 {
        self.j_coupling_hz
    }

    pub fn larmor_hz(&self) -> [f64; 2] {
        self.larmor_hz
    }

    /// Converts seconds to multiples of `1/J`.
    pub fn turns(&self, seconds: f64) -> f64 {
        seconds * self.j_coupling_hz
    }

    /// Converts multiples of `1/J` to seconds.
    pub fn seconds(&self, turns: f64) -> f64 {
        turns / self.j_coupling_hz
    }
}

impl Default for SpinSystem {
    fn default() -> Self {
        Self::chloroform()
    }
}

/// High-temperature equilibrium deviation `Iz1 + r·Iz2`, in units of the
/// first spin's polarization, with `r` the gyromagnetic ratio of the second
/// spin to the first.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumState {
    gamma_ratio: f64,
}

impl EquilibriumState {
    pub fn new(gamma_ratio: f64) -> Result<Self> {
        if !gamma_ratio.is_finite() {
            return Err(Error::out_of_range("gamma_ratio", gamma_ratio, "finite reals"));
        }
        Ok(Self { gamma_ratio })
    }

    /// 1H / 13C, ratio 1 : 0.25.
    pub fn chloroform() -> Self {
        Self { gamma_ratio: 0.25 }
    }

    pub fn gamma_ratio(&self) -> f64 {
        self.gamma_ratio
    }

    /// Diagonal of the deviation matrix in the computational basis.
    pub fn deviation(&self) -> [f64; 4] {
        let r = self.gamma_ratio;
        let iz = |bit: usize| if bit == 0 { 0.5 } else { -0.5 };
        std::array::from_fn(|k| iz(k >> 1) + r * iz(k & 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equilibrium_deviation_is_traceless_and_diagonal() {
        let eq = EquilibriumState::chloroform();
        let d = eq.deviation();
        assert_eq!(d, [0.625, 0.375, -0.375, -0.625]);
        assert!(d.iter().sum::<f64>().abs() < 1e-12);
    }

    #[test]
    fn spin_system_units() {
        let sys = SpinSystem::chloroform();
        assert_eq!(sys.j_coupling_hz(), 209.0);
        assert!((sys.turns(sys.seconds(0.45)) - 0.45).abs() < 1e-15);
        assert!(SpinSystem::new(0.0, [1.0, 1.0]).is_err());
        assert!(SpinSystem::new(-3.0, [1.0, 1.0]).is_err());
    }
}
