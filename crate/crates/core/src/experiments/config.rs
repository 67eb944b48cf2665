// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::amplify::{predicted_iterations, Algorithm};
use crate::error::{Error, Result};
use crate::nmr::prepare_superposition;
use crate::qcore::StateVector;

/// Marked state of every two-qubit scenario: `|11>`.
pub const TARGET_INDEX: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgorithmChoice {
    Original,
    Modified,
    Both,
}

impl AlgorithmChoice {
    pub fn algorithms(self) -> &'static [Algorithm] {
        match self {
            AlgorithmChoice::Original => &[Algorithm::Original],
            AlgorithmChoice::Modified => &[Algorithm::Modified],
            AlgorithmChoice::Both => &[Algorithm::Original, Algorithm::Modified],
        }
    }
}

impl FromStr for AlgorithmChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "original" => Ok(Self::Original),
            "modified" => Ok(Self::Modified),
            "both" => Ok(Self::Both),
            other => Err(Error::InvalidConfig(format!("unknown algorithm `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    /// Exact 2x2 reduction; accepts either `theta` or `alpha`.
    TwoLevel,
    /// Dense operators on the two-qubit register.
    StateVector,
    /// Pulse-compiled density-matrix simulation.
    NmrPulse,
}

impl Backend {
    pub const ALL: [Backend; 3] = [Backend::TwoLevel, Backend::StateVector, Backend::NmrPulse];

    pub fn as_str(self) -> &'static str {
        match self {
            Backend::TwoLevel => "two_level",
            Backend::StateVector => "state_vector",
            Backend::NmrPulse => "nmr_pulse",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Backend::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown backend `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::InvalidConfig(format!("unknown format `{other}`"))),
        }
    }
}

/// How the source state is specified.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preparation {
    /// Two-qubit source `Ry(theta)⊗Ry(theta)|00>`.
    Theta(f64),
    /// Bare overlap `|<t|s>|`, two-level backend only.
    Alpha(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub algorithm: AlgorithmChoice,
    pub backend: Backend,
    pub preparation: Preparation,
    pub phi: f64,
    pub varphi: f64,
    pub iterations: usize,
    pub output_format: OutputFormat,
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::InvalidConfig("iterations must be at least 1".into()));
        }
        for (name, value) in [("phi", self.phi), ("varphi", self.varphi)] {
            if !(value > 0.0 && value < TAU) {
                return Err(Error::out_of_range(name, value, "(0, 2pi)"));
            }
        }
        match self.preparation {
            Preparation::Theta(theta) => {
                if !(theta > 0.0 && theta < PI) {
                    return Err(Error::out_of_range("theta", theta, "(0, pi)"));
                }
            }
            Preparation::Alpha(alpha) => {
                if !(alpha > 0.0 && alpha < 1.0) {
                    return Err(Error::out_of_range("alpha", alpha, "(0, 1)"));
                }
                if self.backend != Backend::TwoLevel {
                    return Err(Error::InvalidConfig(format!(
                        "backend {} needs a two-qubit preparation (theta), not alpha",
                        self.backend
                    )));
                }
            }
        }
        Ok(())
    }

    /// Two-qubit source state, when the preparation defines one.
    pub fn source_state(&self) -> Option<Result<StateVector>> {
        match self.preparation {
            Preparation::Theta(theta) => Some(prepare_superposition(theta)),
            Preparation::Alpha(_) => None,
        }
    }

    /// `|<t|s>|`.
    pub fn alpha(&self) -> Result<f64> {
        match self.preparation {
            Preparation::Theta(theta) => Ok(prepare_superposition(theta)?.amplitude(TARGET_INDEX).norm()),
            Preparation::Alpha(alpha) => Ok(alpha),
        }
    }

    pub fn theta(&self) -> Option<f64> {
        match self.preparation {
            Preparation::Theta(theta) => Some(theta),
            Preparation::Alpha(_) => None,
        }
    }
}

/// Named parameterizations of the reference simulations and experiments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Large database, mismatched phases.
    Fig1a,
    /// Large database, matched phases.
    Fig1b,
    /// Two qubits, theta = pi/4, no error.
    Fig3a,
    /// Two qubits, theta = pi/6, 10% error on `I_s`.
    Fig3b,
    /// Two qubits, theta = pi/9, 10% error on `I_s`.
    Fig3c,
}

impl Preset {
    pub const ALL: [Preset; 5] = [
        Preset::Fig1a,
        Preset::Fig1b,
        Preset::Fig3a,
        Preset::Fig3b,
        Preset::Fig3c,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1a => "fig1a",
            Preset::Fig1b => "fig1b",
            Preset::Fig3a => "fig3a",
            Preset::Fig3b => "fig3b",
            Preset::Fig3c => "fig3c",
        }
    }

    pub fn config(self) -> ScenarioConfig {
        const LARGE_DB_ALPHA: f64 = 0.00091;
        const EXPERIMENT_ITERATIONS: usize = 14;
        let large_db = |phi: f64, varphi: f64| {
            let predicted = predicted_iterations(LARGE_DB_ALPHA, phi, varphi).expect("nondegenerate preset");
            ScenarioConfig {
                name: Some(self.name().to_string()),
                algorithm: AlgorithmChoice::Both,
                backend: Backend::TwoLevel,
                preparation: Preparation::Alpha(LARGE_DB_ALPHA),
                phi,
                varphi,
                iterations: (2.0 * predicted).ceil() as usize,
                output_format: OutputFormat::Csv,
            }
        };
        let two_qubit = |theta: f64, phi: f64| ScenarioConfig {
            name: Some(self.name().to_string()),
            algorithm: AlgorithmChoice::Both,
            backend: Backend::StateVector,
            preparation: Preparation::Theta(theta),
            phi,
            varphi: PI,
            iterations: EXPERIMENT_ITERATIONS,
            output_format: OutputFormat::Csv,
        };
        match self {
            Preset::Fig1a => large_db(PI, 0.9 * PI),
            Preset::Fig1b => large_db(0.9 * PI, 0.9 * PI),
            Preset::Fig3a => two_qubit(PI / 4.0, PI),
            Preset::Fig3b => two_qubit(PI / 6.0, 0.9 * PI),
            Preset::Fig3c => two_qubit(PI / 9.0, 0.9 * PI),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

/// Looks up a preset by name.
pub fn preset(name: &str) -> Result<ScenarioConfig> {
    Ok(name.parse::<Preset>()?.config())
}
