// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! Shared inputs for the benchmarks.

use std::f64::consts::PI;

use robust_search::experiments::{AlgorithmChoice, Backend, OutputFormat, Preparation, ScenarioConfig};

/// Two-qubit scenario with `theta = pi/9`, `phi = 0.9pi`, `varphi = pi`.
pub fn two_qubit_scenario(backend: Backend, iterations: usize) -> ScenarioConfig {
    ScenarioConfig {
        name: None,
        algorithm: AlgorithmChoice::Modified,
        backend,
        preparation: Preparation::Theta(PI / 9.0),
        phi: 0.9 * PI,
        varphi: PI,
        iterations,
        output_format: OutputFormat::Csv,
    }
}
