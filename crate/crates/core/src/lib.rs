// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! Amplitude amplification with imperfect selective phase rotations.
//!
//! The standard iteration `G = I_s^phi I_t^varphi` and the robust iteration
//! `T = I_s^-phi I_t^-varphi G` are simulated three ways: an exact
//! two-level reduction, dense state vectors, and a two-spin NMR register
//! driven by compiled pulse programs.
//!
//! - [`qcore`]: states, unitaries, density matrices and gates.
//! - [`amplify`]: search operators, schedules and the two-level model.
//! - [`nmr`]: pulse programs, the pulse compiler and density-matrix runs.
//! - [`experiments`]: presets, runner, reports and emitters.

pub mod amplify;
pub mod error;
pub mod experiments;
pub mod nmr;
pub mod qcore;

pub use amplify::{
    grover_operator, predicted_iterations, robust_operator, search_operator, selective_phase, Algorithm, SearchProblem,
    TwoLevelModel,
};
pub use error::{Error, Result};
pub use experiments::{
    compare_report, emit, emit_output, preset, run_scenario, Backend, OutputFormat, RunOutput, RunRecord,
    ScenarioConfig,
};
pub use nmr::{compile_i00, compile_i00_inverse, compile_i11, PulseSequence};
pub use qcore::{DensityMatrix, StateVector, UnitaryOperator};
