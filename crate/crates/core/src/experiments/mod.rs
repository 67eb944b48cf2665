// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! Scenario presets, the configuration-driven runner over the three
//! backends, comparison reports and CSV/JSON emission.

mod config;
mod emit;
mod program;
mod report;
mod runner;

pub use config::{preset, AlgorithmChoice, Backend, OutputFormat, Preparation, Preset, ScenarioConfig, TARGET_INDEX};
pub use emit::{emit, emit_output, record_from_json, write_csv, write_json, CSV_HEADER};
pub use program::{pulse_program, PulseProgram};
pub use report::{compare_report, Comparison, PeakSummary, PhaseMatchingVerdict};
pub use runner::{run_algorithm, run_scenario, Row, RunOutput, RunRecord, POPULATION_SUM_TOLERANCE};
