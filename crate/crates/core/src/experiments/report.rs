// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::{Deserialize, Serialize};

use super::runner::{argmax, RunRecord};
use crate::amplify::{phase_matching_satisfied, Algorithm, DEFAULT_PHASE_MATCHING_CONSTANT};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseMatchingVerdict {
    Satisfied,
    Violated,
}

impl fmt::Display for PhaseMatchingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PhaseMatchingVerdict::Satisfied => "phase matching satisfied",
            PhaseMatchingVerdict::Violated => "phase matching violated",
        })
    }
}

/// Per-algorithm summary inside a [`Comparison`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeakSummary {
    pub algorithm: Algorithm,
    pub peak_probability: f64,
    pub argmax_iteration: usize,
    /// Oracle calls at the peak found within the oracle-call range both
    /// records cover.
    pub argmax_oracle_calls_common: usize,
}

/// Side-by-side summary of two runs of the same scenario.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub first: PeakSummary,
    pub second: PeakSummary,
    /// `p_target(second) - p_target(first)` per iteration.
    pub deltas: Vec<f64>,
    pub verdict: PhaseMatchingVerdict,
}

impl Comparison {
    pub fn max_abs_delta(&self) -> f64 {
        self.deltas.iter().fold(0.0, |m, d| m.max(d.abs()))
    }
}

fn summarize(record: &RunRecord, call_limit: usize) -> PeakSummary {
    let window = record.rows.iter().take_while(|r| r.oracle_calls <= call_limit);
    let (idx, _) = argmax(window.map(|r| r.p_target));
    PeakSummary {
        algorithm: record.algorithm,
        peak_probability: record.peak_probability,
        argmax_iteration: record.argmax_iteration,
        argmax_oracle_calls_common: record.rows[idx].oracle_calls,
    }
}

/// Compares two records with equal row counts. The verdict tests
/// `|phi - varphi| <= alpha` on the first record's parameters.
pub fn compare_report(a: &RunRecord, b: &RunRecord) -> Result<Comparison> {
    if a.rows.len() != b.rows.len() {
        return Err(Error::LengthMismatch {
            left: a.rows.len(),
            right: b.rows.len(),
        });
    }
    if a.rows.is_empty() {
        return Err(Error::InvalidConfig("cannot compare empty records".into()));
    }
    let last_call = |r: &RunRecord| r.rows.last().map_or(0, |row| row.oracle_calls);
    let call_limit = last_call(a).min(last_call(b));
    let deltas = a
        .rows
        .iter()
        .zip(&b.rows)
        .map(|(x, y)| y.p_target - x.p_target)
        .collect();
    let verdict = if phase_matching_satisfied(a.config.phi, a.config.varphi, a.alpha, DEFAULT_PHASE_MATCHING_CONSTANT) {
        PhaseMatchingVerdict::Satisfied
    } else {
        PhaseMatchingVerdict::Violated
    };
    Ok(Comparison {
        first: summarize(a, call_limit),
        second: summarize(b, call_limit),
        deltas,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::config::preset;
    use crate::experiments::runner::{run_scenario, RunOutput};

    fn pair(name: &str) -> (RunRecord, RunRecord) {
        match run_scenario(&preset(name).unwrap()).unwrap() {
            RunOutput::Pair { original, modified } => (original, modified),
            RunOutput::Single(_) => panic!("presets run both algorithms"),
        }
    }

    #[test]
    fn identical_records_have_zero_deltas() {
        let (a, _) = pair("fig3b");
        let c = compare_report(&a, &a).unwrap();
        assert!(c.deltas.iter().all(|&d| d == 0.0));
        assert_eq!(c.first, c.second);
    }

    #[test]
    fn fig3a_peaks_line_up_in_oracle_calls() {
        let (a, b) = pair("fig3a");
        let c = compare_report(&a, &b).unwrap();
        let diff = c
            .first
            .argmax_oracle_calls_common
            .abs_diff(c.second.argmax_oracle_calls_common);
        assert!(diff <= 1, "{c:?}");
        assert_eq!(c.verdict, PhaseMatchingVerdict::Satisfied);
    }

    #[test]
    fn fig1a_violates_phase_matching() {
        let mut cfg = preset("fig1a").unwrap();
        cfg.iterations = 4;
        let RunOutput::Pair { original, modified } = run_scenario(&cfg).unwrap() else {
            panic!("expected a pair");
        };
        let c = compare_report(&original, &modified).unwrap();
        assert_eq!(c.verdict.to_string(), "phase matching violated");
    }

    #[test]
    fn mismatched_lengths_are_rejected() {
        let (a, mut b) = pair("fig3c");
        b.rows.pop();
        assert!(matches!(
            compare_report(&a, &b),
            Err(Error::LengthMismatch { left: 15, right: 14 })
        ));
    }
}
