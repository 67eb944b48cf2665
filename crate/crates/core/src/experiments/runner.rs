// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use super::config::{Backend, ScenarioConfig, TARGET_INDEX};
use crate::amplify::{search_operator, Algorithm, SearchProblem, TwoLevelModel};
use crate::error::{Error, Result};
use crate::nmr::{crusher, measure_populations, pps_00, run_sequence, IterationBlocks};
use crate::qcore::{apply, StateVector};

/// Tolerance on each row's population sum.
pub const POPULATION_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    /// Applications of the iteration operator.
    pub iteration: usize,
    /// Applications of the target rotation, i.e. G-equivalents.
    pub oracle_calls: usize,
    /// `(p00, p01, p10, p11)`; absent when only the overlap is known.
    pub populations: Option<[f64; 4]>,
    pub p_target: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub config: ScenarioConfig,
    pub algorithm: Algorithm,
    pub alpha: f64,
    pub peak_probability: f64,
    pub argmax_iteration: usize,
    pub rows: Vec<Row>,
}

impl RunRecord {
    fn new(config: &ScenarioConfig, algorithm: Algorithm, alpha: f64, rows: Vec<Row>) -> Result<Self> {
        for row in &rows {
            check_row(row)?;
        }
        let (argmax_iteration, peak_probability) = argmax(rows.iter().map(|r| r.p_target));
        Ok(Self {
            config: config.clone(),
            algorithm,
            alpha,
            peak_probability,
            argmax_iteration,
            rows,
        })
    }

    pub fn target_curve(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.p_target).collect()
    }

    pub fn argmax_oracle_calls(&self) -> usize {
        self.rows[self.argmax_iteration].oracle_calls
    }
}

/// Index and value of the first maximum.
pub(crate) fn argmax(values: impl Iterator<Item = f64>) -> (usize, f64) {
    values.enumerate().fold(
        (0, f64::NEG_INFINITY),
        |best, (i, v)| if v > best.1 { (i, v) } else { best },
    )
}

fn check_row(row: &Row) -> Result<()> {
    let p = row.p_target;
    if !(-1e-12..=1.0 + 1e-12).contains(&p) {
        return Err(Error::InvariantViolation(format!(
            "target probability {p} at iteration {} outside [0, 1]",
            row.iteration
        )));
    }
    if let Some(pops) = row.populations {
        let sum: f64 = pops.iter().sum();
        if !(..=POPULATION_SUM_TOLERANCE).contains(&(sum - 1.0).abs()) {
            return Err(Error::InvariantViolation(format!(
                "populations sum to {sum} at iteration {}",
                row.iteration
            )));
        }
        if !(..=POPULATION_SUM_TOLERANCE).contains(&(pops[TARGET_INDEX] - p).abs()) {
            return Err(Error::InvariantViolation(format!(
                "p_target {p} disagrees with p11 {}",
                pops[TARGET_INDEX]
            )));
        }
    }
    Ok(())
}

fn state_row(iteration: usize, algorithm: Algorithm, state: &StateVector) -> Row {
    let probs = state.probabilities();
    Row {
        iteration,
        oracle_calls: iteration * algorithm.oracle_calls_per_step(),
        populations: Some([probs[0], probs[1], probs[2], probs[3]]),
        p_target: probs[TARGET_INDEX],
    }
}

/// Both algorithms of a `both` run, or the single requested one.
#[derive(Clone, Debug, PartialEq)]
pub enum RunOutput {
    Single(RunRecord),
    Pair { original: RunRecord, modified: RunRecord },
}

impl RunOutput {
    pub fn records(&self) -> Vec<&RunRecord> {
        match self {
            RunOutput::Single(r) => vec![r],
            RunOutput::Pair { original, modified } => vec![original, modified],
        }
    }
}

/// Runs every algorithm requested by `cfg`, each from a freshly prepared
/// state.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<RunOutput> {
    cfg.validate()?;
    let mut records = cfg
        .algorithm
        .algorithms()
        .iter()
        .map(|&alg| run_algorithm(cfg, alg))
        .collect::<Result<Vec<_>>>()?;
    Ok(if records.len() == 2 {
        let modified = records.pop().expect("two records");
        let original = records.pop().expect("two records");
        RunOutput::Pair { original, modified }
    } else {
        RunOutput::Single(records.pop().expect("one record"))
    })
}

/// Runs a single algorithm on the backend selected by `cfg`.
pub fn run_algorithm(cfg: &ScenarioConfig, algorithm: Algorithm) -> Result<RunRecord> {
    cfg.validate()?;
    let alpha = cfg.alpha()?;
    let rows = match cfg.backend {
        Backend::TwoLevel => two_level_rows(cfg, algorithm, alpha)?,
        Backend::StateVector => state_vector_rows(cfg, algorithm)?,
        Backend::NmrPulse => nmr_rows(cfg, algorithm)?,
    };
    RunRecord::new(cfg, algorithm, alpha, rows)
}

fn two_level_rows(cfg: &ScenarioConfig, algorithm: Algorithm, alpha: f64) -> Result<Vec<Row>> {
    let source = cfg.source_state().transpose()?;
    let mut model = TwoLevelModel::new(alpha, cfg.phi, cfg.varphi)?;
    let op = model.operator(algorithm);
    let mut rows = Vec::with_capacity(cfg.iterations + 1);
    for q in 0..=cfg.iterations {
        if q > 0 {
            model.apply(&op);
        }
        let row = match &source {
            Some(s) => state_row(q, algorithm, &model.embed(s, TARGET_INDEX)?),
            None => Row {
                iteration: q,
                oracle_calls: q * algorithm.oracle_calls_per_step(),
                populations: None,
                p_target: model.target_probability(),
            },
        };
        rows.push(row);
    }
    Ok(rows)
}

fn state_vector_rows(cfg: &ScenarioConfig, algorithm: Algorithm) -> Result<Vec<Row>> {
    let source = cfg
        .source_state()
        .ok_or_else(|| Error::InvalidConfig("state_vector backend needs theta".into()))??;
    let problem = SearchProblem::new(source, TARGET_INDEX, cfg.phi, cfg.varphi)?;
    let op = search_operator(&problem, algorithm);
    let mut state = problem.source().clone();
    let mut rows = Vec::with_capacity(cfg.iterations + 1);
    rows.push(state_row(0, algorithm, &state));
    for q in 1..=cfg.iterations {
        state = apply(&op, &state)?;
        rows.push(state_row(q, algorithm, &state));
    }
    Ok(rows)
}

fn nmr_rows(cfg: &ScenarioConfig, algorithm: Algorithm) -> Result<Vec<Row>> {
    let theta = cfg
        .theta()
        .ok_or_else(|| Error::InvalidConfig("nmr_pulse backend needs theta".into()))?;
    let blocks = IterationBlocks::new(theta, cfg.phi, cfg.varphi)?;
    let iteration = match algorithm {
        Algorithm::Original => blocks.grover_iteration(),
        Algorithm::Modified => blocks.robust_iteration(),
    };
    let readout = |q: usize, rho: &crate::qcore::DensityMatrix| -> Result<Row> {
        let pops = measure_populations(&crusher(rho))?;
        Ok(Row {
            iteration: q,
            oracle_calls: q * algorithm.oracle_calls_per_step(),
            populations: Some(pops),
            p_target: pops[TARGET_INDEX],
        })
    };
    let mut rho = run_sequence(&blocks.prepare, &pps_00())?;
    let mut rows = Vec::with_capacity(cfg.iterations + 1);
    rows.push(readout(0, &rho)?);
    for q in 1..=cfg.iterations {
        rho = run_sequence(&iteration, &rho)?;
        rows.push(readout(q, &rho)?);
    }
    rho.validate()
        .map_err(|e| Error::InvariantViolation(format!("final density matrix: {e}")))?;
    Ok(rows)
}
