// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use std::fmt;

use super::config::ScenarioConfig;
use crate::amplify::Algorithm;
use crate::error::Result;
use crate::nmr::{
    compile_i00, compile_i00_inverse, compile_i11, compile_selective, compile_selective_inverse, theta_pulse, Marked,
    PulseAxis, PulseElement, PulseSequence,
};

/// Named blocks of the pulse program behind a scenario.
#[derive(Clone, Debug, PartialEq)]
pub struct PulseProgram {
    pub sections: Vec<(String, PulseSequence)>,
}

impl PulseProgram {
    pub fn section(&self, name: &str) -> Option<&PulseSequence> {
        self.sections.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

impl fmt::Display for PulseProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, seq) in &self.sections {
            writeln!(f, "# {name}")?;
            write!(f, "{seq}")?;
        }
        Ok(())
    }
}

/// Compiles the blocks a scenario runs. Preparation blocks appear only when
/// the scenario defines a rotation angle; inverse blocks only when the
/// modified algorithm is requested.
pub fn pulse_program(cfg: &ScenarioConfig) -> Result<PulseProgram> {
    cfg.validate()?;
    let modified = cfg.algorithm.algorithms().contains(&Algorithm::Modified);
    let mut sections = Vec::new();
    if let Some(theta) = cfg.theta() {
        sections.push(("prepare".to_string(), theta_pulse(theta, PulseAxis::Y)?));
    }
    sections.push(("I00(phi)".to_string(), compile_i00(cfg.phi)?));
    if modified {
        sections.push(("I00(-phi)".to_string(), compile_i00_inverse(cfg.phi)?));
    }
    if cfg.varphi == PI {
        sections.push(("I11".to_string(), compile_i11()));
    } else {
        sections.push(("I11(varphi)".to_string(), compile_selective(Marked::Ones, cfg.varphi)?));
        if modified {
            sections.push((
                "I11(-varphi)".to_string(),
                compile_selective_inverse(Marked::Ones, cfg.varphi)?,
            ));
        }
    }
    if let Some(theta) = cfg.theta() {
        sections.push(("unprepare".to_string(), theta_pulse(theta, PulseAxis::NegY)?));
    }
    sections.push((
        "readout".to_string(),
        PulseSequence::from_elements(vec![PulseElement::Crusher]),
    ));
    Ok(PulseProgram { sections })
}
