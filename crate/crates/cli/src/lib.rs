// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! Argument handling for the `robust-search` binary.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use robust_search::experiments::{
    emit_output, preset, pulse_program, run_scenario, AlgorithmChoice, Backend, OutputFormat, Preparation,
    ScenarioConfig,
};
use robust_search::{Error, Result};

pub const EXIT_IO: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;
pub const EXIT_INVARIANT: u8 = 3;

/// Parses an angle in radians. Accepts plain numbers and multiples of `pi`:
/// `1.2`, `pi`, `-pi/2`, `0.9pi`, `3pi/4`, `0.5*pi`, `pi/9`.
pub fn parse_angle(text: &str) -> std::result::Result<f64, String> {
    let bad = || format!("invalid angle `{text}`");
    let s = text.trim().to_ascii_lowercase();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s.strip_prefix('+').unwrap_or(&s)),
    };
    let (numerator, denominator) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (body.trim(), None),
    };
    let value = match numerator.strip_suffix("pi") {
        Some(coef) => {
            let coef = coef.trim().trim_end_matches('*').trim();
            let c = if coef.is_empty() {
                1.0
            } else {
                coef.parse::<f64>().map_err(|_| bad())?
            };
            c * PI
        }
        None => numerator.parse::<f64>().map_err(|_| bad())?,
    };
    let value = match denominator {
        Some(d) => {
            let d: f64 = d.parse().map_err(|_| bad())?;
            if d == 0.0 {
                return Err(bad());
            }
            value / d
        }
        None => value,
    };
    if value.is_finite() {
        Ok(sign * value)
    } else {
        Err(bad())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "robust-search",
    version,
    about = "Standard and phase-error-robust amplitude amplification on two-level, state-vector and NMR pulse backends"
)]
pub struct Cli {
    /// Preset scenario: fig1a, fig1b, fig3a, fig3b, fig3c. Other flags override its fields.
    #[arg(long)]
    pub scenario: Option<String>,
    /// Preparation angle of `Ry(theta)⊗Ry(theta)|00>`, in radians.
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true, conflicts_with = "alpha")]
    pub theta: Option<f64>,
    /// Overlap `|<t|s>|`; two_level backend only.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Phase realized on the source rotation, in radians.
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub phi: Option<f64>,
    /// Phase realized on the target rotation, in radians.
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub varphi: Option<f64>,
    /// Number of iteration-operator applications.
    #[arg(long)]
    pub iterations: Option<usize>,
    /// original, modified or both.
    #[arg(long)]
    pub algorithm: Option<String>,
    /// two_level, state_vector or nmr_pulse.
    #[arg(long)]
    pub backend: Option<String>,
    /// csv or json.
    #[arg(long)]
    pub format: Option<String>,
    /// Output path, or `stdout`.
    #[arg(long, default_value = "stdout")]
    pub output: String,
    /// Print the compiled pulse program instead of running it.
    #[arg(long)]
    pub dump_sequence: bool,
}

impl Cli {
    /// Merges explicit flags over the preset, if any.
    pub fn config(&self) -> Result<ScenarioConfig> {
        let mut cfg = match &self.scenario {
            Some(name) => preset(name)?,
            None => {
                let preparation = match (self.theta, self.alpha) {
                    (Some(t), None) => Preparation::Theta(t),
                    (None, Some(a)) => Preparation::Alpha(a),
                    _ => {
                        return Err(Error::InvalidConfig(
                            "give --scenario, or one of --theta and --alpha".into(),
                        ))
                    }
                };
                let missing = |flag: &str| Error::InvalidConfig(format!("--{flag} is required without --scenario"));
                ScenarioConfig {
                    name: None,
                    algorithm: AlgorithmChoice::Both,
                    backend: match preparation {
                        Preparation::Theta(_) => Backend::StateVector,
                        Preparation::Alpha(_) => Backend::TwoLevel,
                    },
                    preparation,
                    phi: self.phi.ok_or_else(|| missing("phi"))?,
                    varphi: self.varphi.ok_or_else(|| missing("varphi"))?,
                    iterations: self.iterations.ok_or_else(|| missing("iterations"))?,
                    output_format: OutputFormat::Csv,
                }
            }
        };
        if let Some(t) = self.theta {
            cfg.preparation = Preparation::Theta(t);
        }
        if let Some(a) = self.alpha {
            cfg.preparation = Preparation::Alpha(a);
        }
        if let Some(p) = self.phi {
            cfg.phi = p;
        }
        if let Some(p) = self.varphi {
            cfg.varphi = p;
        }
        if let Some(n) = self.iterations {
            cfg.iterations = n;
        }
        if let Some(a) = &self.algorithm {
            cfg.algorithm = a.parse()?;
        }
        if let Some(b) = &self.backend {
            cfg.backend = b.parse()?;
        }
        if let Some(f) = &self.format {
            cfg.output_format = f.parse()?;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn write_to<W: Write>(cli: &Cli, cfg: &ScenarioConfig, out: &mut W) -> Result<()> {
    if cli.dump_sequence {
        write!(out, "{}", pulse_program(cfg)?)?;
    } else {
        emit_output(&run_scenario(cfg)?, cfg.output_format, out)?;
    }
    out.flush()?;
    Ok(())
}

/// Runs the command and returns its process exit code.
pub fn run(cli: &Cli) -> ExitCode {
    let result = cli.config().and_then(|cfg| {
        if cli.output == "stdout" {
            write_to(cli, &cfg, &mut BufWriter::new(io::stdout().lock()))
        } else {
            let file = File::create(&cli.output)?;
            write_to(cli, &cfg, &mut BufWriter::new(file))
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvariantViolation(_) => EXIT_INVARIANT,
        Error::Io(_) => EXIT_IO,
        e if e.is_configuration() => EXIT_CONFIG,
        _ => EXIT_INVARIANT,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_forms() {
        let cases = [
            ("0.9pi", 0.9 * PI),
            ("pi/9", PI / 9.0),
            ("-pi/2", -PI / 2.0),
            ("3pi/4", 3.0 * PI / 4.0),
            ("0.5*pi", 0.5 * PI),
            ("pi", PI),
            ("1.25", 1.25),
            ("PI/4", PI / 4.0),
            ("2 * pi / 3", 2.0 * PI / 3.0),
        ];
        for (text, want) in cases {
            assert!((parse_angle(text).unwrap() - want).abs() < 1e-15, "{text}");
        }
        for text in ["", "pi/0", "xpi", "pi*2", "nan", "1/", "--pi"] {
            assert!(parse_angle(text).is_err(), "{text}");
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::InvariantViolation("x".into())), EXIT_INVARIANT);
        assert_eq!(exit_code(&Error::UnknownPreset("x".into())), EXIT_CONFIG);
        assert_eq!(exit_code(&Error::Io(io::Error::other("x"))), EXIT_IO);
    }

    #[test]
    fn flags_override_presets() {
        let cli = Cli::parse_from([
            "robust-search",
            "--scenario",
            "fig3c",
            "--iterations",
            "3",
            "--backend",
            "nmr_pulse",
        ]);
        let cfg = cli.config().unwrap();
        assert_eq!(cfg.iterations, 3);
        assert_eq!(cfg.backend, Backend::NmrPulse);
        assert_eq!(cfg.preparation, Preparation::Theta(PI / 9.0));
    }

    #[test]
    fn explicit_configuration() {
        let cli = Cli::parse_from([
            "robust-search",
            "--alpha",
            "0.01",
            "--phi",
            "pi",
            "--varphi",
            "0.9pi",
            "--iterations",
            "5",
        ]);
        let cfg = cli.config().unwrap();
        assert_eq!(cfg.backend, Backend::TwoLevel);
        let cli = Cli::parse_from(["robust-search", "--theta", "pi/4", "--phi", "pi"]);
        assert!(matches!(cli.config(), Err(Error::InvalidConfig(_))));
    }
}
