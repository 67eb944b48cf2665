// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! CSV and JSON writers for run records.
//!
//! CSV values carry nine decimal digits. JSON keeps full precision and reads
//! back into an equal record.

use std::io::Write;

use serde_json::json;

use super::config::OutputFormat;
use super::report::compare_report;
use super::runner::{RunOutput, RunRecord};
use crate::error::Result;

pub const CSV_HEADER: &str = "iteration,oracle_calls,p00,p01,p10,p11,p_target";

fn fixed9(x: f64) -> String {
    let s = format!("{x:.9}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// Writes the header and one line per row.
pub fn write_csv<W: Write>(record: &RunRecord, out: &mut W) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in &record.rows {
        let pops = match row.populations {
            Some(p) => p.map(fixed9).join(","),
            None => ",,,".to_string(),
        };
        writeln!(
            out,
            "{},{},{pops},{}",
            row.iteration,
            row.oracle_calls,
            fixed9(row.p_target)
        )?;
    }
    Ok(())
}

pub fn write_json<W: Write>(record: &RunRecord, out: &mut W) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, record)?;
    writeln!(out)?;
    Ok(())
}

/// Writes a single record in `format`.
pub fn emit<W: Write>(record: &RunRecord, format: OutputFormat, out: &mut W) -> Result<()> {
    match format {
        OutputFormat::Csv => write_csv(record, out),
        OutputFormat::Json => write_json(record, out),
    }
}

/// Writes every record of `output`. CSV pairs are written as two tables,
/// each preceded by a `# <algorithm>` line; JSON pairs become one object
/// holding both records and their comparison.
pub fn emit_output<W: Write>(output: &RunOutput, format: OutputFormat, out: &mut W) -> Result<()> {
    match (output, format) {
        (RunOutput::Single(record), _) => emit(record, format, out),
        (RunOutput::Pair { original, modified }, OutputFormat::Csv) => {
            for record in [original, modified] {
                writeln!(out, "# {}", record.algorithm)?;
                write_csv(record, out)?;
            }
            Ok(())
        }
        (RunOutput::Pair { original, modified }, OutputFormat::Json) => {
            let value = json!({
                "original": original,
                "modified": modified,
                "comparison": compare_report(original, modified)?,
            });
            serde_json::to_writer_pretty(&mut *out, &value)?;
            writeln!(out)?;
            Ok(())
        }
    }
}

pub fn record_from_json(text: &str) -> Result<RunRecord> {
    Ok(serde_json::from_str(text)?)
}
