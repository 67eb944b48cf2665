// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use std::process::ExitCode;

use clap::Parser;

use robust_search_cli::{run, Cli};

fn main() -> ExitCode {
    run(&Cli::parse())
}
