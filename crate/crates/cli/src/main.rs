// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `cocycle`: planarity checks, cocycle listings, grounding searches and
//! nonplanarity certificates from the command line.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use cocycle_planarity::corpus::CorpusSpec;
use cocycle_planarity::criterion::VariantFilter;
use cocycle_planarity::witness::DEFAULT_KURATOWSKI_VERTEX_LIMIT;
use serde_json::json;

use commands::{CliError, Outcome, EXIT_ERROR};

#[derive(Parser)]
#[command(name = "cocycle", version, about = "Planarity testing through grounded cocycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CheckArgs {
    /// Edge-list file.
    file: PathBuf,
    /// Which big cocycles must be grounded.
    #[arg(long, default_value = "all")]
    variant: VariantFilter,
    /// Also run the rotation-system oracle; disagreement is an error.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide planarity and print witnesses or an ungrounded cocycle.
    Check(CheckArgs),
    /// Same as `check --oracle`.
    Compare(CheckArgs),
    /// List the cocycles of a connected graph.
    Cocycles {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        min_size: usize,
        #[arg(long)]
        json: bool,
    },
    /// Search for a grounding order of the cocycle cut out by a side.
    Ground {
        file: PathBuf,
        /// Side-A vertex labels, separated by commas or spaces.
        #[arg(long)]
        side_a: String,
        /// List the pairings that pruned the search.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build and verify an ungrounded big cocycle of a nonplanar graph.
    Certify {
        file: PathBuf,
        /// Vertex ceiling for the subdivision search.
        #[arg(long, default_value_t = DEFAULT_KURATOWSKI_VERTEX_LIMIT)]
        max_vertices: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare the criterion with the oracle over generated graphs.
    Corpus {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Sample this many random graphs instead of enumerating all.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "all")]
        variant: VariantFilter,
        #[arg(long)]
        json: bool,
    },
}

fn run(command: Command) -> Result<(&'static str, bool, Outcome), CliError> {
    Ok(match command {
        Command::Check(a) => {
            let g = commands::load_graph(&a.file)?;
            ("check", a.json, commands::cmd_check(&g, a.variant, a.oracle)?)
        }
        Command::Compare(a) => {
            let g = commands::load_graph(&a.file)?;
            ("compare", a.json, commands::cmd_check(&g, a.variant, true)?)
        }
        Command::Cocycles { file, min_size, json } => {
            let g = commands::load_graph(&file)?;
            ("cocycles", json, commands::cmd_cocycles(&g, min_size)?)
        }
        Command::Ground { file, side_a, explain, json } => {
            let g = commands::load_graph(&file)?;
            ("ground", json, commands::cmd_ground(&g, &side_a, explain)?)
        }
        Command::Certify { file, max_vertices, json } => {
            let g = commands::load_graph(&file)?;
            ("certify", json, commands::cmd_certify(&g, max_vertices)?)
        }
        Command::Corpus { max_n, min_n, sample, seed, variant, json } => {
            let spec = match sample {
                Some(size) => CorpusSpec::random(min_n, max_n, size, seed),
                None => CorpusSpec { min_n, ..CorpusSpec::exhaustive(max_n) },
            };
            ("corpus", json, commands::cmd_corpus(spec, variant)?)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli.command) {
        Ok((name, json, outcome)) => {
            if json {
                let envelope = json!({
                    "command": name,
                    "input_digest": outcome.digest,
                    "result": outcome.body,
                    "timing": { "wall_ms": started.elapsed().as_secs_f64() * 1000.0 },
                });
                println!("{}", serde_json::to_string_pretty(&envelope).expect("envelope serializes"));
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
