//! Batch pipeline: argument parsing, stage bookkeeping, and the subcommand
//! implementations.
//!
//! Every file-writing stage runs inside a [`Stage`] that tracks created
//! files and input digests. On success the stage writes a `manifest.json`
//! next to its outputs (command, parameters, seed, input digests, output
//! names, no timestamps); on failure it removes everything it created, so a
//! failed run leaves no partial outputs behind.

mod args;
mod commands;
mod svg;

use crate::{Error, Result};
use clap::Parser;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub use args::{Cli, Command};

/// Parse and run one invocation. Returns the process exit code: 0 success,
/// 1 usage, 2 data or io, 3 numeric.
pub fn run(argv: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Synth(a) => commands::synth(a),
        Command::BuildNet(a) => commands::build_net(a),
        Command::Embed(a) => commands::embed(a),
        Command::Metrics(a) => commands::metrics(a),
        Command::Analyze(a) => commands::analyze(a),
        Command::InfoDemo(a) => commands::info_demo(a),
        Command::Report(a) => commands::report(a),
    }
}

/// Environment variable consulted when --out is not given.
pub const OUT_ENV: &str = "DISKNET_OUT";

fn resolve_out(flag: &Option<PathBuf>) -> Result<PathBuf> {
    if let Some(p) = flag {
        return Ok(p.clone());
    }
    match std::env::var(OUT_ENV) {
        Ok(v) if !v.is_empty() => Ok(PathBuf::from(v)),
        _ => Err(Error::usage(format!(
            "no output directory: pass --out or set {OUT_ENV}"
        ))),
    }
}

#[derive(Serialize)]
struct Manifest {
    command: String,
    parameters: serde_json::Value,
    seed: Option<u64>,
    inputs: BTreeMap<String, String>,
    outputs: Vec<String>,
}

/// Tracks one stage's created files and consumed inputs.
struct Stage {
    out_dir: PathBuf,
    created: Vec<PathBuf>,
    inputs: BTreeMap<String, String>,
}

impl Stage {
    fn new(out_dir: PathBuf) -> Result<Self> {
        std::fs::create_dir_all(&out_dir)
            .map_err(|e| Error::io(out_dir.display().to_string(), e))?;
        Ok(Stage {
            out_dir,
            created: Vec::new(),
            inputs: BTreeMap::new(),
        })
    }

    /// Digest an input file into the manifest record.
    fn record_input(&mut self, path: &Path) -> Result<()> {
        let bytes =
            std::fs::read(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        let digest = Sha256::digest(&bytes);
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.inputs.insert(path.display().to_string(), hex);
        Ok(())
    }

    /// Register an output file name and return its full path. Registered
    /// files are deleted if the stage fails.
    fn create(&mut self, name: &str) -> PathBuf {
        let path = self.out_dir.join(name);
        self.created.push(path.clone());
        path
    }

    fn write_manifest(
        &mut self,
        command: &str,
        parameters: serde_json::Value,
        seed: Option<u64>,
    ) -> Result<()> {
        let mut outputs: Vec<String> = self
            .created
            .iter()
            .map(|p| {
                p.file_name()
                    .map(|n| n.to_string_lossy().into_owned())
                    .unwrap_or_default()
            })
            .collect();
        outputs.sort();
        let manifest = Manifest {
            command: command.to_string(),
            parameters,
            seed,
            inputs: std::mem::take(&mut self.inputs),
            outputs,
        };
        let text = serde_json::to_string_pretty(&manifest).expect("manifest serialization") + "\n";
        let path = self.create("manifest.json");
        std::fs::write(&path, text).map_err(|e| Error::io(path.display().to_string(), e))
    }

    fn remove_created(&self) {
        for path in &self.created {
            let _ = std::fs::remove_file(path);
        }
    }
}

/// Run `body` inside a tracked stage, writing the manifest on success and
/// removing all created files on failure.
fn run_stage<F>(out: &Option<PathBuf>, command: &str, body: F) -> Result<()>
where
    F: FnOnce(&mut Stage) -> Result<(serde_json::Value, Option<u64>)>,
{
    let out_dir = resolve_out(out)?;
    let mut stage = Stage::new(out_dir)?;
    let outcome = body(&mut stage)
        .and_then(|(parameters, seed)| stage.write_manifest(command, parameters, seed));
    if outcome.is_err() {
        stage.remove_created();
    }
    outcome
}
