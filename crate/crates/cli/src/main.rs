//! `mvgoppa`: build multivariate Goppa, tensor-GRS and augmented Cartesian
//! codes, inspect their hulls and quantum parameters, and search for
//! LCD / self-orthogonal / self-dual families.
//!
//! Exit codes: 0 success, 2 malformed input, 3 mathematical precondition
//! violated, 4 a theorem-level cross check failed.

mod commands;
mod error;
mod reproduce;
mod spec;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{BuildArgs, ExportArgs, SearchArgs};
use error::CliResult;
use reproduce::ReproduceArgs;
use spec::CodeInput;

#[derive(Parser, Debug)]
#[command(name = "mvgoppa", version, about = "Multivariate Goppa codes, hulls and EAQECCs")]
struct Cli {
    /// Worker threads for distance and family searches.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code and write it as JSON.
    Build(BuildArgs),
    /// Print n, k and the minimum distance.
    Params(CodeInput),
    /// Hull dimension, and with --f the dual-partner certificate and hull formula.
    Hull(CodeInput),
    /// Entanglement-assisted quantum code parameters.
    Eaqecc(CodeInput),
    /// LCD, self-orthogonal, self-dual or none.
    Classify(CodeInput),
    /// Search for two-coordinate families; witnesses as JSON lines.
    Search(SearchArgs),
    /// Rebuild a worked example and check its facts.
    Reproduce(ReproduceArgs),
    /// Write the generator or parity-check matrix as JSON.
    Export(ExportArgs),
}

/// Rewrites `--S<j> LIST` and `--S<j>=LIST` as `--set <j>:LIST`, so that any
/// number of point sets can be given.
fn normalize_args(args: impl IntoIterator<Item = String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut args = args.into_iter();
    while let Some(a) = args.next() {
        let Some(rest) = a.strip_prefix("--S") else {
            out.push(a);
            continue;
        };
        let (index, value) = match rest.split_once('=') {
            Some((j, v)) => (j, Some(v.to_string())),
            None => (rest, None),
        };
        if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
            out.push(a);
            continue;
        }
        let value = value.or_else(|| args.next()).unwrap_or_default();
        out.push("--set".into());
        out.push(format!("{index}:{value}"));
    }
    out
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(jobs) = cli.jobs {
        // fails only if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match &cli.command {
        Command::Build(a) => commands::build(a),
        Command::Params(a) => commands::params(a),
        Command::Hull(a) => commands::hull(a),
        Command::Eaqecc(a) => commands::eaqecc(a),
        Command::Classify(a) => commands::classify_cmd(a),
        Command::Search(a) => commands::search(a),
        Command::Reproduce(a) => reproduce::reproduce(a),
        Command::Export(a) => commands::export(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(normalize_args(std::env::args()));
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norm(args: &[&str]) -> Vec<String> {
        normalize_args(args.iter().map(|s| s.to_string()))
    }

    #[test]
    fn point_set_flags_are_rewritten() {
        assert_eq!(norm(&["x", "--S1", "0,1", "--S12=a"]), ["x", "--set", "1:0,1", "--set", "12:a"]);
        assert_eq!(norm(&["--Sx", "--S"]), ["--Sx", "--S"]);
    }

    #[test]
    fn arguments_parse() {
        let cli = Cli::try_parse_from(norm(&["mvgoppa", "params", "--field", "5", "--S1", "0,1,2", "--g", "1,1"])).unwrap();
        let Command::Params(input) = cli.command else { panic!("wrong subcommand") };
        assert_eq!(input.spec.sets, ["1:0,1,2"]);
        assert_eq!(input.spec.g, ["1,1"]);
    }
}
