mod claims;
mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Family {
    Friendship,
    CocktailParty,
    Cycle,
    Path,
    Complete,
    Star,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, clap::Args)]
pub struct RunConfig {
    /// Largest vertex count any exhaustive search may enumerate.
    #[arg(long, global = true, default_value_t = 9, value_parser = clap::value_parser!(u8).range(1..=11))]
    pub max_vertices: u8,

    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory holding a replacement `figures.g6` catalog.
    #[arg(long, global = true, env = "WINDMILL_FIXTURES")]
    pub fixtures: Option<PathBuf>,

    /// Tolerance for comparing computed eigenvalues with closed forms.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tolerance_eig: f64,

    /// Tolerance for the five-digit fixture eigenvalues.
    #[arg(long, global = true, default_value_t = 5e-6)]
    pub tolerance_fixture: f64,

    /// Comma-separated claim ids to run (default: all).
    #[arg(long, global = true, value_delimiter = ',')]
    pub claims: Vec<String>,

    /// Add wall-clock timings to the output.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Parser)]
#[command(name = "windmill", version, about = "Spectral tools for small graphs")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the graph6 encoding of a named graph.
    Gen { family: Family, param: usize },
    /// Characteristic polynomial, grouped spectrum and main angles of each
    /// input graph (graph6 lines from files or standard input).
    Spectrum { inputs: Vec<PathBuf> },
    /// Exhaustive search for graphs cospectral with a graph6 target
    /// (`-` reads the first graph from standard input).
    Search { target: String },
    /// Replay the claim ledger.
    Verify,
    /// List the bundled named configurations.
    Catalog,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen { family, param } => commands::gen(family, param),
        Command::Spectrum { inputs } => commands::spectrum(&cli.config, &inputs),
        Command::Search { target } => commands::search(&cli.config, &target),
        Command::Verify => commands::verify(&cli.config),
        Command::Catalog => commands::catalog(&cli.config),
    };
    match result {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(output.text.as_bytes()).and_then(|_| stdout.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
                _ => output.code,
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
