//! `andbip`: generate Andrásfai graphs, emit and verify bipartification
//! certificates, run the exact solver and tabulate surveys.
//!
//! Exit codes: 0 success/confirmed, 1 verification failure, 2 conjecture
//! refuted, 3 skipped (instance too large), 64 usage error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Failure;

/// Environment variable overriding the solver's vertex cap.
pub const CAP_ENV: &str = "ANDBIP_SOLVER_CAP";

#[derive(Parser, Debug)]
#[command(name = "andbip", version, about = "Andrásfai graph bipartification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write And_k in DIMACS edge format.
    Gen(GenArgs),
    /// Emit the certificate for F_k: U1, U2, the A/B partition and one witness per edge.
    Construct(ConstructArgs),
    /// Certify the construction for one k or a range of k.
    Verify(VerifyArgs),
    /// Solve minimum edge bipartization exactly for And_k or a DIMACS graph.
    Solve(SolveArgs),
    /// Tabulate sizes, bounds and (optionally) exact optima as CSV.
    Survey(SurveyArgs),
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(short, long)]
    pub k: usize,
    /// Output path; stdout when omitted.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Edgelist,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(short, long)]
    pub k: usize,
    #[arg(short, long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(short, long, conflicts_with = "all", required_unless_present = "all")]
    pub k: Option<usize>,
    /// Verify every k in 2..=ALL.
    #[arg(long, value_name = "ALL")]
    pub all: Option<usize>,
    /// Require the shortest odd cycle through each restored edge to be a 5-cycle.
    #[arg(long)]
    pub strong: bool,
    /// Check the alternative bipartification instead of F_k.
    #[arg(long)]
    pub alternative: bool,
    /// Remove an edge ("u-v") from F_k before checking minimality.
    #[arg(long, value_name = "U-V")]
    pub drop: Vec<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(short, long, conflicts_with = "dimacs", required_unless_present = "dimacs")]
    pub k: Option<usize>,
    #[arg(long, value_name = "PATH")]
    pub dimacs: Option<PathBuf>,
    /// Also list up to N distinct minimum deletion sets.
    #[arg(long, value_name = "N")]
    pub enumerate: Option<usize>,
    /// Node budget; lifts the vertex cap up to 64.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Vertex cap (default 32, or the ANDBIP_SOLVER_CAP environment variable).
    #[arg(long)]
    pub cap: Option<usize>,
    /// Run the search on a single thread.
    #[arg(long)]
    pub sequential: bool,
    #[arg(long)]
    pub json: bool,
    /// Include wall-clock time in the output.
    #[arg(long)]
    pub with_metadata: bool,
}

#[derive(Args, Debug)]
pub struct SurveyArgs {
    #[arg(long)]
    pub kmin: usize,
    #[arg(long)]
    pub kmax: usize,
    /// Fill the solver columns for k <= S.
    #[arg(long, value_name = "S")]
    pub solve_upto: Option<usize>,
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { commands::EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen(a) => commands::gen(&a),
        Command::Construct(a) => commands::construct(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Solve(a) => commands::solve(&a),
        Command::Survey(a) => commands::survey(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("Usage: andbip <gen|construct|verify|solve|survey> [OPTIONS] (see --help)");
            ExitCode::from(commands::EXIT_USAGE)
        }
        Err(Failure::Skipped(msg)) => {
            eprintln!("skipped: {msg}");
            ExitCode::from(commands::EXIT_SKIPPED)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::EXIT_FAILED)
        }
    }
}
