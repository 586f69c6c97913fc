//! `pinnacle`: command-line front end for pinnacle-set enumeration.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "pinnacle",
    version,
    about = "Exact enumeration of permutations by pinnacle set"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count permutations of [n] with pinnacle set P.
    Count(CountArgs),
    /// Evaluate the weighted sum q_n(P) = sum over Q ⊆ P of 2^|Q| |S_n(Q)|.
    Q(QArgs),
    /// Count, list or test admissible pinnacle orderings of P.
    Orders(OrdersArgs),
    /// Stream every permutation of [n] with pinnacle set P.
    Generate(GenerateArgs),
    /// Number of distinct ordering counts over admissible sets of size k.
    Alpha(AlphaArgs),
    /// Cross-check every fast routine against brute force.
    Verify(VerifyArgs),
    /// Time the counting routine on fixed presets.
    Bench(BenchArgs),
}

/// Instance selection shared by several commands.
#[derive(Args, Debug)]
struct Instance {
    /// Size of the permutations.
    #[arg(short = 'n')]
    n: usize,
    /// Pinnacle set as a comma list, in any order; "" or omitted for the empty set.
    #[arg(short = 'P', value_parser = parse_pinnacles, default_value = "")]
    pinnacles: Pinnacles,
}

#[derive(Clone, Debug, Default)]
struct Pinnacles(Vec<usize>);

fn parse_pinnacles(s: &str) -> Result<Pinnacles, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Pinnacles::default());
    }
    s.split(',')
        .map(|part| {
            let part = part.trim();
            match part.parse::<usize>() {
                Ok(0) => Err("pinnacles must be positive".to_string()),
                Ok(v) => Ok(v),
                Err(_) => Err(format!("not a positive integer: {part:?}")),
            }
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Pinnacles)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Rec,
    MotzkinSum,
    DyckSum,
    Brute,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, value_enum, default_value_t = CountMethod::Rec)]
    method: CountMethod,
    /// Print a JSON object instead of a bare number.
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum QMethod {
    Rec,
    MeanderDp,
    MeanderEnum,
    Subset,
}

#[derive(Args, Debug)]
struct QArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, value_enum, default_value_t = QMethod::MeanderDp)]
    method: QMethod,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct OrdersArgs {
    /// Pinnacle set as a comma list.
    #[arg(short = 'P', value_parser = parse_pinnacles)]
    pinnacles: Pinnacles,
    /// Print every admissible ordering, one per line.
    #[arg(long, conflicts_with = "check")]
    list: bool,
    /// Print whether this ordering (one-line notation) is admissible.
    #[arg(long, value_name = "PERM")]
    check: Option<String>,
    #[arg(long, conflicts_with_all = ["list", "check"])]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    instance: Instance,
    /// Stop after this many permutations.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AlphaModeArg {
    Ceiling,
    Oracle,
}

#[derive(Args, Debug)]
struct AlphaArgs {
    #[arg(short = 'k')]
    k: usize,
    #[arg(long, value_enum, default_value_t = AlphaModeArg::Ceiling)]
    mode: AlphaModeArg,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check every n up to this bound.
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Swap in a deliberately wrong counter to exercise the harness.
    #[arg(long, hide = true)]
    corrupt: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Preset {
    PaperN100,
    LargeN,
    LargeK,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Presets to run; all of them when omitted.
    #[arg(value_enum)]
    presets: Vec<Preset>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(msg) = e.message() {
                eprintln!("pinnacle: {msg}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
