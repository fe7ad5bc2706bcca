//! `freqnorm`: normalize count histograms to fixed-total integer
//! frequency tables, validate the normalizers against each other and an
//! exhaustive oracle, measure the deployed heuristics' redundancy gaps,
//! benchmark scaling, and generate test inputs.

mod bench;
mod gen_cmd;
mod input;
mod normalize;
mod redundancy;
mod report;
mod validate;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "freqnorm",
    version,
    about = "KL-optimal integer frequency normalization and the heuristics it replaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize one histogram with a chosen algorithm.
    Normalize(normalize::NormalizeArgs),
    /// Run the witness suite, certificates, cross-algorithm agreement,
    /// oracle equivalence, and window checks. Exits 2 on any failure.
    Validate(validate::ValidateArgs),
    /// Per-baseline KL redundancy gaps against the exact optimum.
    Redundancy(redundancy::RedundancyArgs),
    /// Wall-clock scaling measurements with operation counts.
    Bench(bench::BenchArgs),
    /// Emit a synthetic counts file.
    Gen(gen_cmd::GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum AlgoName {
    BottomUp,
    BloomBidir,
    LinearWindow,
    SmartCollet,
    ThresholdWindow,
    Giesen,
    BloomOnedir,
    ColletCeiling,
    FseFast,
    FseM2,
}

impl AlgoName {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgoName::BottomUp => "bottom_up",
            AlgoName::BloomBidir => "bloom_bidir",
            AlgoName::LinearWindow => "linear_window",
            AlgoName::SmartCollet => "smart_collet",
            AlgoName::ThresholdWindow => "threshold_window",
            AlgoName::Giesen => "giesen",
            AlgoName::BloomOnedir => "bloom_onedir",
            AlgoName::ColletCeiling => "collet_ceiling",
            AlgoName::FseFast => "fse_fast",
            AlgoName::FseM2 => "fse_m2",
        }
    }

    pub fn all() -> [AlgoName; 10] {
        [
            AlgoName::BottomUp,
            AlgoName::BloomBidir,
            AlgoName::LinearWindow,
            AlgoName::SmartCollet,
            AlgoName::ThresholdWindow,
            AlgoName::Giesen,
            AlgoName::BloomOnedir,
            AlgoName::ColletCeiling,
            AlgoName::FseFast,
            AlgoName::FseM2,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Float64,
    Exact,
}

impl From<ModeArg> for freqnorm::ComparatorMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Float64 => freqnorm::ComparatorMode::Float64,
            ModeArg::Exact => freqnorm::ComparatorMode::Exact,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Plain,
    Json,
    Csv,
}

/// One input source for `normalize`: inline counts, a counts file, a raw
/// byte file, or a generator spec.
#[derive(Args, Debug)]
#[group(id = "source", required = true, multiple = false)]
pub struct SourceArgs {
    /// Whitespace-separated counts, e.g. "22 4 4 4".
    #[arg(long, group = "source")]
    counts: Option<String>,
    /// File of whitespace-separated counts.
    #[arg(long, group = "source")]
    counts_file: Option<std::path::PathBuf>,
    /// Raw byte file; ingested as a 256-slot histogram.
    #[arg(long, group = "source")]
    bytes_file: Option<std::path::PathBuf>,
    /// Generator family: uniform | geometric | zipf | gaussian | sparse_heavy.
    #[arg(long, group = "source")]
    dist: Option<String>,
    /// Geometric ratio for --dist geometric.
    #[arg(long)]
    p: Option<f64>,
    /// Zipf exponent for --dist zipf.
    #[arg(long)]
    s: Option<f64>,
    /// Support size for --dist.
    #[arg(long)]
    r: Option<usize>,
    /// Total count for --dist.
    #[arg(long = "N", alias = "n")]
    total: Option<u64>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let outcome = match cli.command {
        Command::Normalize(args) => normalize::run(args),
        Command::Validate(args) => validate::run(args),
        Command::Redundancy(args) => redundancy::run(args),
        Command::Bench(args) => bench::run(args),
        Command::Gen(args) => gen_cmd::run(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
