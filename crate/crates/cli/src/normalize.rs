use anyhow::Result;
use clap::Args;

use crate::{input, report, AlgoName, FormatArg, ModeArg, SourceArgs};

#[derive(Args, Debug)]
pub struct NormalizeArgs {
    /// Which normalizer to run.
    #[arg(long, value_enum)]
    algo: AlgoName,
    /// Target total M.
    #[arg(long)]
    target: u64,
    /// Ticket comparator for the exact algorithms.
    #[arg(long, value_enum, default_value = "float64")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
    /// Display divergences in bits instead of nats (plain/csv only).
    #[arg(long)]
    bits: bool,
    #[command(flatten)]
    source: SourceArgs,
}

pub fn run(args: NormalizeArgs) -> Result<i32> {
    let h = input::load(&args.source)?;
    let report = report::run_algorithm(args.algo, &h, args.target, args.mode.into())?;
    report::emit(args.algo, &h, &report, args.format, args.bits)?;
    Ok(0)
}
