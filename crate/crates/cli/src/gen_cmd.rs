use std::io::Write;

use anyhow::{Context, Result};
use clap::Args;

use freqnorm::gen::{generate, DistSpec};

use crate::input;

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Family: uniform | geometric | zipf | gaussian | sparse_heavy.
    #[arg(long)]
    dist: String,
    /// Geometric ratio.
    #[arg(long)]
    p: Option<f64>,
    /// Zipf exponent.
    #[arg(long)]
    s: Option<f64>,
    /// Support size.
    #[arg(long)]
    r: usize,
    /// Total count.
    #[arg(long = "N", alias = "n")]
    total: u64,
    /// Output file (stdout if omitted).
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

pub fn run(args: GenArgs) -> Result<i32> {
    let family = input::parse_family(&args.dist, args.p, args.s)?;
    let h = generate(&DistSpec {
        family,
        support: args.r,
        total: args.total,
    })?;
    let line = h
        .counts()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    match &args.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .with_context(|| format!("creating {}", path.display()))?;
            writeln!(file, "{line}")?;
        }
        None => println!("{line}"),
    }
    Ok(0)
}
