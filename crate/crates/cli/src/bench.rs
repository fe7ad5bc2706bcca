use std::time::{Duration, Instant};

use anyhow::Result;
use clap::Args;

use freqnorm::gen::{generate, DistFamily, DistSpec};
use freqnorm::ComparatorMode;

use crate::report::{op_counts_compact, run_algorithm};
use crate::{input, AlgoName};

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Algorithms to time (default: all ten).
    #[arg(long, value_enum, value_delimiter = ',')]
    algos: Vec<AlgoName>,
    /// Distributions to sweep.
    #[arg(long, default_value = "uniform,geom0.95")]
    dists: String,
    /// Support sizes to sweep.
    #[arg(long, default_value = "64,512,4096")]
    r_list: String,
    /// Total count N per cell.
    #[arg(long = "N", alias = "n", default_value_t = 1_000_000)]
    total: u64,
    /// Target M.
    #[arg(long, default_value_t = 1 << 20)]
    target: u64,
    /// Timed repetitions per cell; the minimum is reported.
    #[arg(long, default_value_t = 50)]
    repeats: u32,
    /// Untimed warm-up calls per cell.
    #[arg(long, default_value_t = 5)]
    warmups: u32,
}

pub fn run(args: BenchArgs) -> Result<i32> {
    let algos = if args.algos.is_empty() {
        AlgoName::all().to_vec()
    } else {
        args.algos.clone()
    };
    let dists: Vec<(String, DistFamily)> = input::parse_list(&args.dists, "distribution", |s| {
        Ok((s.to_string(), input::parse_label(s)?))
    })?;
    let r_list: Vec<usize> =
        input::parse_list(&args.r_list, "support size", |s| Ok(s.parse::<usize>()?))?;

    println!("dist,r,N,M,algorithm,best_ns,ns_per_symbol,op_counts");
    for (label, family) in &dists {
        for &r in &r_list {
            if r as u64 > args.target || args.total < r as u64 {
                eprintln!("note: skipping infeasible cell {label} r={r}");
                continue;
            }
            let h = generate(&DistSpec {
                family: *family,
                support: r,
                total: args.total,
            })?;
            for &algo in &algos {
                if matches!(algo, AlgoName::FseFast | AlgoName::FseM2)
                    && !args.target.is_power_of_two()
                {
                    continue;
                }
                // The bottom-up pass costs Θ(M) per call; keep its budget small.
                let (warmups, repeats) = if algo == AlgoName::BottomUp {
                    (1, args.repeats.min(3))
                } else {
                    (args.warmups, args.repeats)
                };
                for _ in 0..warmups {
                    run_algorithm(algo, &h, args.target, ComparatorMode::Float64)?;
                }
                let mut best = Duration::MAX;
                let mut op_counts = String::new();
                for _ in 0..repeats.max(1) {
                    let t = Instant::now();
                    let report = run_algorithm(algo, &h, args.target, ComparatorMode::Float64)?;
                    let elapsed = t.elapsed();
                    if elapsed < best {
                        best = elapsed;
                    }
                    op_counts = op_counts_compact(&report.op_counts);
                }
                println!(
                    "{},{},{},{},{},{},{:.2},{}",
                    label,
                    r,
                    args.total,
                    args.target,
                    algo.as_str(),
                    best.as_nanos(),
                    best.as_nanos() as f64 / r as f64,
                    op_counts
                );
            }
        }
    }
    Ok(0)
}
