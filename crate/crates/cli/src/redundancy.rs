use anyhow::Result;
use clap::Args;
use serde::Serialize;

use freqnorm::baselines::{bloom_one_direction, collet_ceiling, fse_fast, giesen, FseConfig};
use freqnorm::exact::linear_window;
use freqnorm::gen::{generate, DistFamily, DistSpec};
use freqnorm::{build_histogram, ComparatorMode, Histogram};

use crate::input;

#[derive(Args, Debug)]
pub struct RedundancyArgs {
    /// Emit the four explicit witness rows instead of a sweep.
    #[arg(long)]
    witness: bool,
    /// Emit one row per distribution with the maximum gap over the grid.
    #[arg(long)]
    aggregate: bool,
    /// Distributions to sweep (labels: uniform, geom0.95, zipf1.0, gaussian, sparse, ...).
    #[arg(
        long,
        default_value = "uniform,geom0.7,geom0.95,zipf1.0,zipf1.5,gaussian,sparse"
    )]
    dists: String,
    /// Support sizes to sweep.
    #[arg(long, default_value = "64,256,1024,4096")]
    r_list: String,
    /// Totals to sweep.
    #[arg(long, default_value = "1000000")]
    n_list: String,
    /// Target M for every cell.
    #[arg(long, default_value_t = 1 << 20)]
    target: u64,
    /// csv (default) or json.
    #[arg(long, value_enum, default_value = "csv")]
    format: crate::FormatArg,
}

/// One row: per-baseline KL gap (nats/symbol) against the exact optimum.
#[derive(Debug, Serialize)]
struct Row {
    instance: String,
    giesen: f64,
    bloom_onedir: f64,
    fse_fast: f64,
    collet_ceiling: f64,
    optimum_kl_nats: f64,
}

fn row(label: String, h: &Histogram, target: u64) -> Result<Row> {
    let opt = linear_window(h, target, ComparatorMode::Float64)?;
    let cfg = FseConfig::new(h, target)?;
    Ok(Row {
        instance: label,
        giesen: giesen(h, target)?.report.kl - opt.kl,
        bloom_onedir: bloom_one_direction(h, target)?.kl - opt.kl,
        fse_fast: fse_fast(h, target, &cfg)?.report.kl - opt.kl,
        collet_ceiling: collet_ceiling(h, target)?.kl - opt.kl,
        optimum_kl_nats: opt.kl,
    })
}

fn emit(rows: &[Row], format: crate::FormatArg) -> Result<()> {
    match format {
        crate::FormatArg::Json => println!("{}", serde_json::to_string_pretty(rows)?),
        _ => {
            println!("instance,giesen,bloom_onedir,fse_fast,collet_ceiling,optimum_kl_nats");
            for r in rows {
                println!(
                    "{},{:e},{:e},{:e},{:e},{:e}",
                    r.instance,
                    r.giesen,
                    r.bloom_onedir,
                    r.fse_fast,
                    r.collet_ceiling,
                    r.optimum_kl_nats
                );
            }
        }
    }
    Ok(())
}

pub fn run(args: RedundancyArgs) -> Result<i32> {
    if args.witness {
        let witnesses: [(&str, Vec<u64>, u64); 4] = [
            ("witness (3046 2582 4294) M=8", vec![3046, 2582, 4294], 8),
            ("witness (10 3 3) M=8", vec![10, 3, 3], 8),
            (
                "witness (22 4x8) M=16",
                vec![22, 4, 4, 4, 4, 4, 4, 4, 4],
                16,
            ),
            ("witness (3 2) M=256", vec![3, 2], 256),
        ];
        let mut rows = Vec::new();
        for (label, counts, target) in witnesses {
            let h = build_histogram(counts)?;
            rows.push(row(label.to_string(), &h, target)?);
        }
        emit(&rows, args.format)?;
        return Ok(0);
    }

    let dists: Vec<(String, DistFamily)> = input::parse_list(&args.dists, "distribution", |s| {
        Ok((s.to_string(), input::parse_label(s)?))
    })?;
    let r_list: Vec<usize> =
        input::parse_list(&args.r_list, "support size", |s| Ok(s.parse::<usize>()?))?;
    let n_list: Vec<u64> = input::parse_list(&args.n_list, "total", |s| Ok(s.parse::<u64>()?))?;

    let mut rows = Vec::new();
    for (label, family) in &dists {
        let mut max_row: Option<Row> = None;
        for &r in &r_list {
            for &n in &n_list {
                if r as u64 > args.target || n < r as u64 {
                    eprintln!("note: skipping infeasible cell {label} r={r} N={n}");
                    continue;
                }
                let h = generate(&DistSpec {
                    family: *family,
                    support: r,
                    total: n,
                })?;
                let cell = row(
                    format!("{label} r={r} N={n} M={}", args.target),
                    &h,
                    args.target,
                )?;
                if args.aggregate {
                    let max_row = max_row.get_or_insert_with(|| Row {
                        instance: format!("{label} max over grid M={}", args.target),
                        giesen: f64::NEG_INFINITY,
                        bloom_onedir: f64::NEG_INFINITY,
                        fse_fast: f64::NEG_INFINITY,
                        collet_ceiling: f64::NEG_INFINITY,
                        optimum_kl_nats: f64::NEG_INFINITY,
                    });
                    max_row.giesen = max_row.giesen.max(cell.giesen);
                    max_row.bloom_onedir = max_row.bloom_onedir.max(cell.bloom_onedir);
                    max_row.fse_fast = max_row.fse_fast.max(cell.fse_fast);
                    max_row.collet_ceiling = max_row.collet_ceiling.max(cell.collet_ceiling);
                    max_row.optimum_kl_nats = max_row.optimum_kl_nats.max(cell.optimum_kl_nats);
                } else {
                    rows.push(cell);
                }
            }
        }
        if let Some(m) = max_row {
            rows.push(m);
        }
    }
    emit(&rows, args.format)?;
    Ok(0)
}
