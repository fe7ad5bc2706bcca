use std::collections::BTreeMap;

use anyhow::Result;
use freqnorm::baselines::{
    bloom_one_direction, collet_ceiling, fse_fast, fse_normalize_m2, giesen, FseConfig,
};
use freqnorm::exact::{
    bloom_bidirectional, bottom_up, linear_window, smart_collet, threshold_window,
};
use freqnorm::{ComparatorMode, Histogram, NormReport};
use serde::{Deserialize, Serialize};

use crate::AlgoName;

/// Dispatch one algorithm by name. Baselines ignore the comparator mode;
/// the FSE pair derives its fixed-point config from the instance.
pub fn run_algorithm(
    algo: AlgoName,
    h: &Histogram,
    target: u64,
    mode: ComparatorMode,
) -> freqnorm::Result<NormReport> {
    match algo {
        AlgoName::BottomUp => bottom_up(h, target, mode),
        AlgoName::BloomBidir => bloom_bidirectional(h, target, mode),
        AlgoName::LinearWindow => linear_window(h, target, mode),
        AlgoName::SmartCollet => smart_collet(h, target, mode),
        AlgoName::ThresholdWindow => threshold_window(h, target, mode),
        AlgoName::Giesen => giesen(h, target).map(|out| out.report),
        AlgoName::BloomOnedir => bloom_one_direction(h, target),
        AlgoName::ColletCeiling => collet_ceiling(h, target),
        AlgoName::FseFast => {
            let cfg = FseConfig::new(h, target)?;
            fse_fast(h, target, &cfg).map(|out| out.report)
        }
        AlgoName::FseM2 => {
            let cfg = FseConfig::new(h, target)?;
            fse_normalize_m2(h, target, &cfg)
        }
    }
}

/// The JSON report schema; field names are part of the interface.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ReportJson {
    pub algorithm: String,
    #[serde(rename = "M")]
    pub m: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub r: usize,
    pub freqs: Vec<u64>,
    pub phi: f64,
    pub kl_nats: f64,
    pub certificate_ok: bool,
    pub op_counts: BTreeMap<String, u64>,
}

impl ReportJson {
    pub fn new(algo: AlgoName, h: &Histogram, report: &NormReport) -> Self {
        ReportJson {
            algorithm: algo.as_str().to_string(),
            m: report.table.target(),
            n: h.total(),
            r: h.support_size(),
            freqs: report.table.freqs().to_vec(),
            phi: report.phi,
            kl_nats: report.kl,
            certificate_ok: report.certificate_ok,
            op_counts: report
                .op_counts
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
        }
    }
}

pub fn op_counts_compact(op_counts: &BTreeMap<&'static str, u64>) -> String {
    op_counts
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn join(freqs: &[u64]) -> String {
    freqs
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Print one report in the requested format. `bits` rescales the
/// divergence display in plain/csv output; JSON always carries nats.
pub fn emit(
    algo: AlgoName,
    h: &Histogram,
    report: &NormReport,
    format: crate::FormatArg,
    bits: bool,
) -> Result<()> {
    match format {
        crate::FormatArg::Json => {
            println!(
                "{}",
                serde_json::to_string(&ReportJson::new(algo, h, report))?
            );
        }
        crate::FormatArg::Csv => {
            let (kl, unit) = display_kl(report.kl, bits);
            println!("algorithm,M,N,r,phi,kl_{unit},certificate_ok,freqs,op_counts");
            println!(
                "{},{},{},{},{},{},{},{},{}",
                algo.as_str(),
                report.table.target(),
                h.total(),
                h.support_size(),
                report.phi,
                kl,
                report.certificate_ok,
                join(report.table.freqs()),
                op_counts_compact(&report.op_counts),
            );
        }
        crate::FormatArg::Plain => {
            let (kl, unit) = display_kl(report.kl, bits);
            println!("algorithm:   {}", algo.as_str());
            println!(
                "M: {}  N: {}  r: {}",
                report.table.target(),
                h.total(),
                h.support_size()
            );
            println!("freqs:       {}", join(report.table.freqs()));
            println!("phi:         {:.12e} nats", report.phi);
            println!("kl:          {kl:.12e} {unit}/symbol");
            println!(
                "certificate: {}",
                if report.certificate_ok {
                    "ok"
                } else {
                    "FAILED"
                }
            );
            println!("op_counts:   {}", op_counts_compact(&report.op_counts));
        }
    }
    Ok(())
}

fn display_kl(kl_nats: f64, bits: bool) -> (f64, &'static str) {
    if bits {
        (kl_nats / std::f64::consts::LN_2, "bits")
    } else {
        (kl_nats, "nats")
    }
}
