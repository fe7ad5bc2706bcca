use crate::cmp::ComparatorMode;
use crate::error::{Error, Result};
use crate::exact::require_feasible_target;
use crate::hist::Histogram;
use crate::report::{NormReport, OpCounts};

/// Fixed-point parameters of the FSE normalization pair.
///
/// The reciprocal scale is the Barrett-style `σ = floor(2^62 / N)`; the
/// per-symbol estimate is then `floor(c σ / 2^(62-L))` with `L = log2 M`.
/// `rtb` holds the fractional round-up thresholds (scaled by 2^20) for
/// estimates 0..=7; entry 0 is zero so a positive residual always lifts a
/// zero estimate to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FseConfig {
    pub reciprocal_shift: u32,
    pub table_log: u32,
    pub rtb: [u64; 8],
    pub low_threshold: u64,
    pub m2_mid_threshold: u64,
    pub half_step: u64,
}

const RTB: [u64; 8] = [0, 472907, 504365, 521142, 549454, 700449, 749732, 830472];

impl FseConfig {
    /// Derive the table for a power-of-two target. Errors if the target
    /// is not a power of two or is below the support size.
    pub fn new(h: &Histogram, target: u64) -> Result<Self> {
        require_feasible_target(h, target)?;
        if !target.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(target));
        }
        let table_log = target.trailing_zeros();
        if table_log > 61 {
            return Err(Error::ArithmeticOverflow);
        }
        let n = h.total();
        Ok(FseConfig {
            reciprocal_shift: 62,
            table_log,
            rtb: RTB,
            low_threshold: n / target,
            m2_mid_threshold: u64::try_from(3u128 * n as u128 / (2 * target as u128))
                .map_err(|_| Error::ArithmeticOverflow)?,
            half_step: (1u64 << (61 - table_log)) - 1,
        })
    }

    fn scale(&self) -> u32 {
        self.reciprocal_shift - self.table_log
    }
}

/// Result of the fast pass, with the flag saying whether it abandoned in
/// favor of [`fse_normalize_m2`] (in which case `report` is the fallback's).
#[derive(Debug, Clone, PartialEq)]
pub struct FseFastOutput {
    pub report: NormReport,
    pub fallback_taken: bool,
}

/// The FSE fast pass.
///
/// Counts at or below `floor(N/M)` get the sentinel bucket, scored here
/// as frequency 1. Everything else gets the reciprocal estimate, with the
/// tabulated fractional round-up for estimates below 8. The signed slack
/// `M - K` is absorbed in one bulk step by the largest assigned symbol —
/// unless the pass is overfull by at least half that symbol's mass, in
/// which case it delegates to the fallback.
pub fn fse_fast(h: &Histogram, target: u64, cfg: &FseConfig) -> Result<FseFastOutput> {
    require_feasible_target(h, target)?;
    let sigma = (1u64 << cfg.reciprocal_shift) / h.total();
    let unit: u128 = 1u128 << cfg.scale();

    let mut freqs = vec![0u64; h.len()];
    let mut assigned: u128 = 0;
    let mut largest: Option<usize> = None;
    let mut low_symbols = 0u64;
    let mut rtb_roundups = 0u64;
    for &a in h.support() {
        let c = h.counts()[a];
        let m = if c <= cfg.low_threshold {
            low_symbols += 1;
            1u64
        } else {
            let scaled = c as u128 * sigma as u128;
            let mut est = (scaled / unit) as u64;
            if est < 8 {
                let residual = scaled - est as u128 * unit;
                if (residual << 20) > cfg.rtb[est as usize] as u128 * unit {
                    est += 1;
                    rtb_roundups += 1;
                }
            }
            est
        };
        freqs[a] = m;
        assigned += m as u128;
        if largest.is_none_or(|best| m > freqs[best]) {
            largest = Some(a);
        }
    }

    let largest = largest.expect("support is non-empty");
    let m_max = freqs[largest];
    let target_128 = target as u128;
    if assigned > target_128 && assigned - target_128 >= (m_max / 2) as u128 {
        let mut report = fse_normalize_m2(h, target, cfg)?;
        report.op_counts.insert("fallback", 1);
        return Ok(FseFastOutput {
            report,
            fallback_taken: true,
        });
    }

    if assigned >= target_128 {
        freqs[largest] -= (assigned - target_128) as u64;
    } else {
        freqs[largest] += (target_128 - assigned) as u64;
    }

    let mut op_counts = OpCounts::new();
    op_counts.insert("fallback", 0);
    op_counts.insert("low_symbols", low_symbols);
    op_counts.insert("rtb_roundups", rtb_roundups);
    op_counts.insert("slack_to_largest", target_128.abs_diff(assigned) as u64);
    let report = NormReport::from_freqs(h, freqs, target, ComparatorMode::Float64, op_counts)?;
    Ok(FseFastOutput {
        report,
        fallback_taken: false,
    })
}

/// The FSE fallback (`normalizeM2`-style).
///
/// Two small-symbol filters commit frequency 1 (counts up to
/// `floor(N/M)`, then counts up to `floor(3N/2M)`), both classes are
/// deducted from `N` and `M`, and the residual symbols get a cumulative
/// rescaling seeded with the half-step `T0 = 2^(61-L) - 1`, making the
/// residual assignment round-to-nearest rather than floor.
pub fn fse_normalize_m2(h: &Histogram, target: u64, cfg: &FseConfig) -> Result<NormReport> {
    require_feasible_target(h, target)?;
    let scale = cfg.scale();

    let mut freqs = vec![0u64; h.len()];
    let mut classified_low = 0u64;
    let mut classified_mid = 0u64;
    let mut residual_total: u128 = 0;
    let mut residual_syms = Vec::new();
    for &a in h.support() {
        let c = h.counts()[a];
        if c <= cfg.low_threshold {
            freqs[a] = 1;
            classified_low += 1;
        } else if c <= cfg.m2_mid_threshold {
            freqs[a] = 1;
            classified_mid += 1;
        } else {
            residual_syms.push(a);
            residual_total += c as u128;
        }
    }

    let classified = classified_low + classified_mid;
    let residual_target = target - classified; // classified <= r <= target
    if residual_syms.is_empty() {
        if residual_target != 0 {
            return Err(Error::FallbackInfeasible);
        }
    } else {
        if residual_target == 0 {
            return Err(Error::FallbackInfeasible);
        }
        let step_num = ((residual_target as u128) << scale) + cfg.half_step as u128;
        let r_step = step_num / residual_total;
        let mut running: u128 = cfg.half_step as u128;
        let mut prev = running >> scale;
        for &a in &residual_syms {
            running += h.counts()[a] as u128 * r_step;
            let here = running >> scale;
            let weight = here - prev;
            if weight < 1 {
                return Err(Error::FallbackInfeasible);
            }
            freqs[a] = u64::try_from(weight).map_err(|_| Error::ArithmeticOverflow)?;
            prev = here;
        }
    }

    let mut op_counts = OpCounts::new();
    op_counts.insert("classified_low", classified_low);
    op_counts.insert("classified_mid", classified_mid);
    op_counts.insert("residual_symbols", residual_syms.len() as u64);
    NormReport::from_freqs(h, freqs, target, ComparatorMode::Float64, op_counts)
}
