use std::collections::BTreeMap;

use crate::cert::is_marginal_optimal;
use crate::cmp::ComparatorMode;
use crate::error::Result;
use crate::hist::{FreqTable, Histogram};
use crate::objective::{kl_divergence, phi};

/// Named operation counters (heap rounds, tickets emitted, exchanges,
/// bisection rounds, ...), keyed deterministically for report output.
pub type OpCounts = BTreeMap<&'static str, u64>;

/// Output bundle of every normalizer: the table, both objectives, the
/// marginal-exchange verdict, and the operation counters that the scaling
/// claims are checked against.
#[derive(Debug, Clone, PartialEq)]
pub struct NormReport {
    pub table: FreqTable,
    /// `Φ = Σ c_a ln(m_a)` in nats.
    pub phi: f64,
    /// KL divergence in nats per source symbol.
    pub kl: f64,
    /// Verdict of [`is_marginal_optimal`] on `table`.
    pub certificate_ok: bool,
    pub op_counts: OpCounts,
}

impl NormReport {
    /// Score a finished frequency vector. The vector must be feasible;
    /// pre-fixup artifacts are returned separately by their producers.
    pub(crate) fn from_freqs(
        h: &Histogram,
        freqs: Vec<u64>,
        target: u64,
        mode: ComparatorMode,
        op_counts: OpCounts,
    ) -> Result<Self> {
        let table = FreqTable::new(freqs, target)?;
        let phi = phi(h, &table);
        let kl = kl_divergence(h, &table);
        let certificate_ok = is_marginal_optimal(h, &table, mode)?.ok;
        Ok(NormReport {
            table,
            phi,
            kl,
            certificate_ok,
            op_counts,
        })
    }
}
