use crate::cmp::{check_exact_budget, max_pops_first, ComparatorMode};
use crate::error::Result;
use crate::exact::require_feasible_target;
use crate::heap::SimpleHeap;
use crate::hist::Histogram;
use crate::report::{NormReport, OpCounts};
use crate::ticket::HeapTicket;

/// Bottom-up KL-optimal normalization.
///
/// Start from the smallest support-feasible table (`m_a = 1` on the
/// support) and spend the remaining `M - r` units one at a time on the
/// largest available increment ticket. The all-ones start sits below every
/// optimum component-wise, so unlike envelope methods there is no validity
/// condition to check; the price is one heap round per unit of `M - r`.
pub fn bottom_up(h: &Histogram, target: u64, mode: ComparatorMode) -> Result<NormReport> {
    require_feasible_target(h, target)?;
    if mode == ComparatorMode::Exact {
        check_exact_budget(h, target)?;
    }
    let r = h.support_size() as u64;

    let mut freqs = vec![0u64; h.len()];
    let mut entries = Vec::with_capacity(h.support_size());
    for &a in h.support() {
        freqs[a] = 1;
        entries.push(HeapTicket::increment_at(h.counts()[a], 1, a));
    }
    let mut heap = SimpleHeap::build(entries, max_pops_first(mode));

    let rounds = target - r;
    for _ in 0..rounds {
        let top = *heap.peek().expect("support is non-empty");
        let m = freqs[top.symbol] + 1;
        freqs[top.symbol] = m;
        heap.update_top(HeapTicket::increment_at(top.count, m, top.symbol));
    }

    let mut op_counts = OpCounts::new();
    op_counts.insert("heap_rounds", rounds);
    NormReport::from_freqs(h, freqs, target, mode, op_counts)
}
