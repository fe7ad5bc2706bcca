use crate::cmp::{max_pops_first, min_pops_first, ComparatorMode};
use crate::error::Result;
use crate::exact::{geometric_mean_init, require_feasible_target};
use crate::heap::SimpleHeap;
use crate::hist::Histogram;
use crate::report::{NormReport, OpCounts};
use crate::ticket::HeapTicket;

/// Bloom's published algorithm: geometric-mean rounding plus a
/// single-direction heap correction toward `Σ m = M`.
///
/// The correction direction is gated on the sign of the initialization's
/// surplus, so it never fires when the per-symbol rounding happens to sum
/// to `M` exactly, and it cannot repair initializations that must move in
/// both directions — the two failure modes the bidirectional variant in
/// [`crate::exact`] removes.
pub fn bloom_one_direction(h: &Histogram, target: u64) -> Result<NormReport> {
    require_feasible_target(h, target)?;
    let mode = ComparatorMode::Float64;

    let mut freqs = geometric_mean_init(h, target)?;
    let mut sum: u64 = h.support().iter().map(|&a| freqs[a]).sum();

    let mut heap_steps = 0u64;
    if sum > target {
        let entries: Vec<_> = h
            .support()
            .iter()
            .filter(|&&a| freqs[a] >= 2)
            .map(|&a| HeapTicket::decrement_at(h.counts()[a], freqs[a], a))
            .collect();
        let mut heap = SimpleHeap::build(entries, min_pops_first(mode));
        while sum > target {
            let top = *heap.peek().expect("sum > target >= r implies some m >= 2");
            let a = top.symbol;
            freqs[a] -= 1;
            sum -= 1;
            heap_steps += 1;
            if freqs[a] >= 2 {
                heap.update_top(HeapTicket::decrement_at(top.count, freqs[a], a));
            } else {
                heap.pop();
            }
        }
    } else if sum < target {
        let entries: Vec<_> = h
            .support()
            .iter()
            .map(|&a| HeapTicket::increment_at(h.counts()[a], freqs[a], a))
            .collect();
        let mut heap = SimpleHeap::build(entries, max_pops_first(mode));
        while sum < target {
            let top = *heap.peek().expect("support is non-empty");
            let a = top.symbol;
            freqs[a] += 1;
            sum += 1;
            heap_steps += 1;
            heap.update_top(HeapTicket::increment_at(top.count, freqs[a], a));
        }
    }

    let mut op_counts = OpCounts::new();
    op_counts.insert("heap_steps", heap_steps);
    NormReport::from_freqs(h, freqs, target, mode, op_counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hist::build_histogram;

    #[test]
    fn exact_sum_init_means_the_heap_never_fires() {
        let h = build_histogram(vec![3046, 2582, 4294]).unwrap();
        let report = bloom_one_direction(&h, 8).unwrap();
        assert_eq!(report.table.freqs(), &[3, 2, 3]);
        assert_eq!(report.op_counts["heap_steps"], 0);
        assert!(!report.certificate_ok);
    }

    #[test]
    fn one_direction_repair_stays_suboptimal() {
        // Init (2,20,2) is overfull by one; the cheapest decrement (ties
        // to the lowest index) gives (1,20,2), not the optimum (1,21,1).
        let h = build_histogram(vec![8, 114, 8]).unwrap();
        let report = bloom_one_direction(&h, 23).unwrap();
        assert_eq!(report.table.freqs(), &[1, 20, 2]);
        assert_eq!(report.op_counts["heap_steps"], 1);
        assert!(!report.certificate_ok);
    }

    #[test]
    fn exact_proportions_pass_through() {
        let h = build_histogram(vec![4, 4]).unwrap();
        let report = bloom_one_direction(&h, 8).unwrap();
        assert_eq!(report.table.freqs(), &[4, 4]);
        assert_eq!(report.kl, 0.0);
    }
}
