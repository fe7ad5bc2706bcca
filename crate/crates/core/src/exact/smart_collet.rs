use crate::cmp::{check_exact_budget, min_pops_first, ComparatorMode};
use crate::error::Result;
use crate::exact::window::window_bounds;
use crate::heap::SimpleHeap;
use crate::hist::Histogram;
use crate::report::{NormReport, OpCounts};
use crate::ticket::HeapTicket;

/// Collet's greedy decrement loop on a provably valid envelope.
///
/// The deployed ceiling envelope `ceil(M c_a / N)` can sit below an
/// optimum on some coordinate, and a decrement-only loop can never
/// recover from that. The upper side of the optimum window cannot:
/// starting there, the `D = Σ U_a - M` cheapest downgrades reach a
/// global optimum in `O(r log r)` heap work.
pub fn smart_collet(h: &Histogram, target: u64, mode: ComparatorMode) -> Result<NormReport> {
    let window = window_bounds(h, target)?;
    if mode == ComparatorMode::Exact {
        check_exact_budget(h, target)?;
    }

    let mut freqs = vec![0u64; h.len()];
    let mut entries = Vec::with_capacity(h.support_size());
    for (i, &a) in h.support().iter().enumerate() {
        let u = window.upper()[i];
        freqs[a] = u;
        if u >= 2 {
            entries.push(HeapTicket::decrement_at(h.counts()[a], u, a));
        }
    }
    let heap_pushes = entries.len() as u64;
    let mut heap = SimpleHeap::build(entries, min_pops_first(mode));

    let downgrades = window.deficit();
    let mut heap_pops = 0u64;
    for _ in 0..downgrades {
        let top = *heap.peek().expect("deficit > 0 implies some m >= 2");
        let a = top.symbol;
        freqs[a] -= 1;
        if freqs[a] >= 2 {
            heap.update_top(HeapTicket::decrement_at(top.count, freqs[a], a));
        } else {
            heap.pop();
            heap_pops += 1;
        }
    }

    let mut op_counts = OpCounts::new();
    op_counts.insert("downgrades", downgrades);
    op_counts.insert("heap_pushes", heap_pushes);
    op_counts.insert("heap_pops", heap_pops);
    NormReport::from_freqs(h, freqs, target, mode, op_counts)
}
