use crate::cmp::{min_pops_first, ComparatorMode};
use crate::error::{Error, Result};
use crate::exact::require_feasible_target;
use crate::heap::SimpleHeap;
use crate::hist::Histogram;
use crate::report::{NormReport, OpCounts};
use crate::ticket::HeapTicket;

/// Collet's "perfect" normalization on its deployed envelope.
///
/// Start at `U_a = ceil(M c_a / N)` (clamped to 1 on support) and apply
/// the `D = Σ U_a - M` cheapest decrements through a min-heap. The greedy
/// loop is exact whenever the envelope sits above an optimum, but the
/// ceiling envelope does not always: a decrement-only loop started below
/// the optimum on some coordinate can never raise it, which is the
/// documented failure mode this baseline preserves.
pub fn collet_ceiling(h: &Histogram, target: u64) -> Result<NormReport> {
    require_feasible_target(h, target)?;
    let mode = ComparatorMode::Float64;
    let n = h.total() as u128;

    let mut freqs = vec![0u64; h.len()];
    let mut total: u64 = 0;
    let mut entries = Vec::with_capacity(h.support_size());
    for &a in h.support() {
        let scaled = (h.counts()[a] as u128)
            .checked_mul(target as u128)
            .ok_or(Error::ArithmeticOverflow)?;
        let ceil = u64::try_from(scaled.div_ceil(n))
            .map_err(|_| Error::ArithmeticOverflow)?
            .max(1);
        freqs[a] = ceil;
        total += ceil;
        if ceil >= 2 {
            entries.push(HeapTicket::decrement_at(h.counts()[a], ceil, a));
        }
    }

    let downgrades = total - target;
    let mut heap = SimpleHeap::build(entries, min_pops_first(mode));
    for _ in 0..downgrades {
        let top = *heap.peek().expect("overfull envelope has some m >= 2");
        let a = top.symbol;
        freqs[a] -= 1;
        if freqs[a] >= 2 {
            heap.update_top(HeapTicket::decrement_at(top.count, freqs[a], a));
        } else {
            heap.pop();
        }
    }

    let mut op_counts = OpCounts::new();
    op_counts.insert("downgrades", downgrades);
    NormReport::from_freqs(h, freqs, target, mode, op_counts)
}
