use crate::cmp::{check_exact_budget, cmp_value, ComparatorMode};
use crate::error::Result;
use crate::exact::select::select_smallest;
use crate::exact::window::window_bounds;
use crate::hist::Histogram;
use crate::report::{NormReport, OpCounts};
use crate::ticket::HeapTicket;

/// Linear-window KL-optimal normalization.
///
/// Start every frequency at its window upper bound `U_a`, emit the
/// decrement tickets `Δ⁻_a(j)` for `j` in `(L_a, U_a]` — at most `4r - 4`
/// of them — and apply the `D = Σ U_a - M` cheapest, found by
/// expected-linear selection. Every optimum lies inside the window and
/// the cheapest-`D` set is automatically suffix-closed per symbol, so the
/// result is a global optimum without any heap in the loop.
pub fn linear_window(h: &Histogram, target: u64, mode: ComparatorMode) -> Result<NormReport> {
    let window = window_bounds(h, target)?;
    if mode == ComparatorMode::Exact {
        check_exact_budget(h, target)?;
    }

    let mut freqs = vec![0u64; h.len()];
    let mut tickets: Vec<HeapTicket> = Vec::with_capacity(window.total_width() as usize);
    for (i, &a) in h.support().iter().enumerate() {
        let c = h.counts()[a];
        let (l, u) = (window.lower()[i], window.upper()[i]);
        freqs[a] = u;
        for j in (l + 1)..=u {
            tickets.push(HeapTicket::decrement_at(c, j, a));
        }
    }

    let deficit = window.deficit() as usize;
    let less = |a: &HeapTicket, b: &HeapTicket| match cmp_value(mode, a, b) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => (a.symbol, a.ratio) < (b.symbol, b.ratio),
    };
    select_smallest(&mut tickets, deficit, &less);
    for t in &tickets[..deficit] {
        freqs[t.symbol] -= 1;
    }

    let mut op_counts = OpCounts::new();
    op_counts.insert("tickets_emitted", tickets.len() as u64);
    op_counts.insert("decrements_applied", deficit as u64);
    NormReport::from_freqs(h, freqs, target, mode, op_counts)
}
