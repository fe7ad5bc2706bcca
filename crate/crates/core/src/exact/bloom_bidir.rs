use crate::cmp::{check_exact_budget, max_pops_first, min_pops_first, ComparatorMode};
use crate::error::{Error, Result};
use crate::exact::exchange::exchange_repair;
use crate::exact::require_feasible_target;
use crate::heap::SimpleHeap;
use crate::hist::Histogram;
use crate::report::{NormReport, OpCounts};
use crate::ticket::HeapTicket;

/// Geometric-mean rounding of every scaled frequency `s_a = M c_a / N`:
/// round down to `d_a = floor(s_a)` iff `s_a^2 <= d_a (d_a + 1)`, i.e.
/// iff `(M c_a)^2 <= N^2 d_a (d_a + 1)` in unsigned 128-bit arithmetic,
/// then clamp to 1 on the support. This is the one-symbol code-length
/// optimal rounding rule; its sum is generally not `M`.
pub(crate) fn geometric_mean_init(h: &Histogram, target: u64) -> Result<Vec<u64>> {
    let n = h.total() as u128;
    let n_sq = n.checked_mul(n).ok_or(Error::ArithmeticOverflow)?;
    let mut freqs = vec![0u64; h.len()];
    for &a in h.support() {
        let c = h.counts()[a] as u128;
        let scaled = c
            .checked_mul(target as u128)
            .ok_or(Error::ArithmeticOverflow)?;
        let d = u64::try_from(scaled / n).map_err(|_| Error::ArithmeticOverflow)?;
        let scaled_sq = scaled
            .checked_mul(scaled)
            .ok_or(Error::ArithmeticOverflow)?;
        let boundary = n_sq
            .checked_mul(d as u128 * (d as u128 + 1))
            .ok_or(Error::ArithmeticOverflow)?;
        let m = if scaled_sq <= boundary { d } else { d + 1 };
        freqs[a] = m.max(1);
    }
    Ok(freqs)
}

/// Bloom's geometric-mean initialization with a bidirectional repair.
///
/// Phase 1 restores `Σ m = M` with a one-direction heap driven by the
/// marginal tickets (only the direction the initialization missed on is
/// ever needed). Phase 2 runs the exchange loop until the
/// marginal-exchange certificate holds, which repairs initializations
/// that landed on the wrong side of the optimum on several coordinates at
/// once — the case no one-direction correction can fix.
pub fn bloom_bidirectional(h: &Histogram, target: u64, mode: ComparatorMode) -> Result<NormReport> {
    require_feasible_target(h, target)?;
    if mode == ComparatorMode::Exact {
        check_exact_budget(h, target)?;
    }

    let mut freqs = geometric_mean_init(h, target)?;
    let mut sum: u64 = h.support().iter().map(|&a| freqs[a]).sum();

    // Phase 1: one direction only, on a plain heap whose top is re-keyed
    // in place after each unit step.
    let mut phase1_steps = 0u64;
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
            phase1_steps += 1;
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
            phase1_steps += 1;
            heap.update_top(HeapTicket::increment_at(top.count, freqs[a], a));
        }
    }

    // Phase 2: bidirectional exchange until the certificate holds.
    let phase2_exchanges = exchange_repair(h, &mut freqs, mode);

    let mut op_counts = OpCounts::new();
    op_counts.insert("phase1_steps", phase1_steps);
    op_counts.insert("phase2_exchanges", phase2_exchanges);
    NormReport::from_freqs(h, freqs, target, mode, op_counts)
}
