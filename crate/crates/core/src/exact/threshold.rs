use crate::cmp::{check_exact_budget, max_pops_first, min_pops_first, ComparatorMode};
use crate::error::Result;
use crate::exact::exchange::exchange_repair;
use crate::exact::linear_window;
use crate::exact::window::window_bounds;
use crate::heap::IndexedHeap;
use crate::hist::Histogram;
use crate::report::{NormReport, OpCounts};
use crate::ticket::{log_inv_ratio, HeapTicket};

const BISECTION_ROUNDS: u32 = 18;
const REFINE_CAP: u32 = 8;

/// Ticket-free variant of the linear window: find the Lagrangian
/// threshold `θ*` at which selecting every decrement cheaper than `θ*`
/// sheds exactly the deficit, by bisection with a Padé-approximate
/// inverse of `c ln(1 + 1/(j-1)) = θ`; then read each frequency off the
/// inverse, refine it against the true ticket values, close the residual
/// count error with a small indexed heap, and let the exchange loop
/// certify the result.
///
/// Falls back to [`linear_window`] when the post-bisection residual
/// exceeds `4 ceil(sqrt(r))`, which bounds the repair work on inputs the
/// Padé approximation handles poorly.
pub fn threshold_window(h: &Histogram, target: u64, mode: ComparatorMode) -> Result<NormReport> {
    let window = window_bounds(h, target)?;
    if mode == ComparatorMode::Exact {
        check_exact_budget(h, target)?;
    }
    let support = h.support();
    let r = support.len();

    let mut freqs = vec![0u64; h.len()];
    for (i, &a) in support.iter().enumerate() {
        freqs[a] = window.upper()[i];
    }
    let mut op_counts = OpCounts::new();
    op_counts.insert("fallback", 0);

    let deficit = window.deficit();
    if deficit == 0 {
        op_counts.insert("bisection_rounds", 0);
        op_counts.insert("refine_steps", 0);
        op_counts.insert("repair_steps", 0);
        op_counts.insert("phase2_exchanges", exchange_repair(h, &mut freqs, mode));
        return NormReport::from_freqs(h, freqs, target, mode, op_counts);
    }

    // Pack the active symbols (those whose window actually has width).
    let active: Vec<usize> = (0..r)
        .filter(|&i| window.upper()[i] > window.lower()[i])
        .collect();

    // Bracket θ by the cheapest and the most expensive window ticket.
    let mut theta_lo = f64::INFINITY;
    let mut theta_hi = f64::NEG_INFINITY;
    for &i in &active {
        let c = h.counts()[support[i]] as f64;
        theta_lo = theta_lo.min(c * log_inv_ratio(window.upper()[i] - 1));
        theta_hi = theta_hi.max(c * log_inv_ratio(window.lower()[i]));
    }

    // j*(θ) ~= ceil(c/θ + 1/2 + θ/(12c)): the series inverse of
    // c ln(1 + 1/(j-1)) = θ around large j. Clamped to the window, the
    // count of tickets below the cutoff is monotone in θ.
    let pade_level = |c: f64, theta: f64, l: u64, u: u64| -> u64 {
        let raw = c / theta + 0.5 + theta / (12.0 * c);
        let j = raw.ceil();
        let j = j.clamp((l + 1) as f64, (u + 1) as f64);
        j as u64
    };
    let count_at = |theta: f64| -> u64 {
        let mut selected = 0u64;
        for &i in &active {
            let c = h.counts()[support[i]] as f64;
            let j = pade_level(c, theta, window.lower()[i], window.upper()[i]);
            selected += window.upper()[i] + 1 - j;
        }
        selected
    };

    for _ in 0..BISECTION_ROUNDS {
        let mid = 0.5 * (theta_lo + theta_hi);
        if count_at(mid) >= deficit {
            theta_hi = mid;
        } else {
            theta_lo = mid;
        }
    }
    let theta = theta_hi;
    op_counts.insert("bisection_rounds", BISECTION_ROUNDS as u64);

    // Read frequencies off the inverse, then refine each against the true
    // ticket values: everything strictly below θ applied, nothing at or
    // above it.
    let mut refine_steps = 0u64;
    for &i in &active {
        let a = support[i];
        let c = h.counts()[a];
        let (l, u) = (window.lower()[i], window.upper()[i]);
        let mut m = pade_level(c as f64, theta, l, u) - 1;
        let mut steps = 0u32;
        while steps < REFINE_CAP && m > l && (c as f64) * log_inv_ratio(m - 1) < theta {
            m -= 1;
            steps += 1;
        }
        while steps < REFINE_CAP && m < u && (c as f64) * log_inv_ratio(m) >= theta {
            m += 1;
            steps += 1;
        }
        refine_steps += steps as u64;
        freqs[a] = m;
    }
    op_counts.insert("refine_steps", refine_steps);

    let sum: u64 = support.iter().map(|&a| freqs[a]).sum();
    let residual = sum as i128 - target as i128;
    let safety = 4 * (r as f64).sqrt().ceil() as i128;
    if residual.abs() > safety {
        let mut report = linear_window(h, target, mode)?;
        report.op_counts.insert("fallback", 1);
        report
            .op_counts
            .insert("bisection_rounds", BISECTION_ROUNDS as u64);
        return Ok(report);
    }

    // Close the residual inside the window with an indexed heap.
    let mut lower_by_slot = vec![0u64; h.len()];
    let mut upper_by_slot = vec![0u64; h.len()];
    for (i, &a) in support.iter().enumerate() {
        lower_by_slot[a] = window.lower()[i];
        upper_by_slot[a] = window.upper()[i];
    }
    let mut repair_steps = 0u64;
    if residual > 0 {
        let entries: Vec<_> = active
            .iter()
            .filter(|&&i| freqs[support[i]] > window.lower()[i])
            .map(|&i| {
                let a = support[i];
                (a, HeapTicket::decrement_at(h.counts()[a], freqs[a], a))
            })
            .collect();
        let mut heap = IndexedHeap::build(h.len(), entries, min_pops_first(mode));
        for _ in 0..residual {
            let &(a, top) = heap
                .peek()
                .expect("window leaves room to shed the residual");
            freqs[a] -= 1;
            repair_steps += 1;
            if freqs[a] > lower_by_slot[a] {
                heap.update(a, HeapTicket::decrement_at(top.count, freqs[a], a));
            } else {
                heap.remove(a);
            }
        }
    } else if residual < 0 {
        let entries: Vec<_> = active
            .iter()
            .filter(|&&i| freqs[support[i]] < window.upper()[i])
            .map(|&i| {
                let a = support[i];
                (a, HeapTicket::increment_at(h.counts()[a], freqs[a], a))
            })
            .collect();
        let mut heap = IndexedHeap::build(h.len(), entries, max_pops_first(mode));
        for _ in 0..-residual {
            let &(a, top) = heap
                .peek()
                .expect("window leaves room to fill the residual");
            freqs[a] += 1;
            repair_steps += 1;
            if freqs[a] < upper_by_slot[a] {
                heap.update(a, HeapTicket::increment_at(top.count, freqs[a], a));
            } else {
                heap.remove(a);
            }
        }
    }
    op_counts.insert("repair_steps", repair_steps);

    op_counts.insert("phase2_exchanges", exchange_repair(h, &mut freqs, mode));
    NormReport::from_freqs(h, freqs, target, mode, op_counts)
}
