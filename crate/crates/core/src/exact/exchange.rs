use std::cmp::Ordering;

use crate::cmp::{cmp_value, max_pops_first, min_pops_first, ComparatorMode};
use crate::heap::IndexedHeap;
use crate::hist::Histogram;
use crate::ticket::HeapTicket;

/// Bidirectional exchange repair: while the cheapest decrement is strictly
/// cheaper than the best increment (and they name different symbols), move
/// one unit between them. Terminates exactly when the marginal-exchange
/// certificate holds; returns the number of exchanges performed.
///
/// The indexed heaps are only built when a linear min/max scan of the
/// per-symbol marginals actually finds an improving pair, which is the
/// common case on benign inputs where this phase does nothing.
pub(crate) fn exchange_repair(h: &Histogram, freqs: &mut [u64], mode: ComparatorMode) -> u64 {
    let mut best_inc: Option<HeapTicket> = None;
    let mut best_dec: Option<HeapTicket> = None;
    for &a in h.support() {
        let c = h.counts()[a];
        let m = freqs[a];
        let inc = HeapTicket::increment_at(c, m, a);
        if best_inc.is_none_or(|b| cmp_value(mode, &inc, &b) == Ordering::Greater) {
            best_inc = Some(inc);
        }
        if m >= 2 {
            let dec = HeapTicket::decrement_at(c, m, a);
            if best_dec.is_none_or(|b| cmp_value(mode, &dec, &b) == Ordering::Less) {
                best_dec = Some(dec);
            }
        }
    }
    let (Some(dec), Some(inc)) = (best_dec, best_inc) else {
        return 0;
    };
    if dec.symbol == inc.symbol || cmp_value(mode, &dec, &inc) != Ordering::Less {
        return 0;
    }

    let mut inc_entries = Vec::with_capacity(h.support_size());
    let mut dec_entries = Vec::new();
    for &a in h.support() {
        let c = h.counts()[a];
        let m = freqs[a];
        inc_entries.push((a, HeapTicket::increment_at(c, m, a)));
        if m >= 2 {
            dec_entries.push((a, HeapTicket::decrement_at(c, m, a)));
        }
    }
    let mut inc_heap = IndexedHeap::build(h.len(), inc_entries, max_pops_first(mode));
    let mut dec_heap = IndexedHeap::build(h.len(), dec_entries, min_pops_first(mode));

    let mut exchanges = 0u64;
    while let Some(&(from, dec_top)) = dec_heap.peek() {
        let &(to, inc_top) = inc_heap.peek().expect("support is non-empty");
        if from == to || cmp_value(mode, &dec_top, &inc_top) != Ordering::Less {
            break;
        }

        freqs[from] -= 1;
        freqs[to] += 1;
        exchanges += 1;

        let c_from = h.counts()[from];
        let c_to = h.counts()[to];
        inc_heap.update(from, HeapTicket::increment_at(c_from, freqs[from], from));
        inc_heap.update(to, HeapTicket::increment_at(c_to, freqs[to], to));
        if freqs[from] >= 2 {
            dec_heap.update(from, HeapTicket::decrement_at(c_from, freqs[from], from));
        } else {
            dec_heap.remove(from);
        }
        let to_dec = HeapTicket::decrement_at(c_to, freqs[to], to);
        if dec_heap.contains(to) {
            dec_heap.update(to, to_dec);
        } else {
            dec_heap.insert(to, to_dec);
        }
    }
    exchanges
}
