/// Partial selection: rearrange `v` so that `v[..k]` holds the `k`
/// smallest elements under `less` (in no particular order).
///
/// Expected-linear quickselect with median-of-3 pivots and a branchless
/// Lomuto partition; degenerates to a full sort if the pivot sequence
/// goes pathological. `less` must be a strict total order.
pub(crate) fn select_smallest<T, F: Fn(&T, &T) -> bool>(v: &mut [T], k: usize, less: &F) {
    if k == 0 || k >= v.len() {
        return;
    }
    let mut lo = 0usize;
    let mut hi = v.len();
    let mut depth_budget = 2 * (usize::BITS - v.len().leading_zeros());
    loop {
        if hi - lo <= 8 || depth_budget == 0 {
            v[lo..hi].sort_unstable_by(|a, b| {
                if less(a, b) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            });
            return;
        }
        depth_budget -= 1;

        let pivot = median_of_3(v, lo, hi, less);
        let p = partition(v, lo, hi, pivot, less);
        if k <= p {
            hi = p;
        } else if k > p + 1 {
            lo = p + 1;
        } else {
            return;
        }
    }
}

fn median_of_3<T, F: Fn(&T, &T) -> bool>(v: &mut [T], lo: usize, hi: usize, less: &F) -> usize {
    let mid = lo + (hi - lo) / 2;
    let last = hi - 1;
    // Sort the three probes in place; the median lands in the middle.
    if less(&v[mid], &v[lo]) {
        v.swap(mid, lo);
    }
    if less(&v[last], &v[mid]) {
        v.swap(last, mid);
        if less(&v[mid], &v[lo]) {
            v.swap(mid, lo);
        }
    }
    mid
}

/// Branchless Lomuto partition: one unconditional swap per element, the
/// store index advances by the comparison result. Returns the final pivot
/// position; everything before it is strictly less than the pivot.
fn partition<T, F: Fn(&T, &T) -> bool>(
    v: &mut [T],
    lo: usize,
    hi: usize,
    pivot: usize,
    less: &F,
) -> usize {
    let last = hi - 1;
    v.swap(pivot, last);
    let mut store = lo;
    for i in lo..last {
        let c = less(&v[i], &v[last]);
        v.swap(store, i);
        store += c as usize;
    }
    v.swap(store, last);
    store
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(mut v: Vec<u64>, k: usize) {
        let mut sorted = v.clone();
        sorted.sort_unstable();
        select_smallest(&mut v, k, &|a, b| a < b);
        let mut head: Vec<u64> = v[..k].to_vec();
        head.sort_unstable();
        assert_eq!(head, sorted[..k], "k={k}");
    }

    #[test]
    fn selects_the_k_smallest() {
        check(vec![5, 3, 9, 1, 7, 2, 8, 4, 6, 0], 4);
        check((0..100).rev().collect(), 37);
        check((0..100).collect(), 63);
        check(vec![2, 1], 1);
    }

    #[test]
    fn trivial_sizes() {
        check(vec![1], 0);
        check(vec![3, 1, 2], 3);
    }

    #[test]
    fn adversarial_patterns() {
        // organ pipe and sawtooth shapes, distinct keys via the index
        let organ: Vec<u64> = (0..500u64)
            .map(|i| if i < 250 { 2 * i } else { 2 * (499 - i) + 1 })
            .collect();
        check(organ, 123);
        let saw: Vec<u64> = (0..512u64).map(|i| (i % 16) * 512 + i).collect();
        check(saw, 300);
    }
}
