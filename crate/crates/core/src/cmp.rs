use std::cmp::Ordering;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::hist::Histogram;
use crate::ticket::{HeapTicket, Ticket};

/// How ticket values are ordered inside the algorithms.
///
/// `Float64` compares the cached double-precision values. `Exact`
/// reproduces the true real ordering: it first tries a guaranteed
/// interval bound on the f64 evaluation and only falls back to
/// arbitrary-precision integer powers on near-ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComparatorMode {
    #[default]
    Float64,
    Exact,
}

/// Size limits for the arbitrary-precision comparison path.
///
/// `(j+1)^c` has roughly `c * log2(j)` bits; beyond these limits callers
/// must use [`ComparatorMode::Float64`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactBudget {
    pub max_count: u64,
    pub max_level: u64,
}

impl Default for ExactBudget {
    fn default() -> Self {
        ExactBudget {
            max_count: 1_000_000,
            max_level: 1 << 20,
        }
    }
}

/// Guaranteed bound on the relative error of `c as f64 * ln_1p(1/k)`:
/// one rounding each for `1/k`, `ln_1p`, and the multiply, with the
/// log's condition number at most 1 on this domain. 2^-50 is about
/// nine ulps of headroom.
const FLOAT_REL_ERR: f64 = 8.9e-16;

/// True ordering of two ticket values, resolving f64 near-ties with
/// arbitrary-precision integer power comparisons.
///
/// Errors with [`Error::ExactBudget`] if a near-tie falls outside the
/// default budget; comparisons the interval bound already decides do not
/// consume budget.
pub fn compare_tickets_exact(a: &Ticket, b: &Ticket) -> Result<Ordering> {
    cmp_values_exact(a.count, a.ratio_level(), b.count, b.ratio_level())
}

/// Exact ordering of `c1 * ln(1 + 1/k1)` vs `c2 * ln(1 + 1/k2)`.
pub(crate) fn cmp_values_exact(c1: u64, k1: u64, c2: u64, k2: u64) -> Result<Ordering> {
    debug_assert!(k1 >= 1 && k2 >= 1);
    if c1 == c2 && k1 == k2 {
        return Ok(Ordering::Equal);
    }
    // Same ratio: value scales linearly in the count.
    if k1 == k2 {
        return Ok(c1.cmp(&c2));
    }
    // Same count: ln(1 + 1/k) is strictly decreasing in k.
    if c1 == c2 {
        return Ok(k2.cmp(&k1));
    }

    let v1 = c1 as f64 * crate::ticket::log_inv_ratio(k1);
    let v2 = c2 as f64 * crate::ticket::log_inv_ratio(k2);
    let bound = FLOAT_REL_ERR * (v1.abs() + v2.abs());
    if (v1 - v2).abs() > bound {
        return Ok(v1.partial_cmp(&v2).expect("ticket values are finite"));
    }

    let budget = ExactBudget::default();
    if c1 > budget.max_count
        || c2 > budget.max_count
        || k1 > budget.max_level
        || k2 > budget.max_level
    {
        return Err(Error::ExactBudget {
            max_count: budget.max_count,
            max_level: budget.max_level,
        });
    }

    // c1*ln((k1+1)/k1) vs c2*ln((k2+1)/k2)  <=>  (k1+1)^c1 * k2^c2 vs k1^c1 * (k2+1)^c2.
    let c1_exp = u32::try_from(c1).expect("within budget");
    let c2_exp = u32::try_from(c2).expect("within budget");
    let lhs = BigUint::from(k1 + 1).pow(c1_exp) * BigUint::from(k2).pow(c2_exp);
    let rhs = BigUint::from(k1).pow(c1_exp) * BigUint::from(k2 + 1).pow(c2_exp);
    Ok(lhs.cmp(&rhs))
}

/// Check that every ticket an algorithm can form on this instance stays
/// inside the exact-comparison budget: counts bounded by the histogram,
/// ratio levels bounded by the largest frequency reachable (`target`).
pub(crate) fn check_exact_budget(h: &Histogram, target: u64) -> Result<()> {
    let budget = ExactBudget::default();
    let max_count = h
        .support()
        .iter()
        .map(|&a| h.counts()[a])
        .max()
        .unwrap_or(0);
    if max_count > budget.max_count || target > budget.max_level {
        return Err(Error::ExactBudget {
            max_count: budget.max_count,
            max_level: budget.max_level,
        });
    }
    Ok(())
}

/// Mode-aware ordering of two heap tickets by value alone.
///
/// Callers must have run [`check_exact_budget`] in `Exact` mode; the
/// interval shortcut then makes the in-loop comparison infallible.
pub(crate) fn cmp_value(mode: ComparatorMode, a: &HeapTicket, b: &HeapTicket) -> Ordering {
    match mode {
        ComparatorMode::Float64 => a.value.partial_cmp(&b.value).expect("finite ticket values"),
        ComparatorMode::Exact => cmp_values_exact(a.count, a.ratio, b.count, b.ratio)
            .expect("budget was checked at algorithm entry"),
    }
}

/// Priority predicate for min-heaps: `a` pops before `b` when its value is
/// smaller; ties break by ascending symbol, then ascending level.
pub(crate) fn min_pops_first(
    mode: ComparatorMode,
) -> impl Fn(&HeapTicket, &HeapTicket) -> bool + Copy {
    move |a, b| match cmp_value(mode, a, b) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => (a.symbol, a.ratio) < (b.symbol, b.ratio),
    }
}

/// Priority predicate for max-heaps: larger value pops first; ties break by
/// ascending symbol, then ascending level.
pub(crate) fn max_pops_first(
    mode: ComparatorMode,
) -> impl Fn(&HeapTicket, &HeapTicket) -> bool + Copy {
    move |a, b| match cmp_value(mode, a, b) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => (a.symbol, a.ratio) < (b.symbol, b.ratio),
    }
}
