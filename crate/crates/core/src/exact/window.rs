use crate::error::{Error, Result};
use crate::exact::require_feasible_target;
use crate::hist::Histogram;

/// Per-symbol integer bounds `[L_a, U_a]` bracketing every KL optimum:
///
/// ```text
/// L_a = max(1, ceil(s_a - p_a (r-2) - 1))
/// U_a = floor(s_a + p_a (r-2) + 1)
/// ```
///
/// with `s_a = M c_a / N` and `p_a = c_a / N`. The total width satisfies
/// `Σ (U_a - L_a) <= 4r - 4`, so the deficit `D = Σ U_a - M` is `O(r)`.
/// Both sequences are support-indexed (entry `i` belongs to
/// `histogram.support()[i]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    lower: Vec<u64>,
    upper: Vec<u64>,
    deficit: u64,
}

impl Window {
    pub fn lower(&self) -> &[u64] {
        &self.lower
    }

    pub fn upper(&self) -> &[u64] {
        &self.upper
    }

    /// `D = Σ U_a - M`, the number of decrements a top-down method applies.
    pub fn deficit(&self) -> u64 {
        self.deficit
    }

    /// `Σ (U_a - L_a)`, the number of tickets the window can emit.
    pub fn total_width(&self) -> u64 {
        self.upper.iter().zip(&self.lower).map(|(u, l)| u - l).sum()
    }
}

/// Compute the optimum window. The bounds come out of the exact integer
/// forms `ceil((c(M-r+2) - N) / N)` and `floor((c(M+r-2) + N) / N)` in
/// 128-bit intermediates; no floating point is involved.
pub fn window_bounds(h: &Histogram, target: u64) -> Result<Window> {
    require_feasible_target(h, target)?;
    let r = h.support_size() as u64;
    let n = h.total() as u128;
    // M >= r >= 1 keeps both factors non-negative.
    let low_factor = (target - r + 2) as u128;
    let high_factor = (target + r - 2) as u128;

    let mut lower = Vec::with_capacity(h.support_size());
    let mut upper = Vec::with_capacity(h.support_size());
    let mut upper_sum: u128 = 0;
    for &a in h.support() {
        let c = h.counts()[a] as u128;
        let low_prod = c.checked_mul(low_factor).ok_or(Error::ArithmeticOverflow)?;
        let l = if low_prod <= n {
            1u64
        } else {
            // ceil((low_prod - n) / n), clamped to >= 1
            let num = low_prod - n;
            u64::try_from(num.div_ceil(n))
                .map_err(|_| Error::ArithmeticOverflow)?
                .max(1)
        };
        let high_prod = c
            .checked_mul(high_factor)
            .and_then(|p| p.checked_add(n))
            .ok_or(Error::ArithmeticOverflow)?;
        let u = u64::try_from(high_prod / n).map_err(|_| Error::ArithmeticOverflow)?;
        debug_assert!(l <= u);
        upper_sum += u as u128;
        lower.push(l);
        upper.push(u);
    }

    let deficit =
        u64::try_from(upper_sum - target as u128).map_err(|_| Error::ArithmeticOverflow)?;
    Ok(Window {
        lower,
        upper,
        deficit,
    })
}
