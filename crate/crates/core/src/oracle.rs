//! Independent ground truth: exhaustive maximization of Φ over every
//! support-feasible table of a small instance.

use crate::error::{Error, Result};
use crate::hist::{FreqTable, Histogram};
use crate::objective::phi_freqs;

/// Default cap on the number of enumerated tables.
pub const DEFAULT_LIMIT: u128 = 10_000_000;

/// Tables within this much of the maximum Φ count as optima, matching the
/// cross-implementation agreement tolerance used everywhere else.
pub const PHI_TIE_TOLERANCE: f64 = 1e-12;

/// Everything the exhaustive search learned.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub best_phi: f64,
    /// Every support-feasible table within [`PHI_TIE_TOLERANCE`] of the max.
    pub optima: Vec<FreqTable>,
    /// Number of feasible tables visited.
    pub enumerated: u64,
}

impl OracleResult {
    /// True iff `freqs` is one of the recorded optima.
    pub fn contains(&self, freqs: &[u64]) -> bool {
        self.optima.iter().any(|t| t.freqs() == freqs)
    }
}

/// Enumerate all `C(M-1, r-1)` compositions of `M` into `r` positive
/// parts on the support (zeros off support) and return every Φ-maximizer.
///
/// Errors if `M < r` or if the composition count exceeds `limit`.
pub fn brute_force_optimum(h: &Histogram, target: u64, limit: u128) -> Result<OracleResult> {
    let r = h.support_size();
    if target < r as u64 {
        return Err(Error::NoFiniteSolution { target, support: r });
    }
    let compositions = binomial_capped(target - 1, r as u64 - 1, limit);
    if compositions > limit {
        return Err(Error::OracleTooLarge {
            compositions,
            limit,
        });
    }

    // Nonnegative compositions of R = M - r into r parts, +1 on the fly.
    let surplus = target - r as u64;
    let mut extra = vec![0u64; r];
    extra[0] = surplus;

    let mut freqs = vec![0u64; h.len()];
    for (i, &a) in h.support().iter().enumerate() {
        freqs[a] = extra[i] + 1;
    }

    let mut best_phi = f64::NEG_INFINITY;
    let mut optima: Vec<(f64, Vec<u64>)> = Vec::new();
    let mut enumerated = 0u64;
    loop {
        enumerated += 1;
        let value = phi_freqs(h, &freqs);
        if value > best_phi {
            best_phi = value;
        }
        if value >= best_phi - PHI_TIE_TOLERANCE {
            optima.push((value, freqs.clone()));
            // Cheap prune so ties don't accumulate across improvements.
            if optima.len() > 64 {
                optima.retain(|(p, _)| *p >= best_phi - PHI_TIE_TOLERANCE);
            }
        }

        // Next composition (Nijenhuis-Wilf): zero the leftmost positive
        // entry into position 0 minus one unit, carry that unit right.
        if r == 1 || extra[r - 1] == surplus {
            break;
        }
        let head = extra.iter().position(|&x| x > 0).expect("surplus > 0");
        let val = extra[head];
        extra[head] = 0;
        extra[0] = val - 1;
        extra[head + 1] += 1;
        for i in [0, head, head + 1] {
            let a = h.support()[i];
            freqs[a] = extra[i] + 1;
        }
    }

    let optima = optima
        .into_iter()
        .filter(|(p, _)| *p >= best_phi - PHI_TIE_TOLERANCE)
        .map(|(_, f)| FreqTable::new(f, target).expect("compositions sum to target"))
        .collect();
    Ok(OracleResult {
        best_phi,
        optima,
        enumerated,
    })
}

/// `C(n, k)` capped: returns a value larger than `limit` once the running
/// product (monotone along this diagonal) passes it.
fn binomial_capped(n: u64, k: u64, limit: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = match acc.checked_mul((n - k + i) as u128) {
            Some(v) => v / i as u128,
            None => return limit + 1,
        };
        if acc > limit {
            return limit + 1;
        }
    }
    acc
}
