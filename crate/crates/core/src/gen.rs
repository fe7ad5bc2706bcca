//! Deterministic construction of test inputs: the seven parametric count
//! distributions used by the sweeps, byte-histogram ingestion, and seeded
//! random small instances for oracle testing.

use crate::error::{Error, Result};
use crate::hist::{build_histogram, Histogram};

/// Weight family of a synthetic histogram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistFamily {
    Uniform,
    Geometric { p: f64 },
    Zipf { s: f64 },
    Gaussian,
    SparseHeavy,
}

/// A synthetic histogram request: family, support size `r`, total `N`.
///
/// The output has exactly `r` positive counts summing exactly to `N`:
/// real-valued weights are scaled, floored, clamped to 1, and the
/// rounding residue is absorbed into the first symbol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistSpec {
    pub family: DistFamily,
    pub support: usize,
    pub total: u64,
}

/// The seven sweep families used by the redundancy reports, in order.
pub fn sweep_families() -> [(&'static str, DistFamily); 7] {
    [
        ("uniform", DistFamily::Uniform),
        ("geom0.7", DistFamily::Geometric { p: 0.7 }),
        ("geom0.95", DistFamily::Geometric { p: 0.95 }),
        ("zipf1.0", DistFamily::Zipf { s: 1.0 }),
        ("zipf1.5", DistFamily::Zipf { s: 1.5 }),
        ("gaussian", DistFamily::Gaussian),
        ("sparse", DistFamily::SparseHeavy),
    ]
}

/// Build the counts for `spec`. Errors when `N < r` (every symbol must
/// keep at least one count).
pub fn generate(spec: &DistSpec) -> Result<Histogram> {
    let r = spec.support;
    let n = spec.total;
    if r == 0 || n < r as u64 {
        return Err(Error::GenTooSmall {
            total: n,
            support: r,
        });
    }

    let counts = match spec.family {
        DistFamily::Uniform => {
            // Pure integer path: floor everywhere, residue on the first.
            let base = n / r as u64;
            let residue = n - base * r as u64;
            let mut counts = vec![base; r];
            counts[0] += residue;
            counts
        }
        DistFamily::Geometric { p } => {
            weights_to_counts((0..r).map(|a| p.powi(a as i32)).collect(), n)
        }
        DistFamily::Zipf { s } => {
            weights_to_counts((0..r).map(|a| ((a + 1) as f64).powf(-s)).collect(), n)
        }
        DistFamily::Gaussian => {
            let mu = (r as f64 - 1.0) / 2.0;
            let sigma = r as f64 / 6.0;
            weights_to_counts(
                (0..r)
                    .map(|a| (-0.5 * ((a as f64 - mu) / sigma).powi(2)).exp())
                    .collect(),
                n,
            )
        }
        DistFamily::SparseHeavy => {
            let hot = r.div_ceil(8);
            let cold = r - hot;
            let hot_weight = if cold == 0 {
                1.0 / hot as f64
            } else {
                0.9 / hot as f64
            };
            let mut w = vec![hot_weight; r];
            w[hot..].fill(0.1 / cold as f64);
            weights_to_counts(w, n)
        }
    };
    build_histogram(counts)
}

/// Scale positive weights so the symbols that survive the >= 1 clamp share
/// `N - (number of clamped symbols)` proportionally, floor them, and give
/// the residue to the first symbol. The clamp set is the fixed point of
/// "clamp everything whose share falls below one count", found on the
/// weight-sorted order, so the residue is always non-negative.
fn weights_to_counts(weights: Vec<f64>, n: u64) -> Vec<u64> {
    let r = weights.len();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&i, &j| weights[i].partial_cmp(&weights[j]).unwrap().then(i.cmp(&j)));

    // suffix[k] = sum of the r-k largest weights
    let mut suffix = vec![0.0f64; r + 1];
    for k in (0..r).rev() {
        suffix[k] = suffix[k + 1] + weights[order[k]];
    }

    let mut clamped = r; // number of clamped symbols; survivors are order[clamped..]
    for k in 0..r {
        let scale = (n - k as u64) as f64 / suffix[k];
        if weights[order[k]] * scale >= 1.0 {
            clamped = k;
            break;
        }
    }

    let mut counts = vec![0u64; r];
    let scale = (n - clamped as u64) as f64 / suffix[clamped];
    for &i in &order[..clamped] {
        counts[i] = 1;
    }
    for &i in &order[clamped..] {
        counts[i] = (weights[i] * scale).floor() as u64;
        debug_assert!(counts[i] >= 1);
    }
    let assigned: u64 = counts.iter().sum();
    counts[0] += n - assigned;
    counts
}

/// 256-slot histogram of the byte values in `data`.
pub fn byte_histogram(data: &[u8]) -> Result<Histogram> {
    if data.is_empty() {
        return Err(Error::EmptyStream);
    }
    let mut counts = vec![0u64; 256];
    for &b in data {
        counts[b as usize] += 1;
    }
    build_histogram(counts)
}

/// Deterministic random instance for oracle testing: support size in
/// `1..=max_r`, counts in `1..=max_count`, target in `r..=max_m`.
/// A pure function of the seed (splitmix64 underneath).
pub fn random_small_instance(
    seed: u64,
    max_r: usize,
    max_m: u64,
    max_count: u64,
) -> (Histogram, u64) {
    assert!(max_r >= 1 && max_count >= 1 && max_m >= max_r as u64);
    let mut state = seed;
    let mut next = move || splitmix64(&mut state);
    let r = 1 + (next() % max_r as u64) as usize;
    let counts: Vec<u64> = (0..r).map(|_| 1 + next() % max_count).collect();
    let target = r as u64 + next() % (max_m - r as u64 + 1);
    let h = build_histogram(counts).expect("counts are positive");
    (h, target)
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
