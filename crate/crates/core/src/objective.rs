use crate::hist::{FreqTable, Histogram};
use crate::sum::NeumaierSum;
use crate::ticket::ln_u64;

/// KL divergence `D(p || q)` in nats per source symbol, with `p = c/N` and
/// `q = m/M`.
///
/// Off-support terms follow the convention `0 * ln(0/q) = 0`. A zero
/// frequency on a positive-count symbol returns `+inf` rather than an
/// error so that pre-fixup baseline outputs can still be scored.
pub fn kl_divergence(h: &Histogram, t: &FreqTable) -> f64 {
    debug_assert_eq!(t.freqs().len(), h.len());
    let n = h.total();
    let target = t.target();
    let mut sum = NeumaierSum::new();
    for &a in h.support() {
        let c = h.counts()[a];
        let m = t.freqs()[a];
        if m == 0 {
            return f64::INFINITY;
        }
        // ln(c M / (N m)) as ln1p of an exactly cancelled integer ratio:
        // the two products agree to many digits near the optimum, so the
        // subtraction has to happen in integers, not floats.
        let delta = match (c as u128).checked_mul(target as u128) {
            Some(cm) => {
                let nm = n as u128 * m as u128;
                let num = cm as i128 - nm as i128;
                num as f64 / nm as f64
            }
            None => (c as f64 * target as f64) / (n as f64 * m as f64) - 1.0,
        };
        sum.add((c as f64 / n as f64) * delta.ln_1p());
    }
    sum.value()
}

/// The support-reduced objective `Φ(m) = Σ_{a in S} c_a ln(m_a)`, in nats.
///
/// Maximizing Φ at fixed histogram and target is equivalent to minimizing
/// [`kl_divergence`]. Returns `-inf` if any support symbol has frequency 0.
pub fn phi(h: &Histogram, t: &FreqTable) -> f64 {
    debug_assert_eq!(t.freqs().len(), h.len());
    phi_freqs(h, t.freqs())
}

/// Φ on a raw frequency slice; shared with the oracle's enumeration loop
/// so both sides evaluate identical f64 terms in identical order.
pub(crate) fn phi_freqs(h: &Histogram, freqs: &[u64]) -> f64 {
    let mut sum = NeumaierSum::new();
    for &a in h.support() {
        let m = freqs[a];
        if m == 0 {
            return f64::NEG_INFINITY;
        }
        sum.add(h.counts()[a] as f64 * ln_u64(m));
    }
    sum.value()
}
