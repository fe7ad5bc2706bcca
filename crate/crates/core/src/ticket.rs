use std::sync::LazyLock;

use crate::error::{Error, Result};

/// Direction of a one-unit move on a single coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TicketKind {
    /// Gain in Φ from raising a frequency from `j` to `j+1` (valid for `j >= 1`).
    Increment,
    /// Loss in Φ from lowering a frequency from `j` to `j-1` (valid for `j >= 2`).
    Decrement,
}

/// One marginal move: its symbol, level, kind, count, and value in nats.
///
/// The value is `c * ln((j+1)/j)` for an increment at level `j` and
/// `c * ln(j/(j-1))` for a decrement at level `j`, so a decrement at `j`
/// is worth exactly an increment at `j-1`. The count is carried so the
/// exact comparator can re-derive the value in integer arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ticket {
    pub symbol: usize,
    pub count: u64,
    pub level: u64,
    pub kind: TicketKind,
    pub value: f64,
}

impl Ticket {
    pub fn new(symbol: usize, count: u64, level: u64, kind: TicketKind) -> Result<Self> {
        let value = ticket_value(count, level, kind)?;
        Ok(Ticket {
            symbol,
            count,
            level,
            kind,
            value,
        })
    }

    /// The `k` with `value = count * ln(1 + 1/k)`.
    pub(crate) fn ratio_level(&self) -> u64 {
        match self.kind {
            TicketKind::Increment => self.level,
            TicketKind::Decrement => self.level - 1,
        }
    }
}

/// Marginal value of one unit move, in nats.
pub fn ticket_value(count: u64, level: u64, kind: TicketKind) -> Result<f64> {
    let k = match kind {
        TicketKind::Increment if level >= 1 => level,
        TicketKind::Decrement if level >= 2 => level - 1,
        _ => return Err(Error::BadTicketLevel(level)),
    };
    Ok(count as f64 * log_inv_ratio(k))
}

const LOG_TABLE_SIZE: usize = 4096;

static LOG_TABLE: LazyLock<Vec<f64>> = LazyLock::new(|| {
    (0..LOG_TABLE_SIZE)
        .map(|k| {
            if k == 0 {
                0.0
            } else {
                (1.0 / k as f64).ln_1p()
            }
        })
        .collect()
});

static LN_TABLE: LazyLock<Vec<f64>> = LazyLock::new(|| {
    (0..LOG_TABLE_SIZE)
        .map(|m| if m == 0 { 0.0 } else { (m as f64).ln() })
        .collect()
});

/// `ln(1 + 1/k)` for `k >= 1`, table-served for small `k`.
///
/// The table holds exactly the values `ln_1p` would produce, so every
/// caller sees one canonical f64 per `(count, k)` pair regardless of path.
pub(crate) fn log_inv_ratio(k: u64) -> f64 {
    debug_assert!(k >= 1);
    if (k as usize) < LOG_TABLE_SIZE {
        LOG_TABLE[k as usize]
    } else {
        (1.0 / k as f64).ln_1p()
    }
}

/// `ln(m)` for `m >= 1`, table-served for small `m`; 0 for `m = 0` so the
/// caller decides how to sentinel that case.
pub(crate) fn ln_u64(m: u64) -> f64 {
    if (m as usize) < LOG_TABLE_SIZE {
        LN_TABLE[m as usize]
    } else {
        (m as f64).ln()
    }
}

/// Marginal value keyed the way the algorithm heaps need it: the cached
/// f64 value plus the `(count, ratio)` pair that regenerates it exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct HeapTicket {
    pub value: f64,
    pub count: u64,
    /// `k` with `value = count * ln(1 + 1/k)`.
    pub ratio: u64,
    pub symbol: usize,
}

impl HeapTicket {
    /// The increment ticket available at current frequency `m >= 1`.
    pub(crate) fn increment_at(count: u64, m: u64, symbol: usize) -> Self {
        debug_assert!(m >= 1);
        HeapTicket {
            value: count as f64 * log_inv_ratio(m),
            count,
            ratio: m,
            symbol,
        }
    }

    /// The decrement ticket available at current frequency `m >= 2`.
    pub(crate) fn decrement_at(count: u64, m: u64, symbol: usize) -> Self {
        debug_assert!(m >= 2);
        HeapTicket {
            value: count as f64 * log_inv_ratio(m - 1),
            count,
            ratio: m - 1,
            symbol,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn increment_values() {
        assert!(
            (ticket_value(4, 1, TicketKind::Increment).unwrap() - 4.0 * 2f64.ln()).abs() < 1e-15
        );
        let hot = ticket_value(22, 7, TicketKind::Increment).unwrap();
        assert!((hot - 22.0 * (8.0f64 / 7.0).ln()).abs() < 1e-12);
        assert!((hot - 2.9377).abs() < 1e-3);
    }

    #[test]
    fn decrement_duality() {
        // Δ⁻(j+1) = Δ⁺(j), bit for bit.
        for c in [1u64, 4, 22, 1_000_000] {
            for j in [1u64, 2, 7, 4095, 4096, 1 << 20] {
                let inc = ticket_value(c, j, TicketKind::Increment).unwrap();
                let dec = ticket_value(c, j + 1, TicketKind::Decrement).unwrap();
                assert_eq!(inc, dec);
            }
        }
    }

    #[test]
    fn out_of_range_levels() {
        assert_eq!(
            ticket_value(4, 0, TicketKind::Increment),
            Err(Error::BadTicketLevel(0))
        );
        assert_eq!(
            ticket_value(4, 1, TicketKind::Decrement),
            Err(Error::BadTicketLevel(1))
        );
    }

    #[test]
    fn table_matches_direct_evaluation() {
        for k in [1u64, 2, 3, 1000, 4095] {
            assert_eq!(log_inv_ratio(k), (1.0 / k as f64).ln_1p());
        }
        for m in [1u64, 2, 4095, 4096, 1 << 30] {
            assert_eq!(ln_u64(m), (m as f64).ln());
        }
    }

    #[test]
    fn strictly_decreasing_in_level() {
        for c in [1u64, 50, 1_000_000] {
            let mut prev = f64::INFINITY;
            let mut j = 1u64;
            while j <= 1 << 20 {
                let v = ticket_value(c, j, TicketKind::Increment).unwrap();
                assert!(v < prev, "c={c} j={j}");
                prev = v;
                j = j.saturating_mul(7) / 2 + 1;
            }
        }
    }
}
