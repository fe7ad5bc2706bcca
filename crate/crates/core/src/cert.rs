use std::cmp::Ordering;

use crate::cmp::{check_exact_budget, cmp_value, ComparatorMode};
use crate::error::{Error, Result};
use crate::hist::{FreqTable, Histogram};
use crate::ticket::HeapTicket;

/// The improving transfer found when the certificate fails: moving one
/// unit from `decrement_symbol` to `increment_symbol` strictly raises Φ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub decrement_symbol: usize,
    pub increment_symbol: usize,
}

/// Result of the marginal-exchange test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateOutcome {
    pub ok: bool,
    pub witness: Option<ExchangeWitness>,
}

/// Tolerance absorbing f64 rounding of the two compared marginals in
/// `Float64` mode. Tied marginals that are equal as reals evaluate to the
/// same double and need no slack; this covers accidental near-coincidences
/// between unrelated (count, level) pairs at the optimum.
const FLOAT_CERT_SLACK: f64 = 16.0 * f64::EPSILON;

/// Marginal-exchange optimality test: a support-feasible table maximizes
/// Φ iff its cheapest decrement is at least its best increment
/// (`min_{m_a >= 2} Δ⁻_a(m_a) >= max_b Δ⁺_b(m_b)`, left side `+inf` when
/// no frequency exceeds 1).
///
/// On failure the returned witness names the violating pair. Errors if
/// the table is not support-feasible, or (in `Exact` mode) if the
/// instance exceeds the exact-comparison budget.
pub fn is_marginal_optimal(
    h: &Histogram,
    t: &FreqTable,
    mode: ComparatorMode,
) -> Result<CertificateOutcome> {
    if t.freqs().len() != h.len() {
        return Err(Error::LengthMismatch {
            got: t.freqs().len(),
            want: h.len(),
        });
    }
    if !t.is_support_feasible(h) {
        return Err(Error::InfeasibleTable(
            "certificate requires m >= 1 on support and 0 off support".into(),
        ));
    }
    if mode == ComparatorMode::Exact {
        check_exact_budget(h, t.target())?;
    }

    let mut min_dec: Option<HeapTicket> = None;
    let mut max_inc: Option<HeapTicket> = None;
    for &a in h.support() {
        let c = h.counts()[a];
        let m = t.freqs()[a];
        let inc = HeapTicket::increment_at(c, m, a);
        if max_inc.is_none_or(|best| cmp_value(mode, &inc, &best) == Ordering::Greater) {
            max_inc = Some(inc);
        }
        if m >= 2 {
            let dec = HeapTicket::decrement_at(c, m, a);
            if min_dec.is_none_or(|best| cmp_value(mode, &dec, &best) == Ordering::Less) {
                min_dec = Some(dec);
            }
        }
    }

    let max_inc = max_inc.expect("support is non-empty");
    let Some(min_dec) = min_dec else {
        // M = r: every frequency is 1, nothing can be decremented.
        return Ok(CertificateOutcome {
            ok: true,
            witness: None,
        });
    };

    let violated = match mode {
        ComparatorMode::Exact => cmp_value(mode, &min_dec, &max_inc) == Ordering::Less,
        ComparatorMode::Float64 => {
            let slack = FLOAT_CERT_SLACK * min_dec.value.abs().max(max_inc.value.abs());
            min_dec.value < max_inc.value - slack
        }
    };
    if violated {
        Ok(CertificateOutcome {
            ok: false,
            witness: Some(ExchangeWitness {
                decrement_symbol: min_dec.symbol,
                increment_symbol: max_inc.symbol,
            }),
        })
    } else {
        Ok(CertificateOutcome {
            ok: true,
            witness: None,
        })
    }
}
