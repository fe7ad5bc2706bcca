//! Integer frequency normalization for range coders and ANS.
//!
//! Entropy coders replace empirical symbol counts `c` (total `N`) with
//! integer frequencies `m` summing to a fixed target `M`; the coding
//! redundancy of that replacement is exactly the KL divergence of the
//! empirical distribution from the quantized one. This crate provides:
//!
//! - [`exact`]: five normalizers that provably minimize the KL divergence
//!   (bottom-up greedy, bidirectional Bloom repair, linear top-down window,
//!   smart-envelope Collet, and a ticket-free Lagrangian threshold variant);
//! - [`baselines`]: faithful re-implementations of four deployed heuristics
//!   (Giesen cumulative rescaling, Bloom one-direction rounding, the FSE
//!   fast pass with its `normalizeM2` fallback, and ceiling-envelope
//!   Collet), preserving their documented failure modes so the redundancy
//!   gap can be measured;
//! - [`oracle`]: exhaustive maximization of the equivalent objective
//!   `Φ(m) = Σ c_a ln m_a` on small instances, used as ground truth;
//! - [`gen`]: deterministic construction of the synthetic test
//!   distributions, byte-histogram ingestion, and seeded random instances.
//!
//! All divergences are reported in nats. Everything is a pure function of
//! its inputs and safe to call concurrently.

mod cert;
mod cmp;
mod error;
mod heap;
mod hist;
mod objective;
mod report;
mod sum;
mod ticket;

pub mod baselines;
pub mod exact;
pub mod gen;
pub mod oracle;

pub use cert::{is_marginal_optimal, CertificateOutcome, ExchangeWitness};
pub use cmp::{compare_tickets_exact, ComparatorMode, ExactBudget};
pub use error::{Error, Result};
pub use hist::{build_histogram, FreqTable, Histogram};
pub use objective::{kl_divergence, phi};
pub use report::{NormReport, OpCounts};
pub use ticket::{ticket_value, Ticket, TicketKind};
