//! The provably KL-optimal normalizers.
//!
//! All five drive the same marginal-ticket principle: a support-feasible
//! table maximizes `Φ = Σ c_a ln m_a` exactly when its cheapest decrement
//! is no cheaper than its best increment. They differ in where they start
//! and how many tickets they have to look at:
//!
//! - [`bottom_up`]: start at all-ones, add the `M - r` best increments
//!   through a max-heap. The archetype; `O(M log r)`.
//! - [`bloom_bidirectional`]: geometric-mean per-symbol rounding, a
//!   one-direction heap to restore the total, then a bidirectional
//!   exchange loop that repairs initializations that landed on the wrong
//!   side of the optimum.
//! - [`smart_collet`]: greedy minimum-decrement downgrades started at the
//!   upper side of the optimum window; `O(r log r)`.
//! - [`linear_window`]: materialize the at most `4r - 4` decrement
//!   tickets inside the window and select the `D` cheapest in expected
//!   linear time; `O(r)`.
//! - [`threshold_window`]: replace the ticket selection by an
//!   18-round bisection for the Lagrangian threshold, never
//!   materializing tickets; falls back to [`linear_window`] when the
//!   Padé-approximate inverse leaves too large a residual.

mod bloom_bidir;
mod bottom_up;
mod exchange;
mod linear_window;
mod select;
mod smart_collet;
mod threshold;
mod window;

pub use bloom_bidir::bloom_bidirectional;
pub use bottom_up::bottom_up;
pub use linear_window::linear_window;
pub use smart_collet::smart_collet;
pub use threshold::threshold_window;
pub use window::{window_bounds, Window};

pub(crate) use bloom_bidir::geometric_mean_init;

use crate::error::{Error, Result};
use crate::hist::Histogram;

/// Shared `M >= r` gate; every exact algorithm refuses smaller targets.
pub(crate) fn require_feasible_target(h: &Histogram, target: u64) -> Result<()> {
    if target < h.support_size() as u64 {
        return Err(Error::NoFiniteSolution {
            target,
            support: h.support_size(),
        });
    }
    Ok(())
}
