//! The deployed heuristics, re-implemented faithfully enough to reproduce
//! their documented failure modes.
//!
//! These are scored, never certified: each can return a table that fails
//! the marginal-exchange condition, and the redundancy sweeps measure by
//! how much. They all share the exact algorithms' `M >= r` gate and
//! always emit a feasible table (the Giesen zero-fixup included); the
//! pre-fixup artifact is returned separately where the failure mode lives
//! in it. Certificates on baseline outputs are evaluated in plain f64 —
//! the exact comparator is reserved for the algorithms that earn it.

mod bloom_onedir;
mod collet_ceiling;
mod fse;
mod giesen;

pub use bloom_onedir::bloom_one_direction;
pub use collet_ceiling::collet_ceiling;
pub use fse::{fse_fast, fse_normalize_m2, FseConfig, FseFastOutput};
pub use giesen::{giesen, GiesenOutput};
