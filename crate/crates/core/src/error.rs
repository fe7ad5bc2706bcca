use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// No symbol has a positive count.
    #[error("empty histogram")]
    EmptyHistogram,

    /// The count total does not fit in 64 bits.
    #[error("histogram total overflows u64")]
    TotalOverflow,

    /// `M < r`: there is no support-feasible table, hence no finite KL.
    #[error("no finite-KL solution: target {target} < support size {support}")]
    NoFiniteSolution { target: u64, support: usize },

    /// A frequency table whose entries do not sum to its target.
    #[error("table sums to {sum}, target is {target}")]
    BadTableSum { sum: u64, target: u64 },

    /// A frequency table of the wrong length for the histogram.
    #[error("table has {got} slots, histogram has {want}")]
    LengthMismatch { got: usize, want: usize },

    /// A table that violates support feasibility where the operation
    /// requires it (zero on support, or mass off support).
    #[error("infeasible table: {0}")]
    InfeasibleTable(String),

    /// Exact ticket comparison outside the arbitrary-precision budget.
    #[error("exact comparison out of budget (count <= {max_count}, level <= {max_level})")]
    ExactBudget { max_count: u64, max_level: u64 },

    /// A ticket level outside the domain of its kind.
    #[error("ticket level {0} out of range for kind")]
    BadTicketLevel(u64),

    /// The FSE baselines require a power-of-two target.
    #[error("target must be a power of two for this baseline, got {0}")]
    NotPowerOfTwo(u64),

    /// The FSE fallback deducted everything and has nothing left to assign.
    #[error("fallback infeasible: residual target or residual mass is empty")]
    FallbackInfeasible,

    /// Oracle enumeration would visit more tables than the caller allows.
    #[error("instance too large for oracle: {compositions} compositions exceeds limit {limit}")]
    OracleTooLarge { compositions: u128, limit: u128 },

    /// Generator invoked with fewer counts than support slots.
    #[error("generator needs total >= support, got total={total}, support={support}")]
    GenTooSmall { total: u64, support: usize },

    /// Byte ingestion of an empty stream.
    #[error("empty byte stream")]
    EmptyStream,

    /// A 128-bit intermediate product overflowed.
    #[error("128-bit intermediate overflow")]
    ArithmeticOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;
