use crate::error::{Error, Result};

/// Empirical counts `c`, their total `N`, and the positive support `S`.
///
/// The slot indexing of the input is preserved (zero slots included) so
/// that normalizer outputs align positionally with the caller's alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    counts: Vec<u64>,
    total: u64,
    support: Vec<usize>,
}

impl Histogram {
    /// Raw per-slot counts, aligned with the input.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `N`, the sum of all counts. Always positive.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Indices of the positive-count slots, ascending.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// `r`, the number of positive-count slots.
    pub fn support_size(&self) -> usize {
        self.support.len()
    }

    /// Number of alphabet slots (including zero-count ones).
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// Validate counts and assemble a [`Histogram`].
///
/// Errors on an all-zero input and on a total that overflows `u64`.
pub fn build_histogram(counts: impl Into<Vec<u64>>) -> Result<Histogram> {
    let counts = counts.into();
    let mut total: u64 = 0;
    let mut support = Vec::new();
    for (slot, &c) in counts.iter().enumerate() {
        if c > 0 {
            support.push(slot);
            total = total.checked_add(c).ok_or(Error::TotalOverflow)?;
        }
    }
    if support.is_empty() {
        return Err(Error::EmptyHistogram);
    }
    Ok(Histogram {
        counts,
        total,
        support,
    })
}

/// Integer frequencies `m` with target total `M`.
///
/// The constructor enforces `Σ m = M` only; support feasibility
/// (`m_a >= 1` wherever `c_a > 0`) is a property of the histogram the
/// table is scored against, checked by [`FreqTable::is_support_feasible`].
/// Pre-fixup baseline outputs legitimately violate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreqTable {
    freqs: Vec<u64>,
    target: u64,
}

impl FreqTable {
    pub fn new(freqs: Vec<u64>, target: u64) -> Result<Self> {
        let mut sum: u64 = 0;
        for &f in &freqs {
            sum = sum.checked_add(f).ok_or(Error::TotalOverflow)?;
        }
        if sum != target {
            return Err(Error::BadTableSum { sum, target });
        }
        Ok(FreqTable { freqs, target })
    }

    pub fn freqs(&self) -> &[u64] {
        &self.freqs
    }

    /// `M`, the fixed total every entry sums to.
    pub fn target(&self) -> u64 {
        self.target
    }

    /// True iff `m_a >= 1` on the support and `m_a = 0` off it.
    pub fn is_support_feasible(&self, h: &Histogram) -> bool {
        if self.freqs.len() != h.len() {
            return false;
        }
        self.freqs
            .iter()
            .zip(h.counts())
            .all(|(&m, &c)| (c > 0) == (m > 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_support_and_total() {
        let h = build_histogram(vec![1000, 1, 1]).unwrap();
        assert_eq!(h.total(), 1002);
        assert_eq!(h.support(), &[0, 1, 2]);
        assert_eq!(h.support_size(), 3);
    }

    #[test]
    fn zero_slots_are_kept_but_off_support() {
        let h = build_histogram(vec![0, 5, 0]).unwrap();
        assert_eq!(h.total(), 5);
        assert_eq!(h.support(), &[1]);
        assert_eq!(h.support_size(), 1);
        assert_eq!(h.len(), 3);
    }

    #[test]
    fn all_zero_is_an_error() {
        assert_eq!(build_histogram(vec![0, 0]), Err(Error::EmptyHistogram));
    }

    #[test]
    fn total_overflow_is_an_error() {
        assert_eq!(
            build_histogram(vec![u64::MAX, 2]),
            Err(Error::TotalOverflow)
        );
    }

    #[test]
    fn table_sum_is_enforced() {
        assert!(FreqTable::new(vec![3, 2], 5).is_ok());
        assert_eq!(
            FreqTable::new(vec![3, 2], 6),
            Err(Error::BadTableSum { sum: 5, target: 6 })
        );
    }

    #[test]
    fn support_feasibility() {
        let h = build_histogram(vec![1000, 1, 1]).unwrap();
        let ok = FreqTable::new(vec![254, 1, 1], 256).unwrap();
        let zero_on_support = FreqTable::new(vec![255, 0, 1], 256).unwrap();
        assert!(ok.is_support_feasible(&h));
        assert!(!zero_on_support.is_support_feasible(&h));

        let h2 = build_histogram(vec![0, 5]).unwrap();
        let off_support_mass = FreqTable::new(vec![1, 3], 4).unwrap();
        assert!(!off_support_mass.is_support_feasible(&h2));
    }
}
