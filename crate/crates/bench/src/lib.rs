//! Shared instance construction for the criterion benchmarks.

use freqnorm::gen::{generate, DistFamily, DistSpec};
use freqnorm::Histogram;

/// The two contrasting shapes the benchmarks sweep: flat (geometric-mean
/// initialization lands on the optimum, heaps idle) and heavy-tailed
/// (initialization drifts, correction work grows with skew).
pub fn bench_families() -> [(&'static str, DistFamily); 2] {
    [
        ("uniform", DistFamily::Uniform),
        ("geom0.95", DistFamily::Geometric { p: 0.95 }),
    ]
}

pub fn instance(family: DistFamily, support: usize, total: u64) -> Histogram {
    generate(&DistSpec {
        family,
        support,
        total,
    })
    .expect("benchmark instances are feasible")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_well_formed() {
        for (_, family) in bench_families() {
            let h = instance(family, 256, 1_000_000);
            assert_eq!(h.support_size(), 256);
            assert_eq!(h.total(), 1_000_000);
        }
    }
}
