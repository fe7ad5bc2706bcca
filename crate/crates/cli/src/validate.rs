use anyhow::Result;
use clap::Args;

use freqnorm::baselines::{bloom_one_direction, collet_ceiling, fse_fast, giesen, FseConfig};
use freqnorm::exact::window_bounds;
use freqnorm::gen::{generate, random_small_instance, sweep_families, DistSpec};
use freqnorm::oracle::{brute_force_optimum, DEFAULT_LIMIT};
use freqnorm::{build_histogram, is_marginal_optimal, ComparatorMode, Histogram};

use crate::report::run_algorithm;
use crate::AlgoName;

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// Seed for the random small-instance family.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of random small instances for the oracle checks.
    #[arg(long, default_value_t = 1000)]
    cases: u64,
}

const EXACT: [AlgoName; 5] = [
    AlgoName::BottomUp,
    AlgoName::BloomBidir,
    AlgoName::LinearWindow,
    AlgoName::SmartCollet,
    AlgoName::ThresholdWindow,
];

fn witnesses() -> Vec<(Vec<u64>, u64)> {
    vec![
        (vec![1000, 1, 1], 256),
        (vec![3, 2], 256),
        (vec![3046, 2582, 4294], 8),
        (vec![8, 114, 8], 23),
        (vec![22, 4, 4, 4, 4, 4, 4, 4, 4], 16),
        (vec![10, 3, 3], 8),
    ]
}

struct Check {
    name: &'static str,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self) -> bool {
        if self.failures.is_empty() {
            println!("check PASS: {}", self.name);
            true
        } else {
            println!(
                "check FAIL: {} ({} failures)",
                self.name,
                self.failures.len()
            );
            for f in self.failures.iter().take(10) {
                println!("  - {f}");
            }
            false
        }
    }
}

fn matches_up_to_tied_permutation(h: &Histogram, got: &[u64], want: &[u64]) -> bool {
    let mut by_count: std::collections::BTreeMap<u64, (Vec<u64>, Vec<u64>)> = Default::default();
    for &a in h.support() {
        let entry = by_count.entry(h.counts()[a]).or_default();
        entry.0.push(got[a]);
        entry.1.push(want[a]);
    }
    by_count.into_values().all(|(mut g, mut w)| {
        g.sort_unstable();
        w.sort_unstable();
        g == w
    })
}

pub fn run(args: ValidateArgs) -> Result<i32> {
    let mut all_ok = true;

    // Check 1: the six witnesses, against all ten algorithms.
    let mut check = Check::new("six-witness suite (all algorithms)");
    for (counts, target) in witnesses() {
        let h = build_histogram(counts.clone())?;
        let oracle = brute_force_optimum(&h, target, DEFAULT_LIMIT)?;
        let opt_kl = freqnorm::kl_divergence(&h, &oracle.optima[0]);
        for algo in EXACT {
            let report = run_algorithm(algo, &h, target, ComparatorMode::Float64)?;
            check.expect((report.phi - oracle.best_phi).abs() <= 1e-12, || {
                format!(
                    "{} phi {} vs oracle {} on {:?}/{}",
                    algo.as_str(),
                    report.phi,
                    oracle.best_phi,
                    counts,
                    target
                )
            });
        }
        // Heuristics must stay feasible everywhere (the FSE pair only
        // accepts power-of-two targets, which skips one witness).
        let mut heuristics = vec![
            AlgoName::Giesen,
            AlgoName::BloomOnedir,
            AlgoName::ColletCeiling,
        ];
        if target.is_power_of_two() {
            heuristics.extend([AlgoName::FseFast, AlgoName::FseM2]);
        }
        for algo in heuristics {
            let report = run_algorithm(algo, &h, target, ComparatorMode::Float64)?;
            check.expect(report.table.is_support_feasible(&h), || {
                format!("{} infeasible on {:?}/{}", algo.as_str(), counts, target)
            });
            check.expect(report.kl >= opt_kl - 1e-12, || {
                format!("{} beats the optimum on {:?}/{}", algo.as_str(), counts, target)
            });
        }
    }
    {
        let h = build_histogram(vec![1000u64, 1, 1])?;
        let out = giesen(&h, 256)?;
        check.expect(out.pre_fixup.freqs() == [255, 0, 1], || {
            format!("giesen pre-fixup {:?}", out.pre_fixup.freqs())
        });
        check.expect(out.report.table.freqs() == [254, 1, 1], || {
            format!("giesen post-fixup {:?}", out.report.table.freqs())
        });

        let h = build_histogram(vec![3u64, 2])?;
        let out = giesen(&h, 256)?;
        check.expect(out.report.table.freqs() == [153, 103], || {
            format!("giesen {:?}", out.report.table.freqs())
        });

        let h = build_histogram(vec![3046u64, 2582, 4294])?;
        let out = bloom_one_direction(&h, 8)?;
        check.expect(out.table.freqs() == [3, 2, 3], || {
            format!("bloom_onedir {:?}", out.table.freqs())
        });

        let h = build_histogram(vec![8u64, 114, 8])?;
        let out = bloom_one_direction(&h, 23)?;
        check.expect(out.table.freqs() == [1, 20, 2], || {
            format!("bloom_onedir {:?}", out.table.freqs())
        });

        let h = build_histogram(vec![22u64, 4, 4, 4, 4, 4, 4, 4, 4])?;
        let out = collet_ceiling(&h, 16)?;
        check.expect(
            matches_up_to_tied_permutation(&h, out.table.freqs(), &[7, 2, 1, 1, 1, 1, 1, 1, 1]),
            || format!("collet_ceiling {:?}", out.table.freqs()),
        );

        let h = build_histogram(vec![10u64, 3, 3])?;
        let cfg = FseConfig::new(&h, 8)?;
        let out = fse_fast(&h, 8, &cfg)?;
        check.expect(
            out.report.table.freqs() == [4, 2, 2] && !out.fallback_taken,
            || format!("fse_fast {:?}", out.report.table.freqs()),
        );
    }
    all_ok &= check.finish();

    // The mini sweep shared by checks 2 and 3.
    let mut sweep: Vec<(String, Histogram, u64)> = Vec::new();
    for (counts, target) in witnesses() {
        let h = build_histogram(counts.clone())?;
        sweep.push((format!("witness {counts:?}/{target}"), h, target));
    }
    for (label, family) in sweep_families() {
        for r in [64usize, 256] {
            let h = generate(&DistSpec {
                family,
                support: r,
                total: 1_000_000,
            })?;
            sweep.push((format!("{label} r={r}"), h, 1 << 14));
        }
    }

    // Check 2: every exact output passes the certificate, independently
    // re-checked with the exact comparator where the budget allows.
    let mut check = Check::new("marginal-exchange certificate on every exact output");
    for (label, h, target) in &sweep {
        for algo in EXACT {
            let report = run_algorithm(algo, h, *target, ComparatorMode::Float64)?;
            check.expect(report.certificate_ok, || {
                format!("{} on {label}", algo.as_str())
            });
            if let Ok(cert) = is_marginal_optimal(h, &report.table, ComparatorMode::Exact) {
                check.expect(cert.ok, || {
                    format!("{} exact-mode certificate on {label}", algo.as_str())
                });
            }
        }
    }
    all_ok &= check.finish();

    // Check 3: ten-way KL agreement among the exact algorithms.
    let mut check = Check::new("pairwise KL agreement of the exact algorithms (1e-12 relative)");
    for (label, h, target) in &sweep {
        let reports: Vec<_> = EXACT
            .iter()
            .map(|&algo| {
                run_algorithm(algo, h, *target, ComparatorMode::Float64).map(|r| (algo, r))
            })
            .collect::<freqnorm::Result<_>>()?;
        for (a, ra) in &reports {
            for (b, rb) in &reports {
                let tolerance = 1e-12 * ra.kl.abs().max(rb.kl.abs());
                check.expect((ra.kl - rb.kl).abs() <= tolerance, || {
                    format!(
                        "{} kl={} vs {} kl={} on {label}",
                        a.as_str(),
                        ra.kl,
                        b.as_str(),
                        rb.kl
                    )
                });
            }
        }
    }
    all_ok &= check.finish();

    // Check 4: oracle equivalence on seeded random small instances.
    let mut check = Check::new("oracle equivalence on random small instances");
    let mut instances = Vec::with_capacity(args.cases as usize);
    for i in 0..args.cases {
        instances.push(random_small_instance(args.seed.wrapping_add(i), 6, 24, 50));
    }
    for (h, target) in &instances {
        let oracle = brute_force_optimum(h, *target, DEFAULT_LIMIT)?;
        for algo in EXACT {
            let report = run_algorithm(algo, h, *target, ComparatorMode::Float64)?;
            check.expect((report.phi - oracle.best_phi).abs() <= 1e-12, || {
                format!(
                    "{} phi {} vs oracle {} on {:?}/{}",
                    algo.as_str(),
                    report.phi,
                    oracle.best_phi,
                    h.counts(),
                    target
                )
            });
        }
    }
    all_ok &= check.finish();

    // Check 5: optimum window contains every oracle optimum, and its
    // total width respects the 4r - 4 bound.
    let mut check = Check::new("window containment and width bound");
    for (h, target) in &instances {
        let window = window_bounds(h, *target)?;
        let r = h.support_size() as u64;
        check.expect(r == 1 || window.total_width() <= 4 * r - 4, || {
            format!(
                "width {} on {:?}/{}",
                window.total_width(),
                h.counts(),
                target
            )
        });
        let oracle = brute_force_optimum(h, *target, DEFAULT_LIMIT)?;
        for table in &oracle.optima {
            for (i, &a) in h.support().iter().enumerate() {
                let m = table.freqs()[a];
                check.expect(window.lower()[i] <= m && m <= window.upper()[i], || {
                    format!(
                        "optimum {:?} outside window on {:?}/{}",
                        table.freqs(),
                        h.counts(),
                        target
                    )
                });
            }
        }
    }
    all_ok &= check.finish();

    if all_ok {
        println!("validate: all checks passed");
        Ok(0)
    } else {
        println!("validate: FAILURES (see above)");
        Ok(2)
    }
}
