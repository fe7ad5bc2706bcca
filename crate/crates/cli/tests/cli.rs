//! End-to-end checks of the command-line surface: output formats, exit
//! codes, file ingestion, and determinism of the reports.

use std::process::{Command, Output};

fn freqnorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freqnorm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn normalize_witness_plain_output() {
    let out = freqnorm(&[
        "normalize",
        "--algo",
        "linear_window",
        "--target",
        "16",
        "--counts",
        "22 4 4 4 4 4 4 4 4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("freqs:       8 1 1 1 1 1 1 1 1"), "{text}");
    assert!(text.contains("certificate: ok"), "{text}");
}

#[test]
fn normalize_json_round_trips_bit_exactly() {
    let args = [
        "normalize",
        "--algo",
        "threshold_window",
        "--target",
        "1024",
        "--mode",
        "exact",
        "--format",
        "json",
        "--counts",
        "3046 2582 4294 17 1 999",
    ];
    let first = freqnorm(&args);
    assert!(first.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    for key in [
        "algorithm",
        "M",
        "N",
        "r",
        "freqs",
        "phi",
        "kl_nats",
        "certificate_ok",
        "op_counts",
    ] {
        assert!(parsed.get(key).is_some(), "missing {key}");
    }
    let freqs: Vec<u64> = parsed["freqs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(freqs.iter().sum::<u64>(), 1024);
    assert_eq!(parsed["M"].as_u64(), Some(1024));
    assert_eq!(parsed["certificate_ok"].as_bool(), Some(true));

    // Same invocation, byte-identical report.
    let second = freqnorm(&args);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn infeasible_target_exits_one_with_message() {
    let out = freqnorm(&[
        "normalize",
        "--algo",
        "bottom_up",
        "--target",
        "2",
        "--counts",
        "1 1 1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("no finite-KL solution"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn usage_errors_exit_one() {
    let out = freqnorm(&["normalize", "--algo", "definitely_not_an_algorithm"]);
    assert_eq!(out.status.code(), Some(1));
    let out = freqnorm(&["normalize", "--target", "16"]);
    assert_eq!(out.status.code(), Some(1)); // no input source
    let out = freqnorm(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gen_uniform_golden_and_round_trip() {
    let out = freqnorm(&["gen", "--dist", "uniform", "--r", "4", "--N", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4 2 2 2");

    let out = freqnorm(&[
        "gen", "--dist", "zipf", "--s", "1.0", "--r", "256", "--N", "1000000",
    ]);
    let counts: Vec<u64> = stdout(&out)
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    assert_eq!(counts.len(), 256);
    assert_eq!(counts.iter().sum::<u64>(), 1_000_000);
    assert!(counts.iter().all(|&c| c >= 1));

    let infeasible = freqnorm(&[
        "gen",
        "--dist",
        "geometric",
        "--p",
        "0.7",
        "--r",
        "64",
        "--N",
        "63",
    ]);
    assert_eq!(infeasible.status.code(), Some(1));
}

#[test]
fn gen_output_round_trips_through_normalize() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("freqnorm_gen_{}.txt", std::process::id()));
    let out = freqnorm(&[
        "gen",
        "--dist",
        "sparse_heavy",
        "--r",
        "8",
        "--N",
        "1000",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap().trim(),
        "902 14 14 14 14 14 14 14"
    );

    let out = freqnorm(&[
        "normalize",
        "--algo",
        "smart_collet",
        "--target",
        "64",
        "--format",
        "json",
        "--counts-file",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["N"].as_u64(), Some(1000));
    assert_eq!(parsed["r"].as_u64(), Some(8));
    assert_eq!(parsed["certificate_ok"].as_bool(), Some(true));
    std::fs::remove_file(&path).ok();
}

#[test]
fn counts_files_and_byte_files_are_ingested() {
    let dir = std::env::temp_dir();
    let counts_path = dir.join(format!("freqnorm_counts_{}.txt", std::process::id()));
    let bytes_path = dir.join(format!("freqnorm_bytes_{}.bin", std::process::id()));
    std::fs::write(&counts_path, "1000 1 1\n").unwrap();
    std::fs::write(&bytes_path, b"aab").unwrap();

    let out = freqnorm(&[
        "normalize",
        "--algo",
        "giesen",
        "--target",
        "256",
        "--format",
        "json",
        "--counts-file",
        counts_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["freqs"][0].as_u64(), Some(254));

    let out = freqnorm(&[
        "normalize",
        "--algo",
        "bottom_up",
        "--target",
        "8",
        "--format",
        "json",
        "--bytes-file",
        bytes_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["N"].as_u64(), Some(3));
    assert_eq!(parsed["r"].as_u64(), Some(2));
    let freqs = parsed["freqs"].as_array().unwrap();
    assert_eq!(freqs.len(), 256);
    assert_eq!(freqs[b'a' as usize].as_u64(), Some(5));
    assert_eq!(freqs[b'b' as usize].as_u64(), Some(3));

    std::fs::remove_file(&counts_path).ok();
    std::fs::remove_file(&bytes_path).ok();
}

#[test]
fn validate_passes_and_exits_zero() {
    let out = freqnorm(&["validate", "--cases", "50"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("check PASS").count(), 5, "{text}");
}

#[test]
fn redundancy_witness_rows_match_the_known_gaps() {
    let out = freqnorm(&["redundancy", "--witness"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "instance,giesen,bloom_onedir,fse_fast,collet_ceiling,optimum_kl_nats"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    let bloom_gap: f64 = rows[0][2].parse().unwrap();
    assert!((bloom_gap - 2.6e-5).abs() <= 0.05 * 2.6e-5, "{bloom_gap}");
    let fse_gap: f64 = rows[1][3].parse().unwrap();
    assert!((fse_gap - 9.5e-3).abs() <= 0.05 * 9.5e-3, "{fse_gap}");
    // Determinism across runs.
    let again = freqnorm(&["redundancy", "--witness"]);
    assert_eq!(text, stdout(&again));
}

#[test]
fn bench_emits_the_documented_csv_schema() {
    let out = freqnorm(&[
        "bench",
        "--algos",
        "linear_window",
        "--dists",
        "uniform",
        "--r-list",
        "64",
        "--repeats",
        "2",
        "--warmups",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "dist,r,N,M,algorithm,best_ns,ns_per_symbol,op_counts"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row.len(), 8);
    assert_eq!(row[4], "linear_window");
    assert!(row[7].contains("tickets_emitted="));
}

#[test]
fn bits_flag_rescales_the_display() {
    let nats = freqnorm(&[
        "normalize",
        "--algo",
        "giesen",
        "--target",
        "16",
        "--counts",
        "22 4 4 4 4 4 4 4 4",
    ]);
    let bits = freqnorm(&[
        "normalize",
        "--algo",
        "giesen",
        "--target",
        "16",
        "--counts",
        "22 4 4 4 4 4 4 4 4",
        "--bits",
    ]);
    let pick = |text: &str| -> f64 {
        text.lines()
            .find(|l| l.starts_with("kl:"))
            .unwrap()
            .split_whitespace()
            .nth(1)
            .unwrap()
            .parse()
            .unwrap()
    };
    let kl_nats = pick(&stdout(&nats));
    let kl_bits = pick(&stdout(&bits));
    assert!(stdout(&bits).contains("bits/symbol"));
    // Both values pass through 12-digit display formatting.
    assert!((kl_bits * std::f64::consts::LN_2 - kl_nats).abs() < 1e-12);
}
