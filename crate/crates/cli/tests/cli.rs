use std::fs;
use std::path::PathBuf;
use std::process::Command;

use randext_cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("randext").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("randext-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

/// Data rows of a CSV table, skipping metadata and the header.
fn rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn pdf_table_example() {
    let (code, out, _) = run(&[
        "pdf", "--model", "sug-max", "--theta", "0.5", "--grid", "0:1:0.25",
    ]);
    assert_eq!(code, 0);
    let r = rows(&out);
    assert_eq!(r.len(), 5);
    assert_eq!(r[2][0], 0.5);
    assert!((r[2][1] - 0.888_889).abs() < 1e-6);
    assert!(out.contains("# model: sug-max theta=0.5\n"));
    assert_eq!(out.lines().find(|l| !l.starts_with('#')), Some("x,pdf"));
}

#[test]
fn cdf_table_ends_at_zero_and_one() {
    let (code, out, _) = run(&[
        "cdf",
        "--model",
        "geom-tl-min",
        "--theta",
        "0.3",
        "--a",
        "0.5",
    ]);
    assert_eq!(code, 0);
    let r = rows(&out);
    assert_eq!(r.len(), 101);
    assert_eq!(r[0][1], 0.0);
    assert!((r[100][1] - 1.0).abs() < 1e-12);
    assert!(r.windows(2).all(|w| w[1][1] >= w[0][1]));
}

#[test]
fn estimate_example() {
    let data = temp_file("data.csv", "0.2,0.4,0.35\n");
    let (code, out, err) = run(&[
        "estimate",
        "--model",
        "csug-max",
        "--method",
        "mle",
        "--input",
        data.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["theta_hat"], 0.6);
    assert_eq!(v["method"], "closed-form-mle");
}

#[test]
fn estimate_by_moments_and_numeric_mle() {
    let (_, out, _) = run(&[
        "sample", "--model", "sug-min", "--theta", "0.5", "--n", "20000", "--seed", "4",
    ]);
    let path = temp_file("sug-min.csv", &out);
    for method in ["mle", "moment"] {
        let (code, out, err) = run(&[
            "estimate",
            "--model",
            "sug-min",
            "--method",
            method,
            "--input",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{err}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let t = v["theta_hat"].as_f64().unwrap();
        assert!((t - 0.5).abs() < 0.05, "{method}: {t}");
    }
}

#[test]
fn sampling_is_deterministic_through_the_binary() {
    let bin = env!("CARGO_BIN_EXE_randext");
    let args = [
        "sample",
        "--model",
        "uniform-poisson-min",
        "--lambda",
        "1",
        "--n",
        "1000",
        "--seed",
        "42",
    ];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let mut other = args;
    other[8] = "43";
    let c = Command::new(bin).args(other).output().unwrap();
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn sample_round_trip_through_estimate() {
    let (code, out, _) = run(&[
        "sample", "--model", "csug-max", "--theta", "0.3", "--n", "10000", "--seed", "1",
    ]);
    assert_eq!(code, 0);
    let path = temp_file("csug.csv", &out);
    let (code, out, _) = run(&[
        "estimate",
        "--model",
        "csug-max",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let t = v["theta_hat"].as_f64().unwrap();
    assert!(t >= 0.3 && t - 0.3 < 0.01, "{t}");
}

#[test]
fn csv_values_round_trip_exactly() {
    let (_, out, _) = run(&[
        "sample",
        "--model",
        "zipf-uniform-max",
        "--n",
        "500",
        "--seed",
        "7",
    ]);
    for line in out.lines().filter(|l| !l.starts_with('#')).skip(1) {
        let v: f64 = line.parse().unwrap();
        assert_eq!(format!("{v:.16e}"), line);
    }
}

#[test]
fn figure_data() {
    let (code, out, _) = run(&["figure", "--name", "sug-max", "--thetas", "0.2,0.5,0.8"]);
    assert_eq!(code, 0);
    let r = rows(&out);
    assert_eq!(r.len(), 3 * 501);
    for slice in r.chunks(501) {
        assert!(slice
            .windows(2)
            .all(|w| w[1][2] >= w[0][2] && w[1][1] > w[0][1]));
    }

    let (_, out, _) = run(&["figure", "--name", "csug-max", "--thetas", "0.5"]);
    let r = rows(&out);
    assert_eq!(r.len(), 501);
    assert!(r.iter().all(|row| (0.0..=0.5).contains(&row[1])));
    assert_eq!(r[500][1], 0.5);

    let (_, max, _) = run(&["figure", "--name", "sug-max", "--thetas", "0.5"]);
    let (_, min, _) = run(&["figure", "--name", "sug-min", "--thetas", "0.5"]);
    let (max, min) = (rows(&max), rows(&min));
    for (i, row) in min.iter().enumerate() {
        assert!((row[2] - max[500 - i][2]).abs() <= 1e-12);
    }
}

#[test]
fn moments_and_mgf_tables() {
    let (code, out, _) = run(&["moments", "--model", "zipf-uniform-max", "--k-max", "2"]);
    assert_eq!(code, 0);
    let m1: f64 = out.lines().find(|l| l.starts_with("1,")).unwrap()[2..]
        .parse()
        .unwrap();
    assert!((m1 - 6.0 / std::f64::consts::PI.powi(2)).abs() < 1e-8);

    let (code, out, _) = run(&[
        "mgf",
        "--model",
        "uniform-poisson-max",
        "--lambda",
        "1",
        "--grid",
        "-2:2:1",
    ]);
    assert_eq!(code, 0);
    let r = rows(&out);
    assert_eq!(r.len(), 5);
    assert!((r[2][1] - 1.0).abs() < 1e-10);
}

#[test]
fn triple_model_selection() {
    let (code, out, err) = run(&[
        "pdf",
        "--input-law",
        "arcsine",
        "--count-law",
        "poisson",
        "--kind",
        "max",
        "--lambda",
        "2",
        "--grid",
        "0.1:0.9:0.1",
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(rows(&out).len(), 9);
    let (code, _, _) = run(&["pdf", "--input-law", "arcsine", "--kind", "max"]);
    assert_eq!(code, 1);
}

#[test]
fn check_reports() {
    let (code, out, _) = run(&["check", "--model", "sug-max", "--theta", "0.5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["reports"][0]["normalization_error"].as_f64().unwrap() < 1e-8);

    let (code, out, _) = run(&["check", "--model", "csug-max", "--theta", "0.5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["reports"][0]["series_max_abs_diff"],
        "skipped: correlated model"
    );

    let (code, out, err) = run(&[
        "check",
        "--model",
        "geom-arcsine-min",
        "--theta",
        "0.5",
        "--as-printed",
        "--mc-n",
        "1000",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("check failed"));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["reports"][0]["series_max_abs_diff"].as_f64().unwrap() > 0.0);
}

#[test]
fn exit_codes_and_diagnostics() {
    let cases: [(&[&str], i32); 8] = [
        (&["pdf", "--model", "no-such-model", "--theta", "0.5"], 1),
        (&["pdf", "--model", "sug-max", "--theta", "1.5"], 1),
        (&["pdf", "--model", "sug-max"], 1),
        (
            &[
                "pdf", "--model", "sug-max", "--theta", "0.5", "--grid", "0:2:0.5",
            ],
            1,
        ),
        (
            &[
                "estimate",
                "--model",
                "csug-max",
                "--input",
                "/nonexistent/data.csv",
            ],
            1,
        ),
        (&["frobnicate"], 1),
        (&["figure", "--name", "sug-max", "--thetas", "0.5,abc"], 1),
        (&["--help"], 0),
    ];
    for (args, expected) in cases {
        let (code, _, err) = run(args);
        assert_eq!(code, expected, "{args:?}");
        if expected == 1 {
            assert!(!err.trim().is_empty(), "{args:?}");
        }
    }
    let bad = temp_file("bad.csv", "0.1\n1.5\n");
    let (code, _, err) = run(&[
        "estimate",
        "--model",
        "csug-min",
        "--input",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("randext-out-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pdf.csv");
    let (code, out, _) = run(&[
        "pdf",
        "--model",
        "sug-min",
        "--theta",
        "0.5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(rows(&fs::read_to_string(&path).unwrap()).len(), 101);
}
