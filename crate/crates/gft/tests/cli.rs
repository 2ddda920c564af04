use std::path::Path;
use std::process::{Command, Output};

use gft::format::{PartialSumsJson, VerdictJson, parse_series};
use serde_json::Value;

fn gft(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gft"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

#[test]
fn phi_tables() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], &[f64]); 3] = [
        (
            &["phi", "--lambda", "1", "--mu", "0", "--eta", "1", "-N", "5"],
            &[1.0, 2.0, 3.0, 4.0, 5.0],
        ),
        (&["phi", "--eta", "0", "-N", "3"], &[1.0, 1.0, 1.0]),
        (
            &[
                "phi", "--lambda", "0.5", "--mu", "0.5", "--eta", "1", "-N", "2",
            ],
            &[1.0, 1.5],
        ),
    ];
    for (args, expected) in cases {
        let o = gft(args, dir.path());
        assert_eq!(o.status.code(), Some(0));
        let phi: Vec<f64> = serde_json::from_value(json(&o)["phi"].clone()).unwrap();
        assert_eq!(phi, expected);
    }
    let o = gft(
        &["phi", "--eta", "2", "-N", "3", "--format", "csv"],
        dir.path(),
    );
    assert_eq!(stdout(&o), "n,phi\n1,1\n2,4\n3,9\n");
}

#[test]
fn bad_parameters_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["phi", "--lambda", "0.5", "--mu", "1"][..],
        &["check", "--gamma", "1", "missing.json"],
        &["check", "--t-re", "1", "missing.json"],
        &["classify-conic", "--k", "-1"],
        &["extremal", "--n", "2", "--partial-m", "1"],
        &["extremal"],
        &["neighborhood", "f.json", "--trials", "3", "--alpha", "0.1"],
        &["no-such-command"],
    ] {
        assert_eq!(gft(args, dir.path()).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn extremal_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let o = gft(&["extremal", "--t-re", "0", "--n", "2"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let f = parse_series(&stdout(&o)).unwrap();
    assert_eq!(f.coeff(2).re, 0.5);
    assert_eq!(f.form(), gft_core::SignForm::NegativeCoefficients);
    write(dir.path(), "f.json", &stdout(&o));
    let o = gft(&["check", "--t-re", "0", "f.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: VerdictJson = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.member);
    assert_eq!(v.slack, 0.0);

    let o = gft(&["extremal", "--t-re", "0", "--partial-m", "1"], dir.path());
    let p = parse_series(&stdout(&o)).unwrap();
    assert_eq!(p.form(), gft_core::SignForm::General);
    assert_eq!(p.coeff(2).re, 0.5);
}

#[test]
fn check_rejects_non_members_and_general_form() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "big.json",
        r#"{"form": "negative", "order": 2, "coefficients": [{"n": 2, "re": 0.6, "im": 0.0}]}"#,
    );
    write(
        dir.path(),
        "gen.json",
        r#"{"form": "general", "order": 2, "coefficients": [{"n": 2, "re": 0.1, "im": 0.0}]}"#,
    );
    write(
        dir.path(),
        "dup.json",
        r#"{"form": "negative", "order": 2, "coefficients": [{"n": 2, "re": 0.1}, {"n": 2, "re": 0.1}]}"#,
    );
    let o = gft(&["check", "--t-re", "0", "big.json"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["member"], Value::Bool(false));
    assert_eq!(
        gft(&["check", "--t-re", "0", "gen.json"], dir.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gft(&["check", "--t-re", "0", "dup.json"], dir.path())
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_reports_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "id.json",
        r#"{"form": "negative", "order": 3, "coefficients": []}"#,
    );
    write(
        dir.path(),
        "over.json",
        r#"{"form": "negative", "order": 2, "coefficients": [{"n": 2, "re": 0.505, "im": 0.0}]}"#,
    );
    let o = gft(
        &[
            "verify",
            "--gamma",
            "0.3",
            "--radii",
            "4",
            "--theta-count",
            "8",
            "id.json",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert!((r["grid_min"].as_f64().unwrap() - 0.7).abs() < 1e-12);
    assert_eq!(r["grid"]["r_values"].as_array().unwrap().len(), 4);

    let o = gft(&["verify", "--t-re", "0", "over.json"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(json(&o)["grid_min"].as_f64().unwrap() < 0.0);

    let o = gft(
        &[
            "verify",
            "--radii",
            "3",
            "--theta-count",
            "8",
            "--ray",
            "0.1",
            "--format",
            "csv",
            "id.json",
        ],
        dir.path(),
    );
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,theta,G");
    assert_eq!(lines.len(), 1 + 3 * 9);
}

#[test]
fn neighborhood_distance_and_trials() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "f.json",
        r#"{"form": "negative", "order": 2, "coefficients": [{"n": 2, "re": 0.25, "im": 0.0}]}"#,
    );
    write(
        dir.path(),
        "g.json",
        r#"{"form": "negative", "order": 2, "coefficients": [{"n": 2, "re": 0.375, "im": 0.0}]}"#,
    );
    let o = gft(
        &[
            "neighborhood",
            "--t-re",
            "0",
            "f.json",
            "--g",
            "g.json",
            "--alpha",
            "0.25",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["distance"].as_f64(), Some(0.25));
    assert_eq!(r["in_neighborhood"], Value::Bool(true));
    let o = gft(
        &[
            "neighborhood",
            "--t-re",
            "0",
            "f.json",
            "--g",
            "g.json",
            "--alpha",
            "0.2",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));

    let args = [
        "neighborhood",
        "--t-re",
        "0",
        "--radii",
        "16",
        "--theta-count",
        "90",
        "f.json",
        "--alpha",
        "0.25",
        "--trials",
        "12",
        "--seed",
        "5",
    ];
    let a = gft(&args, dir.path());
    assert_eq!(a.status.code(), Some(0));
    let r = json(&a);
    assert_eq!(r["passes"].as_u64(), Some(12));
    assert_eq!(r["seed"].as_u64(), Some(5));
    assert_eq!(a.stdout, gft(&args, dir.path()).stdout);
    let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 5);
}

#[test]
fn partial_sums_report() {
    let dir = tempfile::tempdir().unwrap();
    let o = gft(&["extremal", "--t-re", "0", "--partial-m", "1"], dir.path());
    write(dir.path(), "p.json", &stdout(&o));
    let o = gft(
        &[
            "partial-sums",
            "--t-re",
            "0",
            "--radii",
            "16",
            "--theta-count",
            "90",
            "p.json",
            "--m",
            "1",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let r: PartialSumsJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        [
            r.bounds.bound_f_over_fm,
            r.bounds.bound_fm_over_f,
            r.bounds.bound_df_over_dfm,
            r.bounds.bound_dfm_over_df
        ],
        [0.5, 2.0 / 3.0, 0.0, 0.5]
    );
    let labels: Vec<&str> = r.reports.iter().map(|x| x.ratio.as_str()).collect();
    assert_eq!(labels, ["f/fm", "fm/f", "f'/fm'", "fm'/f'"]);
    assert!((r.reports[0].grid_min - 0.5005).abs() < 1e-12);

    write(
        dir.path(),
        "big.json",
        r#"{"form": "general", "order": 2, "coefficients": [{"n": 2, "re": 0.6, "im": 0.0}]}"#,
    );
    let o = gft(
        &["partial-sums", "--t-re", "0", "big.json", "--m", "1"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn conic_classification() {
    let dir = tempfile::tempdir().unwrap();
    for (k, kind) in [
        ("0", "half-plane"),
        ("1", "parabolic"),
        ("0.5", "hyperbolic"),
        ("2", "elliptic"),
    ] {
        let o = gft(&["classify-conic", "--k", k, "--gamma", "0.2"], dir.path());
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(json(&o)["kind"], Value::String(kind.into()));
    }
}

#[test]
fn degenerate_point_exits_3() {
    // with t = 0 and eta = 0, f = z - 2z^2 gives W a denominator 1 - 2z
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "f.json",
        r#"{"form": "negative", "order": 2, "coefficients": [{"n": 2, "re": 2.0, "im": 0.0}]}"#,
    );
    let o = gft(
        &[
            "verify",
            "--t-re",
            "0",
            "--radii",
            "1",
            "--r-min",
            "0.5",
            "--r-max",
            "0.5",
            "--theta-count",
            "8",
            "f.json",
        ],
        dir.path(),
    );
    assert_eq!(
        o.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}
