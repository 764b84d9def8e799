use std::path::PathBuf;
use std::process::{Command, Output};

use sl3c_geometry::cli::CSV_HEADER;

fn sl3c(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl3c"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn fields(line: &str) -> Vec<String> {
    line.split(',').map(str::to_string).collect()
}

#[test]
fn sweep_csv_rows() {
    let out = sl3c(&[
        "sweep",
        "--alpha-start",
        "0",
        "--alpha-end",
        "pi/2",
        "--steps",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 6);
    assert_eq!(
        fields(lines[1])[..10],
        [
            "0",
            "0",
            "4",
            "-3",
            "-3",
            "0",
            "NegativeRicci",
            "true",
            "true",
            "false"
        ]
    );
    let last = fields(lines[5]);
    assert_eq!(last[0], "1.57079632679");
    assert_eq!(
        (last[1].as_str(), last[2].as_str(), last[4].as_str()),
        ("-4", "0", "1")
    );
    assert_eq!(last[6], "MixedRicci");
}

#[test]
fn sweep_single_step_at_the_boundary() {
    let out = sl3c(&[
        "sweep",
        "--alpha-start",
        "pi/3",
        "--alpha-end",
        "pi/3",
        "--steps",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert!(rows[0]["ricci_max"].as_f64().unwrap().abs() < 1e-9);
    assert_eq!(rows[0]["regime"], "RicciNullDirection");
}

#[test]
fn degrees_flag() {
    let rad = sl3c(&[
        "sweep",
        "--alpha-start",
        "pi/6",
        "--alpha-end",
        "pi/3",
        "--steps",
        "3",
    ]);
    let deg = sl3c(&[
        "sweep",
        "--degrees",
        "--alpha-start",
        "30",
        "--alpha-end",
        "60",
        "--steps",
        "3",
    ]);
    assert_eq!(stdout(&rad), stdout(&deg));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "sweep",
        "--steps",
        "6",
        "--samples",
        "300",
        "--seed",
        "9",
        "--format",
        "json",
    ];
    let a = sl3c(&args);
    let b = sl3c(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = sl3c(&["sweep", "--steps", "6", "--samples", "300", "--seed", "9"]);
    let d = sl3c(&["sweep", "--steps", "6", "--samples", "300", "--seed", "9"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn output_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("sl3c-sweep-{}.csv", std::process::id()));
    let out = sl3c(&["sweep", "--steps", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with(CSV_HEADER));
}

#[test]
fn exit_codes() {
    // residuals are ~1e-15, so an absurd tolerance fails the sweep
    assert_eq!(
        sl3c(&["sweep", "--steps", "2", "--tol", "1e-300"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(sl3c(&["sweep", "--steps", "0"]).status.code(), Some(2));
    assert_eq!(
        sl3c(&["sweep", "--alpha-start", "1", "--alpha-end", "0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(sl3c(&["sweep", "--alpha-end", "2"]).status.code(), Some(2));
    assert_eq!(sl3c(&["sweep", "--tol", "0"]).status.code(), Some(2));
    assert_eq!(sl3c(&["sweep", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(sl3c(&["sweep", "--bogus"]).status.code(), Some(2));
    assert_eq!(sl3c(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sl3c(&[]).status.code(), Some(2));
    assert_eq!(sl3c(&["--help"]).status.code(), Some(0));
    assert_eq!(sl3c(&["--version"]).status.code(), Some(0));
}

#[test]
fn usage_errors_explain_themselves() {
    let out = sl3c(&["sweep", "--steps", "0"]);
    assert!(stderr(&out).contains("--steps"));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_passes_and_reports_each_check() {
    let out = sl3c(&["verify", "--samples", "200"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    for name in [
        "H_Q = 4·H0: PASS",
        "Damek-Ricci axioms at alpha=0: PASS",
        "Gauss vs Koszul Ricci: PASS",
        "Jacobi identity: PASS",
        "Foliation identity: PASS",
    ] {
        assert!(text.contains(name), "missing '{name}' in\n{text}");
    }
    assert!(!text.contains('\x1b'));
}

#[test]
fn verify_fails_with_exit_one() {
    let out = sl3c(&["verify", "--samples", "20", "--tol", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("Gauss vs closed-form Ricci: FAIL"));
}

#[test]
fn foliation_command() {
    let parse = |args: &[&str]| -> serde_json::Value {
        let out = sl3c(args);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        serde_json::from_str(&stdout(&out)).unwrap()
    };
    let v = parse(&["foliation", "--alpha", "0", "--s", "1"]);
    assert_eq!(v["volume_distortion"].as_f64(), Some(1.0));
    let v = parse(&["foliation", "--alpha", "pi/2", "--s", "1"]);
    assert!((v["volume_distortion"].as_f64().unwrap() - 0.0183156).abs() < 1e-7);
    let v = parse(&[
        "foliation",
        "--alpha",
        "0.7",
        "--s",
        "0",
        "--q",
        "1,2,-0.5,0.25,3,-1,0.4",
    ]);
    assert_eq!(v["flow_point"], v["q"]);
    assert_eq!(v["residual"].as_f64(), Some(0.0));
    let v = parse(&[
        "foliation",
        "--alpha",
        "0.7",
        "--s",
        "-1.5",
        "--q",
        "1,2,-0.5,0.25,3,-1,0.4",
    ]);
    assert!(v["residual"].as_f64().unwrap() < 1e-10);

    assert_eq!(sl3c(&["foliation", "--q", "1,2,3"]).status.code(), Some(2));
    assert_eq!(
        sl3c(&["foliation", "--q", "1,2,3,4,5,6,x"]).status.code(),
        Some(2)
    );
    assert_eq!(sl3c(&["foliation", "--alpha", "3"]).status.code(), Some(2));
}

#[test]
fn algebra_command_on_bundled_files() {
    let out = sl3c(&["algebra", &data("s7_alpha0.json"), "cheeger"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["cheeger"].as_f64().unwrap() - 4.0).abs() < 1e-12);

    let out = sl3c(&["algebra", &data("s8.json"), "einstein"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["einstein"], true);
    assert!((v["constant"].as_f64().unwrap() + 3.0).abs() < 1e-10);

    let out = sl3c(&[
        "algebra",
        &data("s7_alpha0.json"),
        "dr-check",
        "--v",
        "0,1,2,3",
        "--z",
        "4,5",
        "--a",
        "6",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["overall"], true);

    let out = sl3c(&["algebra", &data("s8.json"), "ricci"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 8);

    assert_eq!(
        sl3c(&["algebra", &data("s8.json"), "dr-check"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn algebra_command_rejects_invalid_files() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("sl3c-jacobi-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"dim": 3, "structure": [[0, 1, 2, 1.0], [1, 2, 0, 1.0], [0, 2, 0, 1.0]], "gram": [[1,0,0],[0,1,0],[0,0,1]]}"#,
    )
    .unwrap();
    let out = sl3c(&["algebra", path.to_str().unwrap(), "ricci"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Jacobi identity violated"));

    let out = sl3c(&["algebra", "/nonexistent/algebra.json", "cheeger"]);
    assert_eq!(out.status.code(), Some(2));
}
