//! End-to-end checks of the binary: exit codes, file formats, and the
//! byte-level determinism criterion.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_twistor-ga")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(dir)
        .env_remove("TWISTOR_GA_TOL")
        .output()
        .expect("spawning the binary")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("twistor-ga-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn criterion_11_determinism() {
    let dir = temp_dir("determinism");
    let args = ["verify", "all", "--seed", "42", "--out", "report.json"];

    let first = run_in(&dir, &args);
    assert!(first.status.success(), "first verify run failed");
    let report_first = std::fs::read(dir.join("report.json")).unwrap();

    let second = run_in(&dir, &args);
    assert!(second.status.success(), "second verify run failed");
    let report_second = std::fs::read(dir.join("report.json")).unwrap();

    assert_eq!(report_first, report_second, "verify reports differ between runs");
    assert_eq!(first.stdout, second.stdout, "verify stdout differs between runs");

    let scene_args = [
        "congruence", "--s", "0.5", "--tau", "0", "--grid", "3,3,3", "--family", "2",
        "--samples", "16", "--dlines", "--out", "scene.csv",
    ];
    let first = run_in(&dir, &scene_args);
    assert!(first.status.success(), "first congruence run failed");
    let scene_first = std::fs::read(dir.join("scene.csv")).unwrap();
    let manifest_first = std::fs::read(dir.join("scene.csv.manifest.json")).unwrap();

    let second = run_in(&dir, &scene_args);
    assert!(second.status.success(), "second congruence run failed");
    assert_eq!(
        scene_first,
        std::fs::read(dir.join("scene.csv")).unwrap(),
        "congruence files differ between runs"
    );
    assert_eq!(
        manifest_first,
        std::fs::read(dir.join("scene.csv.manifest.json")).unwrap(),
        "scene manifests differ between runs"
    );
    println!("PASS criterion 11: byte-identical reports and data files across runs");
}

#[test]
fn verify_report_is_machine_readable_and_references_itself() {
    let dir = temp_dir("report");
    let out = run_in(&dir, &["verify", "algebra", "--seed", "7", "--out", "algebra.json"]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.join("algebra.json")).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["command"], "verify");
    assert_eq!(json["seed"], 7);
    assert_eq!(json["failed"], 0);
    assert_eq!(json["tolerances"]["default"], 1e-10);
    assert!(json["checks"].as_array().unwrap().iter().all(|c| c["suite"] == "algebra"));
    assert_eq!(json["outputs"][0], "algebra.json");
    // human summary went to stdout
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("[PASS] algebra/associativity"));
    assert!(!text.contains("wall_time"), "report must not carry timing");
}

#[test]
fn csv_has_the_pinned_column_layout() {
    let dir = temp_dir("csv");
    let out = run_in(
        &dir,
        &["congruence", "--s", "0.5", "--grid", "2,2,2", "--out", "grid.csv"],
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.join("grid.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "kind,id,theta_or_index,x,y,z");
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 6, "bad row: {line}");
        assert_eq!(fields[0], "tangent");
        fields[1].parse::<u32>().unwrap();
        for v in &fields[2..] {
            v.parse::<f64>().unwrap();
        }
    }
}

#[test]
fn json_scene_round_trips_and_references_its_manifest() {
    let dir = temp_dir("json");
    let out = run_in(
        &dir,
        &[
            "congruence", "--s", "0.5", "--grid", "2,2,2", "--family", "1", "--samples", "8",
            "--dlines", "--format", "json", "--out", "scene.json",
        ],
    );
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.join("scene.json")).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["manifest"], "scene.json.manifest.json");
    assert!(dir.join("scene.json.manifest.json").exists());
    let kinds: Vec<&str> = json["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"tangent"));
    assert!(kinds.contains(&"circle"));
    assert!(kinds.contains(&"dline"));

    // parse → re-serialise → identical record structure
    let records: Vec<serde_json::Value> = json["records"].as_array().unwrap().clone();
    let reparsed: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&json).unwrap()).unwrap();
    assert_eq!(reparsed["records"].as_array().unwrap(), &records);
}

#[test]
fn ray_exports_and_checks_the_observable() {
    let dir = temp_dir("ray");
    let out = run_in(
        &dir,
        &[
            "ray", "--translate", "0.5,1,0,0", "--invert", "--samples", "5", "--format", "json",
            "--out", "ray.json",
        ],
    );
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("[PASS] geometry/observable_doubling"));
    assert!(stdout.contains("[PASS] geometry/observable_translation"));
    assert!(stdout.contains("[PASS] geometry/observable_inversion"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("ray.json")).unwrap()).unwrap();
    // base ray, translated ray, inverted ray
    assert_eq!(json["records"].as_array().unwrap().len(), 3);
    // the preset ray lies on r(h) = −½(γ₀+γ₃) + h·½(γ₀−γ₃): spatial z = −½ − h/2
    let rec = &json["records"][0];
    let params = rec["params"].as_array().unwrap();
    let points = rec["points"].as_array().unwrap();
    for (h, p) in params.iter().zip(points) {
        let h = h.as_f64().unwrap();
        let z = p[2].as_f64().unwrap();
        assert!((z - (-0.5 - 0.5 * h)).abs() < 1e-12);
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = temp_dir("exits");
    // 2: usage errors
    assert_eq!(
        run_in(&dir, &["verify", "nonsense"]).status.code(),
        Some(2),
        "unknown suite should exit 2"
    );
    let out = run_in(&dir, &["congruence", "--s", "0"]);
    assert_eq!(out.status.code(), Some(2), "s = 0 should exit 2");
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("ray"),
        "the s = 0 error should point at the ray command"
    );
    let out = run_in(&dir, &["ray", "--spinor", "2,0,0,0,0,0,1,0"]);
    assert_eq!(out.status.code(), Some(2), "non-null spinor should exit 2");
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("helicity"),
        "rejection must quote the measured helicity"
    );
    assert_eq!(run_in(&dir, &["verify", "--no-such-flag"]).status.code(), Some(2));

    // 0: a passing run
    assert_eq!(
        run_in(&dir, &["verify", "twistor", "--out", "t.json"]).status.code(),
        Some(0)
    );
}

#[test]
fn tolerance_env_var_overrides_the_default() {
    let dir = temp_dir("tol");
    // an absurdly tight tolerance makes residual-based checks fail → exit 1
    let out = Command::new(bin())
        .args(["verify", "algebra", "--seed", "42", "--out", "tight.json"])
        .current_dir(&dir)
        .env("TWISTOR_GA_TOL", "1e-300")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "tight tolerance should fail checks");
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("tight.json")).unwrap()).unwrap();
    assert_eq!(report["tolerances"]["default"], 1e-300);
    assert!(report["failed"].as_u64().unwrap() > 0);

    // an unparsable value is a usage error
    let out = Command::new(bin())
        .args(["verify", "algebra"])
        .current_dir(&dir)
        .env("TWISTOR_GA_TOL", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_mirrors_flags_and_flags_win() {
    let dir = temp_dir("config");
    std::fs::write(
        dir.join("scene.cfg"),
        "# reference scene\ns=0.5\ngrid=2,2,2\nsamples=8\nfamily=1\nformat=json\nout=from-config.json\n",
    )
    .unwrap();
    let out = run_in(&dir, &["congruence", "--config", "scene.cfg"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.join("from-config.json").exists());

    // a flag overrides the config value
    let out = run_in(
        &dir,
        &["congruence", "--config", "scene.cfg", "--out", "from-flag.json"],
    );
    assert!(out.status.success());
    assert!(dir.join("from-flag.json").exists());

    // unknown keys are rejected as usage errors
    std::fs::write(dir.join("bad.cfg"), "unknown_key=1\n").unwrap();
    assert_eq!(
        run_in(&dir, &["congruence", "--config", "bad.cfg"]).status.code(),
        Some(2)
    );
}
