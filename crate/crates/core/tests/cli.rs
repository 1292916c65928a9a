use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs")
}

fn gaplab(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gaplab"))
        .args(args)
        .arg("--out")
        .arg(out)
        .env_remove("GAPLAB_THREADS")
        .output()
        .expect("binary runs")
}

fn write_config(dir: &Path, body: &str) -> String {
    let path = dir.join("config.json");
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

fn read_json(path: PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn free_spectrum_is_the_interval() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"command": "spectrum", "q": {"kind": "constant", "value": 0}}"#);
    let out = gaplab(&["--config", &cfg], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = read_json(dir.path().join("spectrum.json"));
    let bands = v["spectrum"].as_array().unwrap();
    assert_eq!(bands.len(), 1);
    assert!((bands[0][0].as_f64().unwrap() + 2.0).abs() < 1e-9);
    assert!((bands[0][1].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert_eq!(v["provenance"]["config_sha256"].as_str().unwrap().len(), 64);
    assert_eq!(v["provenance"]["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn obstruction_rejects_b_plus_b_squared() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs().join("obstruction.json");
    let out = gaplab(&["--config", cfg.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = read_json(dir.path().join("obstruction.json"));
    assert_eq!(v["verdict"], "rejected");
    assert_eq!(v["rejection_reason"], "p(1)=2");
}

#[test]
fn certificate_counts_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"command": "obstruction", "expr": "2b - 2b^2 + b^3", "n_max": 30}"#);
    assert!(gaplab(&["--config", &cfg], dir.path()).status.success());
    let v = read_json(dir.path().join("obstruction.json"));
    assert_eq!(v["verdict"], "certificate");
    assert_eq!(v["witness_degree"], 3);
    assert_eq!(v["counts"], serde_json::json!([0, 2, 2, 1]));
}

#[test]
fn validation_errors_exit_2_with_paths() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        r#"{"command": "labels", "alphabet": {"letters": [0, 1], "weights": ["0.5", "1/2"]}, "n": 0}"#,
    );
    let out = gaplab(&["--config", &cfg], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let diag: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(diag["error"], "validation");
    let paths: Vec<&str> = diag["fields"].as_array().unwrap().iter().map(|f| f["path"].as_str().unwrap()).collect();
    assert_eq!(paths, vec!["alphabet.weights[0]", "n"]);

    let out = gaplab(&["frobnicate", "--config", &cfg], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unresolved_cantor_levels_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"command": "cantor", "depth": 2, "max_level": 3, "seed": 1, "n": 100}"#);
    let out = gaplab(&["--config", &cfg], dir.path());
    assert_eq!(out.status.code(), Some(3));
    let diag: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(diag["error"], "resolution");
}

#[test]
fn sweep_is_deterministic_across_thread_counts() {
    let cfg = configs().join("sweep.json");
    let cfg = cfg.to_str().unwrap();
    let runs: Vec<Vec<u8>> = ["1", "4"]
        .iter()
        .map(|k| {
            let dir = tempfile::tempdir().unwrap();
            let out = gaplab(&["--config", cfg, "--threads", k, "--n", "20000"], dir.path());
            assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
            std::fs::read(dir.path().join("sweep.csv")).unwrap()
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    let text = String::from_utf8(runs[0].clone()).unwrap();
    let mut lines = text.lines();
    let provenance = lines.next().unwrap();
    assert!(provenance.starts_with("# gaplab ") && provenance.contains("config_sha256=") && provenance.ends_with("seed=1"));
    assert_eq!(
        lines.next().unwrap(),
        "lambda,threshold,gap_left,gap_right,ids_num,ids_den,ids_float,matched_label,threshold_passed"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert!(rows.iter().all(|r| r[1] == "16"));
    assert!(rows.iter().any(|r| r[0] == "20" && r[7] == "1/2" && r[8] == "true"));
    assert!(rows.iter().any(|r| r[0] == "4" && r[8] == "false"));
}

#[test]
fn overrides_reach_the_provenance() {
    let cfg = configs().join("ids_curve.json");
    let cfg = cfg.to_str().unwrap();
    let header = |args: &[&str]| {
        let dir = tempfile::tempdir().unwrap();
        let out = gaplab(&[&["--config", cfg][..], args].concat(), dir.path());
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let text = std::fs::read_to_string(dir.path().join("ids_curve.csv")).unwrap();
        let n_column: Vec<String> = text.lines().skip(2).map(|l| l.split(',').nth(2).unwrap().to_string()).collect();
        (text.lines().next().unwrap().to_string(), n_column)
    };
    let (base, n_base) = header(&[]);
    let (seeded, _) = header(&["--seed", "5"]);
    let (sized, n_sized) = header(&["--n", "500"]);
    assert!(base.ends_with("seed=42") && seeded.ends_with("seed=5"));
    assert_ne!(base, seeded);
    assert_ne!(base, sized);
    assert!(n_base.iter().all(|n| n == "20000") && n_sized.iter().all(|n| n == "500"));
}

#[test]
fn positional_command_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs().join("gaps.json");
    let out = gaplab(&["labels", "--config", cfg.to_str().unwrap()], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = read_json(dir.path().join("labels.json"));
    // weights 1/3, 2/3 at window 2 span the ninths
    assert_eq!(v["labels"].as_array().unwrap().len(), 8);
    assert_eq!(v["labels"][0], "1/9");
}

#[test]
fn every_sample_config_runs() {
    for entry in std::fs::read_dir(configs()).unwrap() {
        let path = entry.unwrap().path();
        let dir = tempfile::tempdir().unwrap();
        let out = gaplab(&["--config", path.to_str().unwrap(), "--n", "5000"], dir.path());
        assert!(out.status.success(), "{}: {}", path.display(), String::from_utf8_lossy(&out.stderr));
        let written: Vec<_> = String::from_utf8(out.stdout).unwrap().lines().map(PathBuf::from).collect();
        assert!(!written.is_empty() && written.iter().all(|p| p.exists()), "{}", path.display());
    }
}

#[test]
fn thread_count_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs().join("labels.json");
    let out = Command::new(env!("CARGO_BIN_EXE_gaplab"))
        .args(["--config", cfg.to_str().unwrap(), "--out"])
        .arg(dir.path())
        .env("GAPLAB_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_gaplab"))
        .args(["--config", cfg.to_str().unwrap(), "--out"])
        .arg(dir.path())
        .env("GAPLAB_THREADS", "many")
        .output()
        .unwrap();
    assert!(!out.status.success());
}
