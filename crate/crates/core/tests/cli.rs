use std::path::Path;
use std::process::{Command, Output};

use qes_calogero::cli::CsvTable;
use serde_json::Value;

fn qes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qes")).args(args).output().expect("spawn qes")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(dir: &Path, name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap()
}

#[test]
fn spectrum_default_levels() {
    let dir = tempfile::tempdir().unwrap();
    let out = qes(&["spectrum", "--alpha", "1", "--format", "csv", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let t = CsvTable::read(&dir.path().join("spectrum.csv")).unwrap();
    let analytic = t.column("analytic").unwrap();
    assert_eq!(&analytic[..5], &[14.0, 18.0, 22.0, 26.0, 30.0]);
    for col in ["rel_error_plus", "rel_error_minus"] {
        assert!(t.column(col).unwrap().iter().all(|&e| e <= 1e-6));
    }
    assert_eq!(json(dir.path(), "spectrum.json")["passed"], true);
}

#[test]
fn spectrum_half_integer_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let out = qes(&["spectrum", "--alpha", "0.5", "--n-max", "1", "--format", "csv", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let t = CsvTable::read(&dir.path().join("spectrum.csv")).unwrap();
    assert_eq!(t.column("analytic").unwrap(), vec![12.0, 16.0]);
}

#[test]
fn invalid_parameters_exit_2() {
    for args in [
        &["spectrum", "--alpha", "-1"][..],
        &["spectrum", "--alpha", "0"],
        &["manybody", "--N", "5"],
        &["manybody", "--N", "3", "--k", "1"],
        &["pkq", "--N", "1"],
        &["pkq", "--g", "-1"],
        &["spectrum", "--alpha", "one"],
        &["dump"],
        &["spectrum", "--bogus"],
    ] {
        let out = qes(args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn verify_passes_and_detuning_fails() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(code(&qes(&["verify", "--alpha", "2", "--out", d])), 0);
    let report = json(dir.path(), "verify.json");
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));

    let out = qes(&["verify", "--alpha", "2", "--detune-g1", "1.01", "--out", d]);
    assert_eq!(code(&out), 1);
    let failed: Vec<String> = json(dir.path(), "verify.json")["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect();
    for name in ["factorization", "exceptional_identity", "schrodinger_residual"] {
        assert!(failed.iter().any(|f| f == name), "{name} should fail, got {failed:?}");
    }
}

#[test]
fn pkq_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    for (k, dim) in [("0", 1), ("1", 0), ("2", 0), ("3", 1)] {
        assert_eq!(code(&qes(&["pkq", "--N", "3", "--k", k, "--out", d])), 0);
        assert_eq!(json(dir.path(), "pkq.json")["solution"]["dimension"], dim, "k = {k}");
    }
}

#[test]
fn manybody_energies_and_residuals() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = qes(&["manybody", "--N", "3", "--g", "4", "--n", "2", "--format", "csv", "--out", d]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(dir.path(), "manybody.json");
    assert_eq!(report["E"]["value"].as_f64().unwrap(), 22.0);
    let t = CsvTable::read(&dir.path().join("manybody_qes.csv")).unwrap();
    assert_eq!(t.rows.len(), 20);
    assert!(t.column("rel_residual").unwrap().iter().all(|&r| r <= 1e-5));
}

#[test]
fn dump_writes_consistent_tables() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = qes(&["dump", "--alpha", "1", "--n-max", "2", "--grid-points", "1500", "--out", d]);
    assert_eq!(code(&out), 0);
    let pots = CsvTable::read(&dir.path().join("potentials.csv")).unwrap();
    let vm = pots.column("v_minus").unwrap();
    let min = vm.iter().copied().fold(f64::INFINITY, f64::min);
    assert_eq!(json(dir.path(), "dump.json")["v_minus_min"]["value"].as_f64().unwrap(), min);
    let ground = CsvTable::read(&dir.path().join("chi_minus_n0.csv")).unwrap();
    assert!(ground.column("psi_analytic").unwrap().iter().all(|&v| v > 0.0));
    let text = std::fs::read_to_string(dir.path().join("chi_plus_n2.csv")).unwrap();
    assert_eq!(CsvTable::parse(&text).unwrap().render(), text);
}

#[test]
fn config_file_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# pkq setup\nN = 4\nk = 4\n").unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(code(&qes(&["pkq", "--config", cfg.to_str().unwrap(), "--out", d])), 0);
    assert_eq!(json(dir.path(), "pkq.json")["solution"]["dimension"], 1);
    assert_eq!(code(&qes(&["pkq", "--config", cfg.to_str().unwrap(), "--k", "2", "--out", d])), 0);
    assert_eq!(json(dir.path(), "pkq.json")["solution"]["dimension"], 0);
    std::fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(code(&qes(&["pkq", "--config", cfg.to_str().unwrap()])), 2);
}
