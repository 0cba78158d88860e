//! The exit-code contract of every CLI command, exercised through the
//! compiled binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pdegen"))
}

fn spec_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures/specs")
        .join(format!("{name}.json"))
}

fn tmp_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("pdegen_cli_{tag}_{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    d
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn validate_valid_spec_exits_zero() {
    let out = bin()
        .args(["validate", "--spec"])
        .arg(spec_path("euler_vortex_n3"))
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(String::from_utf8_lossy(&out.stdout).contains("OK"));
}

#[test]
fn validate_conflicting_terms_exits_one_naming_path() {
    let dir = tmp_dir("badspec");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = std::fs::read_to_string(spec_path("euler_vortex_n3"))
        .unwrap()
        .replace("\"flux\"", "\"flux\", \"viscous_flux\"");
    let p = dir.join("bad.json");
    std::fs::write(&p, bad).unwrap();
    let out = bin().args(["validate", "--spec"]).arg(&p).output().unwrap();
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("/terms"), "{}", stderr(&out));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn validate_missing_file_exits_two() {
    let out = bin()
        .args(["validate", "--spec", "/nonexistent/spec.json"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn generate_writes_tree_and_reruns_identically() {
    let dir = tmp_dir("gen");
    let out = bin()
        .args(["generate", "--spec"])
        .arg(spec_path("advection_n2"))
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let manifest = dir.join("generated/manifest.json");
    assert!(manifest.is_file());
    let first = std::fs::read_to_string(&manifest).unwrap();
    let out = bin()
        .args(["generate", "--spec"])
        .arg(spec_path("advection_n2"))
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_to_string(&manifest).unwrap(), first);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn generate_unwritable_dir_exits_two() {
    let out = bin()
        .args(["generate", "--spec"])
        .arg(spec_path("advection_n2"))
        .args(["--out", "/proc/pdegen_cannot_write_here"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 2, "{}", stderr(&out));
}

#[test]
fn run_generic_writes_csv() {
    let dir = tmp_dir("run");
    let out = bin()
        .args(["run", "--spec"])
        .arg(spec_path("advection_n2"))
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let csv = std::fs::read_to_string(dir.join("run.csv")).unwrap();
    assert!(csv.starts_with("step,t,dt,"));
    assert!(csv.lines().count() > 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn run_sod_reports_troubled_cells() {
    let dir = tmp_dir("sod");
    // Shorten the run: 20 steps are enough to see limiter activity.
    let short = std::fs::read_to_string(spec_path("euler_sod_limiting_n3"))
        .unwrap()
        .replace("\"end_time\": 0.2", "\"end_time\": 0.005");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("sod.json");
    std::fs::write(&p, short).unwrap();
    let out = bin()
        .args(["run", "--spec"])
        .arg(&p)
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let csv = std::fs::read_to_string(dir.join("run.csv")).unwrap();
    let any_troubled = csv
        .lines()
        .skip(1)
        .any(|l| l.rsplit(',').next().unwrap().trim().parse::<u64>().unwrap() > 0);
    assert!(any_troubled, "no troubled cells in:\n{csv}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn run_generated_without_manifest_exits_two() {
    let dir = tmp_dir("nomanifest");
    std::fs::create_dir_all(&dir).unwrap();
    let out = bin()
        .args(["run", "--spec"])
        .arg(spec_path("advection_n2"))
        .args(["--kernels", "generated"])
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("missing manifest"), "{}", stderr(&out));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn run_generated_after_generate_succeeds() {
    let dir = tmp_dir("genrun");
    for sub in [["generate"], ["run"]] {
        let mut cmd = bin();
        cmd.arg(sub[0])
            .arg("--spec")
            .arg(spec_path("advection_n2"))
            .arg("--out")
            .arg(&dir);
        if sub[0] == "run" {
            cmd.args(["--kernels", "generated"]);
        }
        let out = cmd.output().unwrap();
        assert_eq!(code(&out), 0, "{sub:?}: {}", stderr(&out));
    }
    assert!(dir.join("run.csv").is_file());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bench_linear_spec_compares_ck_and_otf() {
    let dir = tmp_dir("bench");
    let out = bin()
        .args(["bench", "--spec"])
        .arg(spec_path("advection_n3"))
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let table = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(table.contains("ck") && table.contains("otf"), "{table}");
    let csv = std::fs::read_to_string(dir.join("bench.csv")).unwrap();
    assert!(csv.lines().count() >= 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bench_nonlinear_spec_runs_picard_only() {
    let dir = tmp_dir("benchnl");
    let out = bin()
        .args(["bench", "--spec"])
        .arg(spec_path("euler_vortex_n3"))
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let table = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(table.contains("picard"));
    assert!(table.contains("ck/otf rows skipped"));
    assert!(!table.contains("\notf"));
    std::fs::remove_dir_all(&dir).unwrap();
}
