use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn mertens(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mertens"))
        .args(args)
        .env_remove("MERTENS_LEDGER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    let o = mertens(&a);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn checkpoint_values(v: &Value) -> Vec<(u64, String)> {
    v["result"]["checkpoints"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["x"].as_u64().unwrap(), c["value"].to_string()))
        .collect()
}

#[test]
fn compute_emits_one_checkpoint_per_stride() {
    let (v, code) = json(&["compute", "M", "1e6", "--stride", "1e4"]);
    assert_eq!(code, 0);
    let cps = checkpoint_values(&v);
    assert_eq!(cps.len(), 100);
    assert_eq!(cps.last().unwrap().0, 1_000_000);
    assert_eq!(v["result"]["checkpoints"][99]["lo"].as_f64(), Some(212.0));
}

#[test]
fn json_header_carries_version_and_ledger_hash() {
    let (v, _) = json(&["constants"]);
    assert_eq!(v["tool"], "mertens");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    let sha = v["ledger_sha256"].as_str().unwrap();
    assert_eq!(sha.len(), 64);
    assert!(sha.chars().all(|c| c.is_ascii_hexdigit()));
}

#[test]
fn csv_has_fixed_columns() {
    let o = mertens(&["--format", "csv", "compute", "psi", "100", "--stride", "10"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# mertens "));
    assert_eq!(lines.next(), Some("x,lo,hi,pass"));
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.split(',').count() == 4));
}

#[test]
fn checkpoint_resume_matches_uninterrupted_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n.ckpt");
    let p = path.to_str().unwrap();
    let (first, _) = json(&["compute", "N", "300000", "--stride", "1e5", "--checkpoint", p]);
    assert_eq!(checkpoint_values(&first).len(), 3);
    let (resumed, code) = json(&["compute", "N", "600000", "--stride", "1e5", "--checkpoint", p]);
    assert_eq!(code, 0);
    let (whole, _) = json(&["compute", "N", "600000", "--stride", "1e5"]);
    assert_eq!(checkpoint_values(&resumed), checkpoint_values(&whole));
}

#[test]
fn incompatible_checkpoint_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.ckpt");
    let p = path.to_str().unwrap();
    assert_eq!(mertens(&["compute", "M", "1000", "--stride", "100", "--checkpoint", p]).status.code(), Some(0));
    let o = mertens(&["compute", "M", "2000", "--stride", "200", "--checkpoint", p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("stride"));
}

#[test]
fn model_below_its_range_fails_at_one() {
    let o = mertens(&["verify", "model", "M", "--from", "1", "--to", "32"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation at x = 1\n"));
    assert_eq!(mertens(&["verify", "model", "M", "--to", "1e5"]).status.code(), Some(0));
}

#[test]
fn bad_arguments_exit_with_two() {
    assert_eq!(mertens(&["compute", "nonsense", "10"]).status.code(), Some(2));
    assert_eq!(mertens(&["--ledger", "/nonexistent/ledger.toml", "constants"]).status.code(), Some(2));
}

#[test]
fn identity_verification_passes() {
    let o = mertens(&["verify", "identity", "--x", "1e5", "--y", "316"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn large_x_table_floors() {
    let o = mertens(&["certify", "large-x"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for n in ["11086", "25372", "53324", "104069", "180799", "11035", "25266", "53119", "103697", "180194"] {
        assert!(text.contains(n), "missing {n}");
    }
}

#[test]
fn dyadic_table_all_checks_hold() {
    let o = mertens(&["certify", "dyadic", "--printed-inputs"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("oui").count(), 9);
}

#[test]
fn theorem_with_printed_inputs() {
    let (v, code) = json(&["certify", "theorem-a", "--printed-inputs"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    let text = v.to_string();
    assert!(text.contains("160383") && text.contains("180194"));
}

#[test]
fn conservative_constant_breaks_the_chain() {
    let o = mertens(&["certify", "theorem-a", "--printed-inputs", "--lambda", "conservative"]);
    assert_ne!(o.status.code(), Some(0));
}

fn threshold(k: &str, x: &str, ckpt: &Path) -> Value {
    json(&["scan-threshold", k, x, "--checkpoint", ckpt.to_str().unwrap()]).0
}

#[test]
fn threshold_scan_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.ckpt");
    let a = threshold("20", "20000", &path);
    let b = threshold("20", "50000", &path);
    let (whole, _) = json(&["scan-threshold", "20", "50000"]);
    assert_eq!(b["result"], whole["result"]);
    assert!(a["result"]["last"].as_u64().unwrap() <= 20_000);
    let o = mertens(&["scan-threshold", "21", "50000", "--checkpoint", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn constants_table() {
    let o = mertens(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for name in ["alpha", "beta", "zeta(1/2)", "gamma", "L*", "log10 crossover"] {
        assert!(text.contains(name), "missing {name}");
    }
}
