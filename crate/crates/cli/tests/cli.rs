use std::process::{Command, Output};

fn qprime(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qprime")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_primes_counts() {
    let o = qprime(&["list-primes", "--m", "1", "--n", "1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("1,2     0       0  (zero ideal)"), "{s}");
    assert!(s.contains("2,1     1       1  x11"), "{s}");
    let o = qprime(&["list-primes", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 14);
    let o = qprime(&["list-primes", "--m", "1", "--n", "2", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let ys: Vec<&str> = rows.as_array().unwrap().iter().map(|r| r["y"].as_str().unwrap()).collect();
    assert_eq!(ys, vec!["1,2,3", "1,3,2", "2,1,3", "2,3,1"]);
}

#[test]
fn generators_output() {
    let s = stdout(&qprime(&["generators", "--y", "1,3,2,4"]));
    assert!(s.contains("Δ{1,2}") && s.contains("= x11 x22 - q x12 x21"), "{s}");
    let o = qprime(&["generators", "--y", "3,1,2,4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let els: Vec<&str> = doc["generators"].as_array().unwrap().iter().map(|g| g["element"].as_str().unwrap()).collect();
    assert_eq!(els, vec!["x21", "x11", "x11 x22 - q x12 x21"]);
    assert_eq!(doc["generators"][0]["predicted_scalars"]["x11"], -1);
    let s = stdout(&qprime(&["generators", "--y", "1,2,3,4"]));
    assert!(s.contains("zero ideal"));
    let s = stdout(&qprime(&["generators", "--y", "top", "--dedup", "--format", "json"]));
    let doc: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(doc["generators"].as_array().unwrap().len(), 5);
}

#[test]
fn invalid_input_is_a_usage_error() {
    let o = qprime(&["generators", "--y", "4,3,2,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not below"));
    assert_eq!(qprime(&["list-primes", "--m", "5", "--n", "4"]).status.code(), Some(2));
    assert_eq!(qprime(&["generators"]).status.code(), Some(2));
    assert_eq!(qprime(&["verify", "poset", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(qprime(&["verify", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_polynormal_all_pass() {
    let o = qprime(&["verify", "polynormal", "--format", "json", "--jobs", "2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let certs: Vec<serde_json::Value> = s.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(certs.len(), 14);
    for c in &certs {
        assert_eq!(c["status"], "pass");
        for key in ["claim", "m", "n", "y", "witnesses", "predicted_vs_observed_scalars", "elapsed_ms"] {
            assert!(c.get(key).is_some());
        }
    }
}

#[test]
fn verify_suites() {
    for kind in ["poset", "heights", "separation", "exterior"] {
        let o = qprime(&["verify", kind]);
        assert!(o.status.success(), "{kind}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("PASS"));
    }
    let s = stdout(&qprime(&["verify", "heights", "--y", "3,1,2,4"]));
    assert!(s.contains("GKdim R/I(3,1,2,4): 2"), "{s}");
}

#[test]
fn guard_exhaustion_exit_code() {
    let o = qprime(&["verify", "polynormal", "--y", "top", "--degree-guard", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("GUARD"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "all", "--format", "json", "--no-timing", "--m", "1", "--n", "3"];
    let a = qprime(&args);
    let b = qprime(&[&args[..], &["--jobs", "0"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn export_poset() {
    let s = stdout(&qprime(&["export-poset"]));
    assert!(s.starts_with("digraph"));
    assert_eq!(s.matches("label=").count(), 14);
    let o = qprime(&["export-poset", "--m", "1", "--n", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 4);
}
