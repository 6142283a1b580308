use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use signature::library;
use tempfile::TempDir;

fn gl(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gl"));
    cmd.args(args).env_remove("GL_SEED");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn potential_of_the_trefoil() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "t.braid", "# trefoil\nstrands = 2\ncolors = 1 1\nword = 1 1 1\n");
    let out = gl(&["potential", s(&f)], &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["over_conway_factor"], true);
    assert_eq!(v["results"]["numerator"]["text"], "t1^2 - 1 + t1^-2");

    let out = gl(&["alexander", s(&f)], &[]);
    assert_eq!(json(&out)["results"]["alexander"]["text"], "t1^2 - t1 + 1");
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    assert_eq!(gl(&["potential", "/nonexistent/braid"], &[]).status.code(), Some(2));
    let bad = write(&dir, "bad.braid", "strands = 2\nword = 1 x\n");
    assert_eq!(gl(&["potential", s(&bad)], &[]).status.code(), Some(2));
    let hopf = write(&dir, "h.braid", "strands = 2\ncolors = 1 2\nword = 1 1\n");
    // one angle for two colors
    assert_eq!(gl(&["casson-lin", s(&hopf), "--alpha", "1.0"], &[]).status.code(), Some(2));
    assert_eq!(gl(&["no-such-command"], &[]).status.code(), Some(2));
}

#[test]
fn seed_falls_back_to_the_environment_and_runs_repeat() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "b.braid", "strands = 3\ncolors = 1 1 2\nword = 1 1 1 2 2\n");
    let args = ["casson-lin", s(&f), "--alpha", "1.2", "0.8"];
    let a = gl(&args, &[("GL_SEED", "77")]);
    assert_eq!(a.status.code(), Some(0));
    let (va, vb) = (json(&a), json(&gl(&args, &[("GL_SEED", "77")])));
    assert_eq!(va["seed"], 77);
    assert_eq!(va["results"], vb["results"]);
    assert_eq!(json(&gl(&args, &[]))["seed"], glcli::random::DEFAULT_SEED);
    assert_eq!(json(&gl(&[&args[..], &["--seed", "5"]].concat(), &[("GL_SEED", "77")]))["seed"], 5);
}

#[test]
fn signature_formula_on_the_family() {
    let dir = TempDir::new().unwrap();
    let entry = library::torus_hopf_sum(1);
    let b = write(&dir, "f.braid", &entry.braid.to_string());
    let sys = write(&dir, "f.json", &serde_json::to_string(&entry.system).unwrap());
    let out = gl(&["signature-formula", s(&b), s(&sys), "--at", "0.7,1.1", "--at", "2.3,0.6"], &[]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));

    // a knot with the system of a two-component link
    let trefoil = write(&dir, "t.braid", "strands = 2\nword = 1 1 1\n");
    assert_eq!(gl(&["signature-formula", s(&trefoil), s(&sys), "--at", "1.0"], &[]).status.code(), Some(2));
}

#[test]
fn signature_of_a_seifert_file() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "t.json", &serde_json::to_string(&library::trefoil().system).unwrap());
    let out = gl(&["signature", s(&sys), "--omega", "3.141592653589793"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["sigma"], -2);
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = gl(&["verify", "--scope", "gassner"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
    assert_eq!(v["conventions"]["orientation_sign"], 1);

    // an exhausted budget leaves too few cases, which is a failure
    let out = gl(&["verify", "--scope", "alexander", "--budget", "0"], &[]);
    assert_eq!(out.status.code(), Some(1));

    let out = gl(&["verify", "--scope", "signature", "--pretty"], &[]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pass  signature parity relation"));
}

#[test]
fn evaluated_gassner_and_long_check() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.braid", "strands = 2\ncolors = 1 2\nword = 1 1\n");
    let out = gl(&["gassner", s(&f), "--eval", "1.4", "-0.6"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["matrix"].as_array().unwrap().len(), 2);
    let out = gl(&["verify-long", s(&f), "--alpha", "0.7", "1.9"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["checks"].as_array().unwrap().len(), 4);
}
