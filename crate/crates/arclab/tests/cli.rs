//! End-to-end tests for the command-line binary: exit-code contract,
//! deterministic output, and the fixture-directory override.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arclab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

#[test]
fn list_presets_mentions_every_preset() {
    let out = run(&["list-presets"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for name in [
        "s7-straight-twisted-amalgam",
        "psl2-61-twisted-nondiag",
        "straight-nondiag-n3",
        "a89-twisted-twisted-amalgam",
        "j2-nondiag-nondiag",
        "psl2-16-five-arc-components",
        "monster-twisted-twisted",
    ] {
        assert!(text.contains(name), "missing {name} in:\n{text}");
    }
}

#[test]
fn verify_preset_passes_and_is_byte_deterministic() {
    let args = ["verify-preset", "psl2-59-straight-twisted", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "JSON output must be byte-identical");
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], true);
}

#[test]
fn unknown_preset_is_an_operational_error() {
    let out = run(&["verify-preset", "no-such-preset"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown preset"));
}

#[test]
fn metadata_only_preset_refuses_computation() {
    let out = run(&["verify-preset", "monster-twisted-twisted"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("142"));
}

#[test]
fn data_dir_override_is_respected() {
    // Pointing the fixture directory somewhere empty breaks only the
    // fixture-backed presets.
    let tmp = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["verify-preset", "a89-twisted-twisted-amalgam"])
        .env("ARCLAB_DATA", tmp.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let ok = bin()
        .args(["verify-preset", "psl2-59-straight-twisted"])
        .env("ARCLAB_DATA", tmp.path())
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    // An explicit --data flag wins over the environment.
    let fixed = bin()
        .args(["verify-preset", "a89-twisted-twisted-amalgam", "--data"])
        .arg(data_dir())
        .env("ARCLAB_DATA", tmp.path())
        .output()
        .unwrap();
    assert_eq!(fixed.status.code(), Some(0));
}

#[test]
fn verify_amalgam_demo_passes() {
    let d = data_dir();
    let out = bin()
        .args(["verify-amalgam", "--group"])
        .arg(d.join("s7_g.gens"))
        .arg("--left")
        .arg(d.join("s7_l.gens"))
        .arg("--right")
        .arg(d.join("s7_r.gens"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: PASS"));
    assert!(text.contains("126 + 210 vertices, 630 edges"));
}

#[test]
fn verify_amalgam_failing_checks_exit_one() {
    // L = S_3 on {1,2,3} and R = D_8 inside S_4: the amalgam generates
    // S_4 but D_8 on its 3 cosets is not 2-transitive, so the check
    // fails without being an operational error.
    let tmp = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = tmp.path().join(name);
        std::fs::write(&p, body).unwrap();
        p
    };
    let g = write("g.gens", "degree 4\n(1,2)\n(1,2,3,4)\n");
    let l = write("l.gens", "degree 4\n(1,2)\n(1,2,3)\n");
    let r = write("r.gens", "degree 4\n(1,2,3,4)\n(1,3)\n");
    let out = bin()
        .args(["verify-amalgam", "--group"])
        .arg(&g)
        .arg("--left")
        .arg(&l)
        .arg("--right")
        .arg(&r)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
    assert!(text.contains("verdict: FAIL"));

    // A non-subgroup input is an operational error, not a failed check.
    let bad = write("bad.gens", "degree 4\n(1,2)(3,4)\n");
    let stray = write("stray.gens", "degree 5\n(4,5)\n");
    let out = bin()
        .args(["verify-amalgam", "--group"])
        .arg(&g)
        .arg("--left")
        .arg(&bad)
        .arg("--right")
        .arg(&stray)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_writes_dot_and_json() {
    let tmp = tempfile::tempdir().unwrap();
    let dot = tmp.path().join("g.dot");
    let json = tmp.path().join("g.json");
    let out = bin()
        .args(["export", "s7-straight-twisted-amalgam", "--format", "dot", "--out"])
        .arg(&dot)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.starts_with("graph "));
    assert!(dot_text.contains("rank=same"));
    assert_eq!(dot_text.matches(" -- ").count(), 630);

    let out = bin()
        .args(["export", "s7-straight-twisted-amalgam", "--format", "json", "--out"])
        .arg(&json)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["vertices_left"], 126);
    assert_eq!(v["vertices_right"], 210);
    assert_eq!(v["edges"].as_array().unwrap().len(), 630);

    // Export of a graph that cannot be materialized is an operational error.
    let out = bin()
        .args(["export", "a89-twisted-twisted-amalgam", "--format", "dot", "--out"])
        .arg(tmp.path().join("nope.dot"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn build_graph_reports_invariants() {
    let out = run(&["build-graph", "s7-straight-twisted-amalgam", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["data"]["vertices_left"], 126);
    assert_eq!(v["data"]["vertices_right"], 210);
    assert_eq!(v["data"]["edges"], 630);
}

#[test]
fn report_to_file_matches_stdout() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("report.json");
    let stdout = run(&["verify-preset", "straight-nondiag-n3", "--json"]);
    assert_eq!(stdout.status.code(), Some(0));
    let filed = bin()
        .args(["verify-preset", "straight-nondiag-n3", "--json", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(filed.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), stdout.stdout);
}
