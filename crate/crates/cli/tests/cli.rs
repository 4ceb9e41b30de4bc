use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use yblie_cli::Manifest;

fn corpus(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(file)
}

fn yblie(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_yblie")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}"));
    (out.status.code().unwrap(), v)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_sl2_passes() {
    let (code, v) = yblie(&["check", path(&corpus("sl2.json")), "sl2"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    let axioms: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["axiom"].as_str().unwrap()).collect();
    for a in ["self_inverse", "yang_baxter", "antisymmetry", "jacobi_right", "compatibility", "jacobi_left"] {
        assert!(axioms.contains(&a), "{a}");
    }
}

#[test]
fn check_broken_sl2_names_jacobi() {
    let (code, v) = yblie(&["check", path(&corpus("sl2-broken.json")), "sl2-broken"]);
    assert_eq!(code, 1);
    let line = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["axiom"] == "jacobi_right")
        .unwrap();
    assert_eq!(line["status"], "fail");
    assert!(line["witness"]["col"].is_u64());
    assert_eq!(line["column_basis"].as_array().unwrap().len(), 3);
}

#[test]
fn input_errors_exit_2() {
    let (code, v) = yblie(&["check", "/nonexistent/manifest.json", "x"]);
    assert_eq!(code, 2);
    assert!(v["error"].is_string());
    let (code, _) = yblie(&["check", path(&corpus("sl2.json")), "no-such-entry"]);
    assert_eq!(code, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"schema_version": "1", "entries": [{"name": "a", "kind": "lie_algebra", "operator": "missing", "bracket": []}]}"#).unwrap();
    assert_eq!(yblie(&["check", path(&bad), "a"]).0, 2);
    std::fs::write(&bad, r#"{"schema_version": "2", "entries": []}"#).unwrap();
    assert_eq!(yblie(&["check", path(&bad), "a"]).0, 2);
}

#[test]
fn construct_commutator_of_mat2() {
    let (code, v) = yblie(&["construct", path(&corpus("mat2.json")), "commutator", "--from", "mat2", "--name", "gl2"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["entry"], "gl2");
    assert_eq!(v["passed"], true);
    let m: Manifest = serde_json::from_value(v["manifest"].clone()).unwrap();
    assert!(m.get("gl2").is_some());
}

#[test]
fn construct_primitives_of_truncpoly() {
    let (code, v) = yblie(&["construct", path(&corpus("truncpoly.json")), "primitives", "--from", "truncpoly"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["basis"], serde_json::json!([["0", "1"]]));
}

#[test]
fn construct_with_singular_alpha() {
    let (code, v) = yblie(&[
        "construct", path(&corpus("sl2.json")), "hom-deform", "--from", "sl2", "--alpha", "1,0,1",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "Singular alpha");
    assert_eq!(v["reason"], "SingularAlpha");
    let (code, v) = yblie(&[
        "construct", path(&corpus("sl2.json")), "hom-deform", "--from", "sl2", "--alpha", "2,1,1",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["reason"], "NotLieMorphism");
}

#[test]
fn construct_writes_reparseable_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sl2-hom.json");
    let (code, v) = yblie(&[
        "construct", path(&corpus("sl2.json")), "hom-deform", "--from", "sl2",
        "--alpha", r#"[["4","0","0"],["0","1","0"],["0","0","1/4"]]"#, "--out", path(&out),
    ]);
    assert_eq!(code, 0, "{v}");
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(Manifest::parse(&text).unwrap().to_json(), text);
    let (code, again) = yblie(&["check", path(&out), "sl2.hom-deform"]);
    assert_eq!(code, 0);
    assert_eq!(again["checks"], v["checks"]);
}

#[test]
fn functor_constructions_and_transport() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("forget.json");
    let (code, v) = yblie(&[
        "construct", path(&corpus("gl11.json")), "forgetful-functor", "--from", "gl11", "--out", path(&f),
    ]);
    assert_eq!(code, 0, "{v}");
    let (code, v) = yblie(&["construct", path(&f), "transport", "--from", "gl11.forgetful-functor"]);
    assert_eq!(code, 0, "{v}");
    let (code, v) = yblie(&["construct", path(&corpus("sl2.json")), "hom-iso-functor", "--from", "sl2", "--alpha", "9,1,1/9"]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn dualize_both_ways() {
    let (code, v) = yblie(&["construct", path(&corpus("sl2.json")), "dualize", "--from", "sl2.dual", "--name", "back"]);
    assert_eq!(code, 0, "{v}");
    let back: Manifest = serde_json::from_value(v["manifest"].clone()).unwrap();
    let original = Manifest::parse(&std::fs::read_to_string(corpus("sl2.json")).unwrap()).unwrap();
    let bracket = |m: &Manifest, n: &str| match &m.get(n).unwrap().body {
        yblie_cli::manifest::Body::LieAlgebra(s) => s.bracket.clone(),
        _ => panic!(),
    };
    assert_eq!(bracket(&back, "back"), bracket(&original, "sl2"));
}

#[test]
fn corpus_verify_bundled_and_dir() {
    let (code, v) = yblie(&["corpus-verify"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["ok"], true);
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(corpus("sl2-broken.json"), dir.path().join("a.json")).unwrap();
    let mut m = Manifest::parse(&std::fs::read_to_string(corpus("sl2-broken.json")).unwrap()).unwrap();
    for e in &mut m.entries {
        e.expect_failures.clear();
    }
    std::fs::write(dir.path().join("b.json"), m.to_json()).unwrap();
    let (code, v) = yblie(&["corpus-verify", "--dir", path(dir.path())]);
    assert_eq!(code, 1);
    assert_eq!(v["files"][0]["entries"][1]["ok"], true);
    assert_eq!(v["files"][1]["entries"][1]["ok"], false);
}
