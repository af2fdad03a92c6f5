use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn lindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lindex"))
        .args(args)
        .env_remove("LINDEX_MAX_VERTICES")
        .env_remove("LINDEX_MINRANK_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: stdout {:?}, stderr {:?}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

const C3: &str = "digraph 3\n0 1\n1 2\n2 0\n";

#[test]
fn construct_h22_matches_fixture() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("h.txt");
    let o = lindex(&["construct", "--q", "2", "--k", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["n"], 6);
    assert_eq!(fs::read(&out).unwrap(), fs::read(fixture("h_2_2.txt")).unwrap());
    let labels = fs::read_to_string(dir.path().join("h.txt.labels")).unwrap();
    assert_eq!(labels.lines().count(), 6);
}

#[test]
fn construct_sizes_and_custom_labels() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("h.txt");
    let labels = dir.path().join("names");
    let o = lindex(&[
        "construct", "--q", "3", "--k", "2", "--out", out.to_str().unwrap(), "--labels", labels.to_str().unwrap(),
    ]);
    assert_eq!(json(&o)["n"], 12);
    assert_eq!(fs::read_to_string(&labels).unwrap().lines().count(), 12);

    let o = lindex(&["construct", "--q", "2", "--k", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(json(&o)["n"], 1);
    assert_eq!(fs::read_to_string(&out).unwrap(), "digraph 1\n");
}

#[test]
fn lind_both_methods_on_c3() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c3.txt", C3);
    for q in ["2", "3"] {
        let o = lindex(&["lind", "--q", q, "--method", "both", &g]);
        assert_eq!(o.status.code(), Some(0));
        let v = json(&o);
        assert_eq!(v["lind"], 2);
        assert_eq!(v["agree"], true);
        assert_eq!(v["witness"]["hom_lind"], 2);
    }
}

#[test]
fn lind_of_edgeless_and_complete() {
    let dir = TempDir::new().unwrap();
    let empty = write(&dir, "e.txt", "digraph 4\n");
    let complete = write(&dir, "k.txt", "matrix 3\n011\n101\n110\n");
    assert_eq!(json(&lindex(&["lind", "--q", "2", &empty]))["lind"], 4);
    assert_eq!(json(&lindex(&["lind", "--q", "5", "--method", "hom", &complete]))["lind"], 1);
}

#[test]
fn hom_exit_codes() {
    let dir = TempDir::new().unwrap();
    let c3 = write(&dir, "c3.txt", C3);
    let c2 = write(&dir, "c2.txt", "digraph 2\n0 1\n1 0\n");
    let witness = dir.path().join("w.json");

    // C_3 -> C_2 would need an odd cycle to fold onto an even one
    assert_eq!(lindex(&["hom", &c3, &c2]).status.code(), Some(1));
    let o = lindex(&["hom", &c2, &c3, "--witness", witness.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!witness.exists());

    let o = lindex(&["hom", &c3, &c3, "--witness", witness.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let map: Value = serde_json::from_str(&fs::read_to_string(&witness).unwrap()).unwrap();
    assert_eq!(map["map"].as_array().unwrap().len(), 3);

    let h22 = fixture("h_2_2.txt");
    let o = lindex(&["hom", "--complement", &c3, h22.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn bounds_report() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c3.txt", C3);
    let o = lindex(&["bounds", "--q", "3", "--l", "2,3", "--exact", &g]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["exact"], 2);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["lower_bound"], 2);
    let names: Vec<&str> = v["bounds"].as_array().unwrap().iter().map(|b| b["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"chromatic"));
    assert!(names.contains(&"clique_ratio"));
    assert!(names.contains(&"l_colorable_2") && names.contains(&"l_colorable_3"));
}

#[test]
fn props_of_small_graphs() {
    let dir = TempDir::new().unwrap();
    let empty = write(&dir, "e.txt", "digraph 3\n");
    let v = json(&lindex(&["props", &empty]));
    assert_eq!((v["omega"].clone(), v["alpha"].clone(), v["chi_complement"].clone()), (1.into(), 3.into(), 3.into()));
    assert_eq!(v["core_size"], 1);

    let complete = write(&dir, "k.txt", "matrix 3\n0 1 1\n1 0 1\n1 1 0\n");
    let v = json(&lindex(&["props", &complete]));
    assert_eq!((v["omega"].clone(), v["alpha"].clone(), v["chi_complement"].clone()), (3.into(), 1.into(), 1.into()));
    assert_eq!(v["core_size"], 3);

    let v = json(&lindex(&["props", fixture("h_2_2.txt").to_str().unwrap()]));
    assert_eq!(v["n"], 6);
    assert_eq!(v["arcs"], 18);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["--suite", "icd", "--q", "2", "--n", "4"][..],
        &["--suite", "icd", "--q", "3", "--n", "3"],
        &["--suite", "transitivity", "--q", "3", "--k", "2"],
        &["--suite", "coloring", "--q", "2", "--k", "3"],
        &["--suite", "clique", "--q", "5", "--k", "2"],
        &["--suite", "clique", "--q", "2", "--k", "3"],
        &["--suite", "lcolor", "--q", "3", "--k", "4", "--l", "2"],
        &["--suite", "npwitness", "--q", "2", "--k", "3"],
    ] {
        let mut full = vec!["verify"];
        full.extend_from_slice(args);
        let o = lindex(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(json(&o)["passed"], true);
    }
}

#[test]
fn icd_reports_every_digraph() {
    let v = json(&lindex(&["verify", "--suite", "icd", "--q", "2", "--n", "4"]));
    assert_eq!(v["details"]["checked"], 4096);
    assert!(v["details"]["mismatches"].as_array().unwrap().is_empty());
}

#[test]
fn npwitness_fails_for_k1() {
    let o = lindex(&["verify", "--suite", "npwitness", "--q", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["passed"], false);
}

#[test]
fn caps_exit_with_three() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("h.txt");
    let o = lindex(&["--max-vertices", "10", "construct", "--q", "3", "--k", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!out.exists());

    let o = Command::new(env!("CARGO_BIN_EXE_lindex"))
        .args(["construct", "--q", "3", "--k", "2", "--out", out.to_str().unwrap()])
        .env("LINDEX_MAX_VERTICES", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));

    let g = write(&dir, "e.txt", "digraph 5\n");
    assert_eq!(lindex(&["--minrank-cap", "4", "lind", "--q", "2", &g]).status.code(), Some(3));
    assert_eq!(lindex(&["verify", "--suite", "icd", "--n", "5"]).status.code(), Some(3));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bad.txt", "digraph 2\n0 x\n");
    let o = lindex(&["props", &g]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(lindex(&["props", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(lindex(&["construct", "--q", "6", "--k", "2", "--out", "x"]).status.code(), Some(2));
    assert_eq!(lindex(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(lindex(&["--max-vertices", "0", "props", &g]).status.code(), Some(2));
}
