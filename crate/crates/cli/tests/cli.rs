use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_startop")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn ok(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    json(&out)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "cycle:4"]);
    let b = run(&["gen", "cycle:4"]);
    assert_eq!(a.stdout, b.stdout);
    let facets = json(&a)["facets"].as_array().unwrap().clone();
    assert_eq!(facets.len(), 4);
    assert!(facets.iter().all(|f| f.as_array().unwrap().len() == 2));

    let h = json(&run(&["gen", "homology3sphere"]));
    assert_eq!(h["facets"].as_array().unwrap().len(), 90);

    let r1 = run(&["gen", "random:14:30", "--seed", "3"]);
    let r2 = run(&["gen", "random:14:30", "--seed", "3"]);
    let r3 = run(&["gen", "random:14:30", "--seed", "4"]);
    assert_eq!(r1.stdout, r2.stdout);
    assert_ne!(r1.stdout, r3.stdout);

    let g = json(&run(&["gen", "fig1", "--graph"]));
    assert_eq!(g["edges"].as_array().unwrap().len(), 8);
}

#[test]
fn gen_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("h.json");
    ok_status(&["gen", "homology3sphere", "-o", p.to_str().unwrap()]);
    let r = ok(&["report", p.to_str().unwrap()]);
    assert_eq!(r["simplices"], 392);
    assert_eq!(r["betti"], serde_json::json!([1, 0, 0, 1]));
}

fn ok_status(args: &[&str]) {
    assert_eq!(run(args).status.code(), Some(0), "{args:?}");
}

#[test]
fn reports() {
    let r = ok(&["report", "octahedron"]);
    assert_eq!(r["schema"], "startop/1");
    assert_eq!(r["euler"], 2);
    assert_eq!(r["wu2"], 2);
    assert_eq!(r["betti"], serde_json::json!([1, 0, 1]));
    assert_eq!(r["recognition"]["manifold"], 2);
    assert_eq!(r["recognition"]["sphere"], 2);

    let f = ok(&["report", "fig1", "--topology-count"]);
    assert_eq!(f["simplices"], 17);
    assert_eq!(f["open_set_count"], 3032);

    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.json", "");
    let e = ok(&["report", &empty]);
    assert_eq!(e["euler"], 0);
    assert_eq!(e["dimension"], -1);
}

#[test]
fn exit_codes() {
    let out = run(&["report", "fig1", "--topology-count", "--limit", "100"]);
    assert_eq!(out.status.code(), Some(3));
    let partial = json(&out);
    assert_eq!(partial["open_set_limit"]["limit"], 100);
    assert_eq!(partial["euler"], ok(&["report", "fig1"])["euler"]);

    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"facets\": [[1,2]");
    assert_eq!(run(&["report", &bad]).status.code(), Some(2));
    assert_eq!(run(&["report", "no-such-thing"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "random:x"]).status.code(), Some(2));

    let out = run(&["homeo", "octahedron", "twosphere", "--max-refine", "0", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["result"], "inconclusive");
}

#[test]
fn homeomorphism_verdicts() {
    let v = ok(&["homeo", "cycle:5", "cycle:6"]);
    assert_eq!(v["result"], "homeomorphic");
    assert_eq!(v["certificate"]["kind"], "normal_form");

    let v = ok(&["homeo", "figure8", "digital8"]);
    assert_eq!(v["result"], "not_homeomorphic");
    assert_eq!(v["certificate"]["invariant"], "wu2");

    let dir = tempfile::tempdir().unwrap();
    let refined = String::from_utf8(run(&["refine", "octahedron"]).stdout).unwrap();
    let p = write(dir.path(), "oct1.json", &refined);
    let v = ok(&["homeo", "octahedron", &p, "--max-refine", "1"]);
    assert_eq!(v["result"], "homeomorphic");
    assert_eq!(v["certificate"]["backward"]["kind"]["projection"], 1);
}

#[test]
fn refinements() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = String::from_utf8(run(&["refine", "complete:3"]).stdout).unwrap();
    let p = write(dir.path(), "k3.json", &k3);
    assert_eq!(ok(&["report", &p])["f_vector"], serde_json::json!([7, 12, 6]));
    let e = String::from_utf8(run(&["refine", "octahedron", "--edge", "1,2"]).stdout).unwrap();
    let p = write(dir.path(), "e.json", &e);
    let r = ok(&["recognize", &p]);
    assert_eq!(r["manifold"], 2);
    assert_eq!(run(&["refine", "octahedron", "--edge", "1,1"]).status.code(), Some(2));
}

#[test]
fn matrices_and_cohomology() {
    let csv = run(&["matrix", "complete:2", "--kind", "derivative", "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "0,0,0\n0,0,0\n-1,1,0\n");
    let m = ok(&["matrix", "complete:2", "--kind", "green", "--order", "2"]);
    assert_eq!(m["legend"], serde_json::json!(["(1)", "(2)", "(1,2)"]));
    assert_eq!(m["rows"].as_array().unwrap().len(), 3);
    let l = ok(&["matrix", "cycle:4", "--kind", "connection"]);
    assert_eq!(l["matrix"], "connection");

    assert_eq!(ok(&["betti", "cycle:4"])["betti"], serde_json::json!([1, 1]));
    let w = run(&["wubetti", "onesphere", "--format", "csv"]);
    assert_eq!(String::from_utf8(w.stdout).unwrap(), "0,1,1\n");
}

#[test]
fn lefschetz_of_a_rotation() {
    let dir = tempfile::tempdir().unwrap();
    let map = write(dir.path(), "rot.json", r#"{"map": [[1,2],[2,3],[3,4],[4,1]]}"#);
    let r = ok(&["lefschetz", "cycle:4", &map]);
    assert_eq!(r["lefschetz_number"], 0);
    assert_eq!(r["index_sum"], 0);
    let refl = write(dir.path(), "refl.json", r#"{"map": [[1,1],[2,4],[3,3],[4,2]]}"#);
    let r = ok(&["lefschetz", "cycle:4", &refl]);
    assert_eq!(r["lefschetz_number"], 2);
    assert_eq!(run(&["lefschetz", "cycle:4", &write(dir.path(), "x.json", "{}")]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for suite in ["energy", "gaussbonnet", "valuation", "refinement"] {
        let r = ok(&["verify", suite, "--seed", "7", "--count", "5"]);
        assert_eq!(r["passed"], true, "{suite}");
        assert_eq!(r["failures"], 0);
    }
    let a = run(&["verify", "lefschetz", "--count", "1"]);
    let b = run(&["verify", "lefschetz", "--count", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn recognition_verbs() {
    let r = ok(&["recognize", "wheel:4"]);
    assert_eq!(r["ball"], 2);
    assert_eq!(r["boundary_facets"].as_array().unwrap().len(), 4);
    let r = ok(&["recognize", "cycle:4"]);
    assert_eq!(r["sphere"], 1);
    assert_eq!(r["dehn_sommerville"], true);
}
