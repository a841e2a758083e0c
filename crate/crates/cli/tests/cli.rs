use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const P4: &str =
    r#"{"n":2,"blocks":[{"vertices":[1],"branch_sizes":[2]},{"vertices":[2],"branch_sizes":[2]}]}"#;

fn fanideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fanideal"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn composite(op: &str) -> String {
    format!(r#"{{"op":"{op}","left":{{"spec":{P4},"leaf":3}},"right":{{"spec":{P4},"leaf":4}}}}"#)
}

#[test]
fn build_fan_and_composite() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "p4.json", P4);
    let out = dir.path().join("g.json");
    let o = fanideal(&["build", &spec, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let g: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(g["edges"].as_array().unwrap().len(), 3);
    assert_eq!(g["slots"].as_array().unwrap().len(), 2);

    let c = write(&dir, "c.json", &composite("circ"));
    let o = fanideal(&["build", &c]);
    assert_eq!(o.status.code(), Some(0));
    let g = json_out(&o);
    assert_eq!(g["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(g["edges"].as_array().unwrap().len(), 4);
    assert!(g["joint"].is_u64());
}

#[test]
fn build_rejects_invalid_branch_size() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "bad.json",
        r#"{"n":3,"blocks":[{"vertices":[1,2],"branch_sizes":[2,2]}]}"#,
    );
    let o = fanideal(&["build", &spec]);
    assert_eq!(o.status.code(), Some(1));
    let e = stderr(&o);
    assert!(
        e.contains("a must exceed position") && e.contains("block 1, position 2"),
        "{e}"
    );
}

#[test]
fn invariants_of_p4_and_two_triangles() {
    let dir = TempDir::new().unwrap();
    let o = fanideal(&["invariants", &write(&dir, "p4.json", P4)]);
    assert_eq!(o.status.code(), Some(0));
    let r = json_out(&o);
    assert_eq!(r["verdict"], "match");
    assert_eq!(
        (r["formula"]["depth"].as_u64(), r["formula"]["reg"].as_u64()),
        (Some(2), Some(1))
    );
    assert_eq!(r["oracle"]["depth"], r["formula"]["depth"]);

    let tt = write(
        &dir,
        "tt.json",
        r#"{"n":3,"blocks":[{"vertices":[1],"branch_sizes":[3]}]}"#,
    );
    let o = fanideal(&["invariants", &tt, "--field", "q"]);
    let r = json_out(&o);
    assert_eq!(r["verdict"], "match");
    for key in ["formula", "oracle"] {
        let got = ["dim", "depth", "reg"].map(|k| r[key][k].as_u64().unwrap());
        assert_eq!(got, [2, 1, 2], "{key}");
    }

    let o = fanideal(&[
        "invariants",
        &tt,
        "--method",
        "formula",
        "--format",
        "table",
    ]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(
        text.starts_with("formula") && !text.contains("oracle"),
        "{text}"
    );
}

#[test]
fn composites_report_depth_and_regularity() {
    let dir = TempDir::new().unwrap();
    for (op, want) in [("circ", [2, 2]), ("star", [3, 2])] {
        let o = fanideal(&["invariants", &write(&dir, "c.json", &composite(op))]);
        assert_eq!(o.status.code(), Some(0));
        let r = json_out(&o);
        assert_eq!(r["verdict"], "match", "{op}");
        assert_eq!(
            [
                r["formula"]["depth"].as_u64().unwrap(),
                r["formula"]["reg"].as_u64().unwrap()
            ],
            want
        );
        assert!(r["formula"]["intermediates"]["depth_s"].is_u64());
    }
}

#[test]
fn formula_on_raw_graph_is_an_error() {
    let dir = TempDir::new().unwrap();
    let g = write(
        &dir,
        "g.json",
        r#"{"vertices":[1,2,3],"edges":[[1,2],[2,3]]}"#,
    );
    for method in ["formula", "both"] {
        let o = fanideal(&["invariants", &g, "--method", method]);
        assert_eq!(o.status.code(), Some(1));
        assert!(stderr(&o).contains("--method oracle"));
    }
    let o = fanideal(&["invariants", &g, "--method", "oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o)["oracle"]["reg"], 1);
}

#[test]
fn oversized_graph_hits_capacity() {
    let dir = TempDir::new().unwrap();
    let big = write(
        &dir,
        "big.json",
        r#"{"n":2,"blocks":[{"vertices":[1],"branch_sizes":[20]}]}"#,
    );
    let o = fanideal(&["invariants", &big, "--method", "oracle"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("16"), "{}", stderr(&o));
    assert_eq!(
        fanideal(&["invariants", &big, "--method", "formula"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn decompose_contracts() {
    let dir = TempDir::new().unwrap();
    let p3 = write(
        &dir,
        "p3.json",
        r#"{"vertices":[1,2,3],"edges":[[1,2],[2,3]]}"#,
    );
    let o = fanideal(&["decompose", &p3, "--vertex", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json_out(&o);
    assert_eq!(r["contracts"].as_array().unwrap().len(), 4);
    assert!(r["contracts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));

    let k4 = write(&dir, "k4.json", r#"{"n":4,"blocks":[]}"#);
    for v in ["1", "4"] {
        let o = fanideal(&["decompose", &k4, "--vertex", v, "--format", "table"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(
            String::from_utf8(o.stdout).unwrap().matches("PASS").count(),
            4
        );
    }

    let o = fanideal(&["decompose", &p3, "--vertex", "7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("vertex 7"));
}

#[test]
fn betti_engines_agree() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.json", P4);
    let h = json_out(&fanideal(&["betti", &p4]));
    let t = json_out(&fanideal(&[
        "betti", &p4, "--engine", "taylor", "--field", "q",
    ]));
    assert_eq!(h, t);
    assert_eq!((h["depth"].as_u64(), h["reg"].as_u64()), (Some(2), Some(1)));
    let table = fanideal(&["betti", &p4, "--format", "table"]);
    assert!(String::from_utf8(table.stdout).unwrap().contains("pd 2"));
}

#[test]
fn verify_paths_and_reproducibility() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("paths.jsonl");
    let o = fanideal(&[
        "verify",
        "--family",
        "paths",
        "--max-vertices",
        "12",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = json_out(&o);
    assert_eq!(
        (s["total"].as_u64(), s["counts"]["match"].as_u64()),
        (Some(11), Some(11))
    );
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 12);

    let run = |name: &str| {
        let p = dir.path().join(name);
        let args = [
            "verify",
            "--family",
            "star",
            "--max-vertices",
            "10",
            "--samples",
            "25",
            "--seed",
            "99",
        ];
        let o = fanideal(&[&args[..], &["--out", p.to_str().unwrap()]].concat());
        assert_eq!(o.status.code(), Some(0));
        fs::read(Path::new(&p)).unwrap()
    };
    assert_eq!(run("a.jsonl"), run("b.jsonl"));
}

#[test]
fn usage_errors() {
    assert_eq!(fanideal(&[]).status.code(), Some(1));
    assert_eq!(
        fanideal(&["verify", "--family", "trees"]).status.code(),
        Some(1)
    );
    assert_eq!(
        fanideal(&["invariants", "x.json", "--method", "guess"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(fanideal(&["help"]).status.code(), Some(0));
}
