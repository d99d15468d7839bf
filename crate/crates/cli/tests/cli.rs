use std::path::{Path, PathBuf};
use std::process::Command;

use jsonschema::JSONSchema;
use serde_json::Value;
use tempfile::TempDir;

use locsparse::coloring::twisted_c4;
use locsparse::gen::families;
use locsparse::io::{parse_edge_list, to_edge_list};
use locsparse::Graph;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn locsparse(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_locsparse"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn assert_schema(name: &str, value: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let compiled = JSONSchema::compile(&schema).expect("schema compiles");
    let msgs: Vec<String> = match compiled.validate(value) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("{name} output violates its schema: {msgs:?}\n{value:#}");
}

fn write_graph(dir: &TempDir, name: &str, g: &Graph) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, to_edge_list(g)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn occupancy_of_five_cycle() {
    let dir = TempDir::new().unwrap();
    let c5 = write_graph(&dir, "c5.edges", &families::cycle(5));
    let run = locsparse(&["occupancy", s(&c5), "--lambda", "1"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let out = run.json();
    assert_schema("occupancy", &out);
    assert_eq!(out["occupancy_exact"], "3/11");
    assert!((out["occupancy"].as_f64().unwrap() - 3.0 / 11.0).abs() < 1e-15);

    let run = locsparse(&["occupancy", s(&c5), "--lambda", "1", "--glauber-steps", "200000", "--seed", "4"]);
    let out = run.json();
    assert_schema("occupancy", &out);
    assert!((out["glauber"]["empirical_occupancy"].as_f64().unwrap() - 3.0 / 11.0).abs() < 0.02);
    assert_eq!(locsparse(&["occupancy", s(&c5), "--lambda", "1", "--glauber-steps", "10"]).code, 2);
}

#[test]
fn analyze_verdicts() {
    let dir = TempDir::new().unwrap();
    let k4 = write_graph(&dir, "k4.edges", &families::complete(4));
    let run = locsparse(&["analyze", s(&k4), "--k", "0", "--r", "3"]);
    assert_eq!(run.code, 3);
    let out = run.json();
    assert_schema("analyze", &out);
    assert_eq!(out["verdict"], false);
    assert_eq!(out["violations"].as_array().unwrap().len(), 4);

    let run = locsparse(&["analyze", s(&k4), "--k", "1", "--r", "3"]);
    assert_eq!(run.code, 0);
    assert_schema("analyze", &run.json());
}

#[test]
fn polynomial_and_size_guard() {
    let dir = TempDir::new().unwrap();
    let p3 = write_graph(&dir, "p3.edges", &families::path(3));
    let run = locsparse(&["polynomial", s(&p3)]);
    let out = run.json();
    assert_schema("polynomial", &out);
    assert_eq!(out["coefficients"], serde_json::json!([1, 3, 1]));
    assert_eq!(out["total"], "5");

    let dense = write_graph(&dir, "dense.edges", &locsparse::gen::gnp(40, 0.5, 1).unwrap());
    let run = locsparse(&["polynomial", s(&dense)]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("size guard"));
}

#[test]
fn embed_path_into_six_cycle() {
    let dir = TempDir::new().unwrap();
    let p3 = write_graph(&dir, "p3.edges", &families::path(3));
    let run = locsparse(&["embed", s(&p3), "--delta", "2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let g = parse_edge_list(&run.stdout).unwrap();
    assert_eq!((g.n(), g.m()), (6, 6));
    assert!((0..6).all(|v| g.degree(v) == 2));
    assert_eq!(locsparse::oracle::independence_counts_naive(&g), vec![1, 6, 9, 2]);

    let prefix = dir.path().join("emb");
    let run = locsparse(&["embed", s(&p3), "--delta", "2", "-o", s(&prefix)]);
    let out = run.json();
    assert_schema("embed", &out);
    let homs: Value = serde_json::from_str(&std::fs::read_to_string(out["homs_file"].as_str().unwrap()).unwrap()).unwrap();
    assert_schema("homs", &homs);
    assert_eq!(homs["homs"], serde_json::json!([[0, 1, 2], [3, 4, 5]]));
    assert_eq!(locsparse(&["embed", s(&p3), "--delta", "3"]).code, 2);
}

#[test]
fn certify_tight_and_failing() {
    let dir = TempDir::new().unwrap();
    let k2 = write_graph(&dir, "k2.edges", &families::complete(2));
    let run = locsparse(&["certify", s(&k2), "--lambda", "1", "--beta", "2", "--gamma", "1"]);
    assert_eq!(run.code, 0);
    let out = run.json();
    assert_schema("certify", &out);
    assert_eq!(out["verdict"]["worst_margin"], 0.0);
    assert_eq!(out["certified_bound"], out["exact_occupancy"]);

    let run = locsparse(&["certify", s(&k2), "--lambda", "1", "--beta", "2", "--gamma", "0.99"]);
    assert_eq!(run.code, 3);
    let out = run.json();
    assert_schema("certify", &out);
    assert_eq!(out["verdict"]["witness"]["vertices"].as_array().unwrap().len(), 1);

    let cert_file = dir.path().join("cert.json");
    std::fs::write(&cert_file, out["certificate"].to_string()).unwrap();
    assert_schema("certificate", &out["certificate"]);
    assert_eq!(locsparse(&["certify", s(&k2), "--lambda", "1", "--cert", s(&cert_file)]).code, 3);
    assert_eq!(locsparse(&["certify", s(&k2), "--lambda", "2", "--cert", s(&cert_file)]).code, 2);
    assert_eq!(locsparse(&["certify", s(&k2), "--lambda", "1"]).code, 2);
}

#[test]
fn certify_auto_and_strong() {
    let dir = TempDir::new().unwrap();
    let c5 = write_graph(&dir, "c5.edges", &families::cycle(5));
    let run = locsparse(&["certify", s(&c5), "--lambda", "1", "--auto", "--sigma", "0.1"]);
    let out = run.json();
    assert_schema("certify", &out);
    assert_eq!(out["certificate"]["provenance"]["kind"], "solved");
    assert_eq!(run.code, if out["verdict"]["pass"] == true { 0 } else { 3 });
    if out["verdict"]["pass"] == true {
        assert!(out["certified_bound"].as_f64().unwrap() <= 3.0 / 11.0 + 1e-12);
    }

    let run = locsparse(&["certify", s(&c5), "--lambda", "1", "--gamma", "1", "--strong"]);
    let out = run.json();
    assert_schema("certify", &out);
    assert_eq!(out["certificate"]["mode"], "strong");
}

#[test]
fn coloring_verdicts() {
    let dir = TempDir::new().unwrap();
    let (g, cover) = twisted_c4();
    let c4 = write_graph(&dir, "c4.edges", &g);
    let cover_file = dir.path().join("twisted.json");
    std::fs::write(&cover_file, cover.to_json().to_string()).unwrap();
    assert_schema("cover", &cover.to_json());

    let run = locsparse(&["color", s(&c4), "--cover", s(&cover_file)]);
    assert_eq!(run.code, 3);
    let out = run.json();
    assert_schema("color", &out);
    assert_eq!(out["verdict"], "UNSAT");

    let run = locsparse(&["color", s(&c4), "--cover", s(&cover_file), "--heuristic", "--seed", "1", "--max-iters", "2000"]);
    assert_eq!(run.code, 3);
    assert_eq!(run.json()["verdict"], "GIVE_UP");
    assert_eq!(locsparse(&["color", s(&c4), "--cover", s(&cover_file), "--heuristic"]).code, 2);

    let pet = write_graph(&dir, "pet.edges", &families::petersen());
    let run = locsparse(&["color", s(&pet), "--uniform", "3"]);
    assert_eq!(run.code, 0);
    let out = run.json();
    assert_schema("color", &out);
    assert_eq!(out["coloring"].as_object().unwrap().len(), 10);
    assert_eq!(locsparse(&["color", s(&pet), "--uniform", "2"]).code, 3);
}

#[test]
fn covers_and_conditions() {
    let dir = TempDir::new().unwrap();
    let pet = write_graph(&dir, "pet.edges", &families::petersen());
    for args in [vec!["--fold", "3"], vec!["--fold", "3", "--twist", "full", "--seed", "2"], vec!["--fold", "4", "--twist", "partial", "--seed", "2"]] {
        let mut all = vec!["cover", s(&pet)];
        all.extend(args);
        let run = locsparse(&all);
        assert_eq!(run.code, 0, "{}", run.stderr);
        assert_schema("cover", &run.json());
    }
    assert_eq!(locsparse(&["cover", s(&pet), "--fold", "3", "--twist", "full"]).code, 2);

    let cover = dir.path().join("cover.json");
    std::fs::write(&cover, locsparse(&["cover", s(&pet), "--fold", "3"]).stdout).unwrap();
    let run = locsparse(&["conditions", s(&pet), "--cover", s(&cover), "--mode", "dkps", "--params", r#"{"lambda":1,"beta":2,"gamma":1,"ell":10}"#]);
    assert_eq!(run.code, 3);
    let out = run.json();
    assert_schema("conditions-dkps", &out);
    assert_eq!(out["list_like"], true);
    assert_eq!(out["hypotheses_verified"], false);

    let params = dir.path().join("bknp.json");
    std::fs::write(&params, r#"{"gamma": 0.01}"#).unwrap();
    let run = locsparse(&["conditions", s(&pet), "--cover", s(&cover), "--mode", "bknp", "--params", s(&params)]);
    assert_eq!(run.code, 3);
    assert_schema("conditions-bknp", &run.json());

    let explicit = r#"{"eps":0.25,"ell":[2,2,2,2,2,2,2,2,2,2],"t":[1,1,1,1,1,1,1,1,1,1]}"#;
    let run = locsparse(&["conditions", s(&pet), "--cover", s(&cover), "--mode", "bknp", "--params", explicit]);
    assert_schema("conditions-bknp", &run.json());

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"lists\": {}}").unwrap();
    let run = locsparse(&["conditions", s(&pet), "--cover", s(&bad), "--mode", "bknp", "--params", "{}"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("bad.json"));
}

#[test]
fn iset_outputs() {
    let dir = TempDir::new().unwrap();
    let path = write_graph(&dir, "p800.edges", &families::path(800));
    let run = locsparse(&["iset", s(&path), "--k", "1", "--r", "3"]);
    assert_eq!(run.code, 0);
    let out = run.json();
    assert_schema("iset", &out);
    assert!(out["size"].as_u64().unwrap() as f64 >= out["guarantee"].as_f64().unwrap());

    let pet = write_graph(&dir, "pet.edges", &families::petersen());
    let run = locsparse(&["iset", s(&pet), "--method", "turan"]);
    assert_schema("iset", &run.json());
    let small = locsparse(&["iset", s(&pet), "--k", "1", "--r", "3"]);
    assert_eq!(small.code, 2);
}

#[test]
fn generators() {
    let dir = TempDir::new().unwrap();
    let a = locsparse(&["gen", "gnp", "--params", "n=12,p=0.4", "--seed", "7"]);
    let b = locsparse(&["gen", "gnp", "--params", "n=12,p=0.4", "--seed", "7"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(locsparse(&["gen", "gnp", "--params", "n=12,p=0.4"]).code, 2);
    assert_eq!(locsparse(&["gen", "kneser", "--params", "n=40,k=2"]).code, 2);
    assert_eq!(locsparse(&["gen", "nonsense"]).code, 2);

    let run = locsparse(&["gen", "petersen", "--out-format", "json"]);
    let g: Value = run.json();
    assert_schema("graph", &g);
    assert_eq!(g["edges"].as_array().unwrap().len(), 15);

    let out = dir.path().join("ls.col");
    let run = locsparse(&["gen", "locally-sparse", "--params", "n=30,delta=5,k=0,r=3", "--seed", "3", "-o", s(&out), "--out-format", "dimacs"]);
    assert_eq!(run.code, 0);
    assert_eq!(locsparse(&["analyze", s(&out), "--k", "0", "--r", "3"]).code, 0);
    assert_eq!(locsparse(&["analyze", s(&out), "--format", "dimacs", "--k", "0", "--r", "3"]).code, 0);

    let multi = locsparse(&["gen", "multipartite", "--params", "parts=2:2:2"]);
    assert_eq!(parse_edge_list(&multi.stdout).unwrap().m(), 12);
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "0 1\n1 x\n").unwrap();
    let run = locsparse(&["polynomial", s(&bad)]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line 2"));
    assert_eq!(locsparse(&["polynomial", "/nonexistent/graph.edges"]).code, 2);
    let c5 = write_graph(&dir, "c5.edges", &families::cycle(5));
    assert_eq!(locsparse(&["occupancy", s(&c5), "--lambda", "-1"]).code, 2);
}

#[test]
fn bench_subset() {
    let run = locsparse(&["bench", "--suite", "acceptance", "--criterion", "2", "--json"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    let out = run.json();
    assert_schema("bench", &out);
    assert_eq!(out["passed"], 1);

    let run = locsparse(&["bench", "--suite", "acceptance", "--criterion", "6"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.starts_with("[PASS]  6"));
    assert_eq!(locsparse(&["bench", "--suite", "acceptance", "--criterion", "12"]).code, 2);
}
