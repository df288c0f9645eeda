//! End-to-end tests driving the compiled binary: JSON/CSV schemas, exit
//! codes, routing of infinite exponents, and byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pdense"))
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is valid JSON")
}

const K3: &str = "a b\nb c\na c\n";
const STAR: &str = "hub l1\nhub l2\nhub l3\n";
const BOWTIE: &str = "0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n";

#[test]
fn peel_reports_triangle_objective() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k3.txt", K3);
    let v = stdout_json(&run(&["peel", &input, "--p", "2"]));
    assert_eq!(v["command"], "peel");
    assert_eq!(v["p"], 2.0);
    assert_eq!(v["algo"], "gen");
    assert_eq!(v["set_size"], 3);
    let mut labels: Vec<&str> = v["set_labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    labels.sort_unstable();
    assert_eq!(labels, ["a", "b", "c"]);
    assert_eq!(v["best_objective"], 4.0);
    assert_eq!(v["metrics"]["avg_pth_power_degree"], 4.0);
    assert_eq!(v["metrics"]["min_degree"], 2);
    assert_eq!(v["order_length"], 3);
    assert_eq!(v["config_echo"]["command"], "peel");
    // Small graph: the per-round objectives are included.
    assert_eq!(v["prefix_objectives"].as_array().unwrap().len(), 3);
}

#[test]
fn peel_routes_infinite_p_to_degree_engine() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "star.txt", STAR);
    let v = stdout_json(&run(&["peel", &input, "--p", "-inf"]));
    assert_eq!(v["algo"], "simple");
    assert_eq!(v["p"], "-inf");
    // Best min-degree prefix of a star has minimum degree 1.
    assert_eq!(v["best_objective"], 1.0);
}

#[test]
fn degree_peel_at_p1_reports_maxcore() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "star.txt", STAR);
    let v = stdout_json(&run(&["peel", &input, "--p", "1", "--algo", "simple"]));
    assert_eq!(v["algo"], "simple");
    assert_eq!(v["maxcore"]["degeneracy"], 1);
    assert_eq!(v["maxcore"]["size"], 4);
}

#[test]
fn empty_input_exits_with_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "empty.txt", "");
    let out = run(&["peel", &input, "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("no edges"), "stderr: {stderr}");
}

#[test]
fn malformed_p_exits_with_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k3.txt", K3);
    let out = run(&["peel", &input, "--p", "nan"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_brute_force_on_bowtie() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bowtie.txt", BOWTIE);
    let v = stdout_json(&run(&[
        "exact",
        &input,
        "--p",
        "1",
        "--method",
        "bruteforce",
    ]));
    assert_eq!(v["command"], "exact");
    assert_eq!(v["method"], "brute_force");
    assert!((v["best_fp"].as_f64().unwrap() - 2.4).abs() < 1e-12);
    assert_eq!(v["set_size"], 5);
    assert!((v["metrics"]["avg_degree"].as_f64().unwrap() - 2.4).abs() < 1e-12);
}

#[test]
fn exact_submodular_on_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k3.txt", K3);
    let v = stdout_json(&run(&["exact", &input, "--p", "2"]));
    assert_eq!(v["method"], "submodular");
    assert_eq!(v["best_fp"], 4.0);
    assert_eq!(v["set_size"], 3);
    assert!(v["alpha_trace"].as_array().unwrap().len() > 1);
    assert_eq!(v["config_echo"]["method"], "submodular");
}

#[test]
fn kcore_reports_star_degeneracy() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "star.txt", STAR);
    let v = stdout_json(&run(&["kcore", &input, "--k", "1"]));
    assert_eq!(v["command"], "kcore");
    assert_eq!(v["degeneracy"], 1);
    assert_eq!(v["maxcore_size"], 4);
    assert_eq!(v["core_sizes"].as_array().unwrap().len(), 2); // k = 0, 1
    assert_eq!(v["core_sizes"][0], 4);
    assert_eq!(v["maxcore_component_sizes"].as_array().unwrap().len(), 1);
    assert_eq!(v["k_core"]["size"], 4);
}

#[test]
fn stats_on_whole_graph_and_subset() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bowtie.txt", BOWTIE);
    let v = stdout_json(&run(&["stats", &input, "--p", "2"]));
    assert_eq!(v["command"], "stats");
    assert_eq!(v["n"], 5);
    assert_eq!(v["m"], 6);
    assert_eq!(v["set_size"], 5);
    assert!((v["metrics"]["avg_pth_power_degree"].as_f64().unwrap() - 6.4).abs() < 1e-12);
    assert!((v["metrics"]["edge_density"].as_f64().unwrap() - 0.6).abs() < 1e-12);

    let set = write(dir.path(), "set.txt", "0\n1\n2\n");
    let v = stdout_json(&run(&["stats", &input, "--p", "1", "--set", &set]));
    assert_eq!(v["set_size"], 3);
    assert_eq!(v["metrics"]["avg_degree"], 2.0);
}

#[test]
fn generate_writes_edge_lists() {
    let out = run(&["generate", "clique", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fam.txt");
    let v = stdout_json(&run(&[
        "generate",
        "bipartite-cliques",
        "2",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]));
    assert_eq!(v["command"], "generate");
    assert_eq!(v["n"], 17);
    assert_eq!(v["m"], 24);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 24);

    let out = run(&["generate", "mystery", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_is_seed_deterministic() {
    let a = run(&["generate", "erdos-renyi", "12", "0.5", "--seed", "3"]);
    let b = run(&["generate", "erdos-renyi", "12", "0.5", "--seed", "3"]);
    let c = run(&["generate", "erdos-renyi", "12", "0.5", "--seed", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn sweep_emits_stable_csv() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bowtie.txt", BOWTIE);
    let out = run(&["sweep", &input, "--p", "-inf,1,2", "--no-timing"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(
        lines[0],
        "p,algo,size,edge_density,avg_degree,avg_squared_degree,max_degree,min_degree,fp,mp,seconds"
    );
    // The -inf row always runs the degree engine.
    assert!(lines[1].starts_with("-inf,simple,"));
    for row in &lines[2..] {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[1], "gen");
        assert_eq!(fields[4], "2.4"); // whole bowtie is best at p = 1 and 2
        assert_eq!(fields[10], "0"); // --no-timing zeroes seconds
    }
    // Byte-identical on rerun.
    let again = run(&["sweep", &input, "--p", "-inf,1,2", "--no-timing"]);
    assert_eq!(out.stdout, again.stdout);

    // Triangle: every row's best set is the whole triangle.
    let k3 = write(dir.path(), "k3.txt", K3);
    let out = run(&["sweep", &k3, "--p", "0.5,1,2", "--no-timing", "--threads", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for row in text.lines().skip(1) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[2], "3");
        assert_eq!(fields[4], "2");
    }
}

#[test]
fn sweep_json_format_parses() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k3.txt", K3);
    let v = stdout_json(&run(&[
        "sweep",
        &input,
        "--p",
        "1,2",
        "--format",
        "json",
        "--no-timing",
    ]));
    assert_eq!(v["command"], "sweep");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["p"], 1.0);
    assert_eq!(rows[0]["algo"], "gen");
    assert_eq!(rows[1]["fp"], 4.0);
    assert_eq!(v["config_echo"]["output_format"], "json");
}

#[test]
fn peel_json_is_deterministic_without_timing() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bowtie.txt", BOWTIE);
    let a = run(&["peel", &input, "--p", "2", "--no-timing"]);
    let b = run(&["peel", &input, "--p", "2", "--no-timing"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seconds"], 0.0);
}
