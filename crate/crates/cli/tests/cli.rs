use serde_json::Value;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;

fn netgof(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netgof"))
        .args(args)
        .env_remove("NETGOF_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", stderr(out));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn exact_dist_of_the_four_node_examples() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.edges", "1 2\n1 3\n");
    let b = write(&dir, "b.edges", "1 2\n3 4\n");
    assert_eq!(
        json(&netgof(&["exact-dist", s(&a), "--k", "3", "--nodes", "4"])),
        serde_json::json!({"0": 0.25, "1": 0.5, "2": 0.25})
    );
    assert_eq!(
        json(&netgof(&["exact-dist", s(&b), "--k", "3"])),
        serde_json::json!({"1": 1.0})
    );
    assert_eq!(
        json(&netgof(&["exact-dist", s(&b), "--k", "1"])),
        serde_json::json!({"0": 1.0})
    );
}

#[test]
fn gen_writes_canonical_edge_lists() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("k4.edges");
    let run = netgof(&[
        "gen",
        "gnm",
        "--nodes",
        "4",
        "--edges",
        "6",
        "--seed",
        "1",
        "--out",
        s(&out),
    ]);
    assert!(run.status.success());
    assert_eq!(
        fs::read_to_string(&out).unwrap(),
        "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
    );
    assert!(stderr(&run).contains("|E| = 6"));

    let empty = netgof(&["gen", "gnp", "--nodes", "100", "--p", "0", "--seed", "3"]);
    assert!(empty.status.success());
    assert_eq!(stdout(&empty).lines().count(), 0);

    let two = netgof(&[
        "gen",
        "two-colour",
        "--nodes",
        "1000",
        "--mean-degree",
        "5",
        "--ratio",
        "0.5",
        "--seed",
        "2",
    ]);
    assert!(two.status.success());
    assert!(stderr(&two).contains("q - p = 0.00536"), "{}", stderr(&two));
    let lines: Vec<String> = stdout(&two).lines().map(str::to_owned).collect();
    let mut sorted = lines.clone();
    sorted.sort_by_key(|l| {
        let mut it = l.split(' ').map(|t| t.parse::<usize>().unwrap());
        (it.next().unwrap(), it.next().unwrap())
    });
    assert_eq!(lines, sorted);
}

#[test]
fn test_on_complete_graph_is_degenerate() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.edges", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let run = netgof(&["test", s(&k4), "--method", "approx", "--seed", "7"]);
    let result = json(&run);
    assert_eq!(result["p_value"], 1.0);
    assert_eq!(result["degenerate"], true);
    assert!(stderr(&run).contains("warning"));
}

#[test]
fn test_on_small_network_warns_about_single_bin() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.edges", "1 2\n1 3\n");
    let run = netgof(&[
        "test",
        s(&a),
        "--nodes",
        "4",
        "--method",
        "approx",
        "--k",
        "3",
        "--n",
        "20",
    ]);
    let result = json(&run);
    assert_eq!(result["nodes"], 4);
    assert!(stderr(&run).contains("single bin"));
}

#[test]
fn test_result_schema() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.edges");
    assert!(netgof(&[
        "gen",
        "gnm",
        "--nodes",
        "2000",
        "--edges",
        "5000",
        "--seed",
        "1",
        "--out",
        s(&path)
    ])
    .status
    .success());
    let result = json(&netgof(&[
        "test",
        s(&path),
        "--nodes",
        "2000",
        "--method",
        "approx",
        "--seed",
        "1",
    ]));
    let p = result["p_value"].as_f64().unwrap();
    assert!((0.0..=1.0).contains(&p));
    let bins = result["bins"].as_array().unwrap();
    assert_eq!(result["bin_count"].as_u64().unwrap() as usize, bins.len());
    assert_eq!(result["df"].as_u64().unwrap(), bins.len() as u64 - 1);
    assert_eq!(result["method"], "approximation");
    assert_eq!(result["subgraph_size"], 1414);
    assert_eq!(result["n_subgraphs"], 1000);
    assert_eq!(
        (result["nodes"].as_u64(), result["edges"].as_u64()),
        (Some(2000), Some(5000))
    );
    assert!(result["statistic"].as_f64().unwrap() >= 0.0);
    let observed: u64 = bins.iter().map(|b| b["observed"].as_u64().unwrap()).sum();
    assert_eq!(observed, 1000);
    for b in bins {
        assert!(b["lo"].as_u64().unwrap() <= b["hi"].as_u64().unwrap());
        assert!(b["expected"].as_f64().unwrap() >= 5.0 - 1e-9);
    }
    assert!(result.get("null_stats").is_none());
}

#[test]
fn seeded_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.edges");
    assert!(netgof(&[
        "gen",
        "gnm",
        "--nodes",
        "300",
        "--edges",
        "900",
        "--seed",
        "5",
        "--out",
        s(&path)
    ])
    .status
    .success());
    for method in ["approx", "empirical"] {
        let args = [
            "test",
            s(&path),
            "--method",
            method,
            "--seed",
            "3",
            "--r",
            "40",
            "--n",
            "300",
        ];
        let first = netgof(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, netgof(&args).stdout);
        let mut threaded = args.to_vec();
        threaded.extend(["--threads", "3"]);
        assert_eq!(
            first.stdout,
            netgof(&threaded).stdout,
            "{method} depends on thread count"
        );
    }
}

#[test]
fn threads_fall_back_to_environment() {
    let bad = Command::new(env!("CARGO_BIN_EXE_netgof"))
        .args(["gen", "gnm", "--nodes", "4", "--edges", "1"])
        .env("NETGOF_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "good.edges", "1 2\n2 3\n3 4\n");
    let malformed = write(&dir, "bad.edges", "1 2\n3\n");
    let empty = write(&dir, "empty.edges", "# nothing\n\n");
    let missing = dir.path().join("missing.edges");
    let big = dir.path().join("big.edges");
    assert!(netgof(&[
        "gen",
        "gnm",
        "--nodes",
        "60",
        "--edges",
        "100",
        "--out",
        s(&big)
    ])
    .status
    .success());

    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["--help"], 0),
        (vec!["--version"], 0),
        (vec!["test", s(&good), "--k", "2", "--n", "10"], 0),
        (vec!["test", s(&missing)], 2),
        (vec!["test", s(&malformed)], 2),
        (vec!["test", s(&empty)], 2),
        (vec!["exact-dist", s(&big), "--k", "30"], 2),
        (vec!["test", s(&good), "--bogus"], 1),
        (vec!["frobnicate"], 1),
        (vec!["test", s(&good), "--method", "bayes"], 1),
        (vec!["test", s(&good), "--k", "9"], 1),
        (vec!["test", s(&good), "--n", "5"], 1),
        (vec!["test", s(&good), "--nodes", "2"], 1),
        (vec!["gen", "gnm", "--nodes", "4", "--edges", "7"], 1),
        (vec!["gen", "gnm", "--nodes", "4"], 1),
        (vec!["gen", "gnp", "--nodes", "4", "--p", "1.5"], 1),
        (
            vec![
                "gen",
                "two-colour",
                "--nodes",
                "11",
                "--mean-degree",
                "2",
                "--ratio",
                "0.5",
            ],
            1,
        ),
        (
            vec!["experiment", "significance", "--sizes", "1", "--reps", "1"],
            1,
        ),
        (vec!["experiment", "power", "--alpha", "2"], 1),
        (
            vec![
                "experiment",
                "power",
                "--method",
                "empirical",
                "--sizes",
                "100",
                "--reps",
                "1",
            ],
            1,
        ),
    ];
    for (args, code) in cases {
        let out = netgof(&args);
        assert_eq!(out.status.code(), Some(code), "{args:?}: {}", stderr(&out));
    }
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn experiment_significance_empirical() {
    let run = netgof(&[
        "experiment",
        "significance",
        "--sizes",
        "100",
        "--degrees",
        "5",
        "--reps",
        "50",
        "--method",
        "empirical",
        "--seed",
        "9",
    ]);
    assert!(run.status.success(), "{}", stderr(&run));
    let rows = csv_rows(&stdout(&run));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][1], "empirical");
    let rate: f64 = rows[0][7].parse().unwrap();
    assert!((0.0..=1.0).contains(&rate));
    assert!(stderr(&run).contains("n = 100"));
}

#[test]
fn experiment_power_writes_both_formats() {
    let dir = TempDir::new().unwrap();
    let (csv, json_path) = (dir.path().join("power.csv"), dir.path().join("power.json"));
    let run = netgof(&[
        "experiment",
        "power",
        "--sizes",
        "1000",
        "--degrees",
        "5",
        "--ratios",
        "0.5,1",
        "--reps",
        "100",
        "--seed",
        "4",
        "--csv",
        s(&csv),
        "--json",
        s(&json_path),
    ]);
    assert!(run.status.success(), "{}", stderr(&run));
    assert!(stdout(&run).is_empty());
    let rows = csv_rows(&fs::read_to_string(&csv).unwrap());
    assert_eq!(rows.len(), 2);
    let rates: Vec<f64> = rows.iter().map(|r| r[7].parse().unwrap()).collect();
    assert!(rates[1] >= rates[0], "{rates:?}");
    let parsed: Value = serde_json::from_str(&fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 2);
    assert_eq!(parsed[1]["ratio"], 1.0);
}

#[test]
fn experiment_timing() {
    let run = netgof(&[
        "experiment",
        "timing",
        "--sizes",
        "100,178",
        "--degrees",
        "5",
        "--seed",
        "5",
    ]);
    assert!(run.status.success(), "{}", stderr(&run));
    let rows = csv_rows(&stdout(&run));
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert_eq!(row[0], "timing");
        assert!(row[10].parse::<f64>().unwrap() > 0.0);
    }
}
