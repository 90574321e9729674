use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dagpaths"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn extreme_dag(n: usize, m: i64) -> String {
    let mut lines = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            lines.push(format!("{i} {j} {}", if j == i + 1 { -1 } else { m }));
        }
    }
    format!("{n} {}\n{}\n", lines.len(), lines.join("\n"))
}

#[test]
fn apsp_on_extreme_dag() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "extreme5.txt", &extreme_dag(5, 100));
    let out = dir.path().join("d.csv");
    let o = run(&[
        "apsp",
        "--graph",
        &g,
        "--algo",
        "lex",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{o:?}");
    let csv = fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("src,dst,dist\n"));
    assert!(csv.lines().any(|l| l == "0,4,-4"));
    assert!(stdout(&o).contains("max leaf = 1"), "{}", stdout(&o));

    for algo in ["baseline", "bidir"] {
        let o = run(&["apsp", "--graph", &g, "--algo", algo]);
        assert!(o.status.success());
        assert!(stdout(&o).lines().any(|l| l == "0,4,-4"));
    }
}

#[test]
fn sssp_on_edgeless_graph() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "3 0\n");
    let o = run(&["sssp", "--graph", &g, "--source", "0", "--t", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0, inf, inf\n");
    let o = run(&["sssp", "--graph", &g, "--bf"]);
    assert_eq!(stdout(&o), "0, inf, inf\n");
}

#[test]
fn sssp_reports_negative_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "neg.txt", "3 3\n0 1 1\n1 2 -3\n2 1 1\n");
    assert_eq!(run(&["sssp", "--graph", &g]).status.code(), Some(3));
    assert_eq!(run(&["sssp", "--graph", &g, "--bf"]).status.code(), Some(3));
}

#[test]
fn verify_passes_on_random_dag() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("small.txt");
    let g = g.to_str().unwrap();
    let o = run(&[
        "gen", "--n", "10", "--p", "0.4", "--seed", "7", "--mode", "dag", "--out", g,
    ]);
    assert!(o.status.success());
    let o = run(&["verify", "--graph", g]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert!(!text.contains("FAIL"));
    assert!(
        text.lines().filter(|l| l.starts_with("PASS")).count() >= 10,
        "{text}"
    );
}

#[test]
fn verify_skips_dag_checks_on_cyclic_input() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c.txt", "3 3\n0 1 2\n1 2 2\n2 0 2\n");
    let o = run(&["verify", "--graph", &g]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("SKIP dag solvers"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["sssp", "--bogus"]).status.code(), Some(1));

    let g = write(dir.path(), "g.txt", "3 0\n");
    // --t and --bf are exclusive
    assert_eq!(
        run(&["sssp", "--graph", &g, "--t", "1", "--bf"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["sssp", "--graph", &g, "--source", "9"]).status.code(),
        Some(1)
    );

    let bad = write(dir.path(), "bad.txt", "3 1\n0 x 1\n");
    let o = run(&["apsp", "--graph", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let missing = dir.path().join("nope.txt");
    assert_eq!(
        run(&["apsp", "--graph", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let cyc = write(dir.path(), "cyc.txt", "2 2\n0 1 1\n1 0 1\n");
    assert_eq!(run(&["apsp", "--graph", &cyc]).status.code(), Some(3));
    let neg = write(dir.path(), "neg.txt", "2 1\n0 1 -1\n");
    assert_eq!(
        run(&["cyclic", "--graph", &neg, "--d", "2"]).status.code(),
        Some(3)
    );
}

#[test]
fn cyclic_writes_csv_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    // a 4-cycle with a chord
    let g = write(
        dir.path(),
        "c.txt",
        "4 5\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n0 2 5\n",
    );
    let out = dir.path().join("c.csv");
    let o = run(&[
        "cyclic",
        "--graph",
        &g,
        "--d",
        "4",
        "--seed",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{o:?}");
    let csv = fs::read_to_string(&out).unwrap();
    assert!(csv.lines().any(|l| l == "0,2,2"));
    assert!(csv.lines().any(|l| l == "3,2,3"));
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("c.json")).unwrap()).unwrap();
    assert_eq!(summary["n"], 4);
    assert!(summary["sample_size"].as_u64().unwrap() >= 1);
}

#[test]
fn cyclic_reports_exhausted_retries() {
    let dir = tempfile::tempdir().unwrap();
    // two disjoint 2-cycles; one sampled vertex can never break both
    let g = write(dir.path(), "c.txt", "4 4\n0 1 1\n1 0 1\n2 3 1\n3 2 1\n");
    let o = run(&[
        "cyclic",
        "--graph",
        &g,
        "--d",
        "4",
        "--c",
        "0.1",
        "--max-retries",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(5), "{o:?}");
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "--n", "30", "--p", "0.2", "--seed", "11"]);
    let b = run(&["gen", "--n", "30", "--p", "0.2", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["gen", "--n", "30", "--p", "0.2", "--seed", "12"]);
    assert_ne!(a.stdout, c.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("30 "));
}

#[test]
fn bench_quality_writes_csv_and_echo() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q.csv");
    let args = [
        "bench-quality",
        "--n",
        "8,12",
        "--p",
        "0.2",
        "--instances",
        "3",
        "--mode",
        "shifted-digraph",
        "--max-iter",
        "5",
        "--jobs",
        "2",
        "--out",
        out.to_str().unwrap(),
    ];
    assert!(run(&args).status.success());
    let first = fs::read(&out).unwrap();
    let csv = String::from_utf8(first.clone()).unwrap();
    assert!(csv.starts_with("n,p,seed,iter,alg1_sharper,bf_sharper,equal,alg1_exact,bf_exact\n"));
    assert_eq!(csv.lines().count(), 1 + 2 * 3 * 5);
    let echo: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("q.json")).unwrap()).unwrap();
    assert_eq!(echo["mode"], "shifted-digraph");

    assert!(run(&args).status.success());
    assert_eq!(fs::read(&out).unwrap(), first);
}

#[test]
fn bench_timing_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let o = run(&[
        "bench-timing",
        "--n",
        "20",
        "--p",
        "0.3",
        "--trials",
        "2",
        "--lo",
        "0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{o:?}");
    let csv = fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "n,p,algorithm,trials,mean_ms,stddev_ms");
    for alg in ["baseline", "alg2", "alg2bidir", "cyclic", "closure"] {
        assert!(
            rows.iter().any(|r| r.split(',').nth(2) == Some(alg)),
            "{alg}"
        );
    }
    assert!(dir.path().join("t.json").exists());

    let o = run(&[
        "bench-timing",
        "--n",
        "20",
        "--trials",
        "1",
        "--algos",
        "cyclic",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
}
