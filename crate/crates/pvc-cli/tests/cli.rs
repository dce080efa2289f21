//! End-to-end tests driving the `pvc` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use pvc_kernel::solve_pvc_exact;
use pvc_kernel::Graph;

const FIG1: &str = "p edge 7 6\ne 5 1\ne 5 2\ne 6 2\ne 6 3\ne 7 2\ne 7 4\n";

fn pvc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pvc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn kernelize_reports_reduced_instance() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "fig1.gr", FIG1);
    let json_path = dir.path().join("report.json");
    let out = pvc(&[
        "kernelize",
        "--input",
        &input,
        "-k",
        "1",
        "-l",
        "3",
        "--variant",
        "additive",
        "--oracle-check",
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["outcome"], "reduced");
    assert_eq!(report["input"]["n"], 7);
    assert_eq!(report["input"]["m"], 6);
    assert_eq!(report["kernel"]["n"], 7);
    assert_eq!(report["bound"], 16);
    assert_eq!(report["bound_satisfied"], true);
    assert_eq!(report["vclp"]["doubled_value"], 6);
    assert_eq!(report["vclp"]["v0"], 4);
    assert_eq!(report["vclp"]["v1"], 3);
    assert_eq!(report["vclp"]["vhalf"], 0);
    assert_eq!(report["steps"].as_array().unwrap().len(), 0);
    assert_eq!(report["oracle"]["original_answer"], "yes");
    assert_eq!(report["oracle"]["kernel_answer"], "yes");
    assert_eq!(report["oracle"]["agree"], true);
    // the --json file carries the same document
    let file_report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(file_report, report);
}

#[test]
fn kernelize_decides_no_via_lp_bound() {
    let dir = tempfile::tempdir().unwrap();
    let k5: String = {
        let mut text = String::from("p edge 5 10\n");
        for u in 1..=5 {
            for v in (u + 1)..=5 {
                text.push_str(&format!("e {u} {v}\n"));
            }
        }
        text
    };
    let input = write(dir.path(), "k5.gr", &k5);
    let out = pvc(&[
        "kernelize", "--input", &input, "-k", "0", "-l", "1", "--variant", "expansion",
        "--oracle-check",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["outcome"], "no");
    let steps = report["steps"].as_array().unwrap();
    assert!(steps.iter().any(|s| s["rule"] == 2));
    assert_eq!(report["oracle"]["agree"], true);
}

#[test]
fn kernelize_decides_yes_on_large_star() {
    let dir = tempfile::tempdir().unwrap();
    let star: String = {
        let mut text = String::from("p edge 101 100\n");
        for v in 2..=101 {
            text.push_str(&format!("e 1 {v}\n"));
        }
        text
    };
    let input = write(dir.path(), "star.gr", &star);
    let out = pvc(&[
        "kernelize", "--input", &input, "-k", "1", "-l", "1", "--variant", "additive",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["outcome"], "yes");
    let steps = report["steps"].as_array().unwrap();
    assert!(steps.iter().any(|s| s["rule"] == 4 && s["k_dec"] == 1));
    // every deleted label exists in the input file
    for step in steps {
        for label in step["deleted"].as_array().unwrap() {
            let label = label.as_u64().unwrap();
            assert!((1..=101).contains(&label), "unknown label {label}");
        }
    }
    assert_eq!(report["oracle"], serde_json::Value::Null);
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.gr", "p edge 2 1\ne 1 1\n");
    let out = pvc(&[
        "kernelize", "--input", &input, "-k", "1", "-l", "0", "--variant", "expansion",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("self-loop"), "stderr: {stderr}");
}

#[test]
fn missing_input_exits_two() {
    let out = pvc(&[
        "kernelize", "--input", "/nonexistent/x.gr", "-k", "1", "-l", "0", "--variant",
        "expansion",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_flags_exit_two() {
    let out = pvc(&["kernelize", "--variant", "sideways"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn gen_er_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.gr");
    let b = dir.path().join("b.gr");
    for path in [&a, &b] {
        let out = pvc(&[
            "gen", "er", "--n", "10", "--p", "0.3", "--seed", "1", "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(format!("{}.params.json", a.display())).unwrap())
            .unwrap();
    assert_eq!(sidecar["model"], "er");
    assert_eq!(sidecar["seed"], 1);
}

#[test]
fn gen_er_empty_graph_has_zero_header() {
    let out = pvc(&["gen", "er", "--n", "0", "--p", "0.5", "--seed", "9"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("p edge 0 0"), "output: {text}");
}

#[test]
fn gen_er_rejects_bad_probability() {
    let out = pvc(&["gen", "er", "--n", "5", "--p", "1.5", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_planted_is_a_yes_instance() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("planted.gr");
    let out = pvc(&[
        "gen", "planted", "--n", "12", "--k", "2", "--l", "1", "--seed", "7", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let graph = Graph::parse_dimacs(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(solve_pvc_exact(&graph, 2, 1).unwrap().answer);

    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(format!("{}.params.json", path.display())).unwrap())
            .unwrap();
    let solution: Vec<usize> = sidecar["solution"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();
    assert_eq!(solution.len(), 2);
    let idx: Vec<usize> = solution.iter().map(|&l| graph.index_of_label(l).unwrap()).collect();
    assert_eq!(graph.edges_after_delete(&idx).unwrap(), 1);
}

#[test]
fn bench_emits_expected_csv() {
    let dir = tempfile::tempdir().unwrap();
    let suite = write(
        dir.path(),
        "suite.json",
        r#"{"entries": [{"n": 8, "p": 0.3, "k": 1, "l": 1, "seeds": [1, 2]},
                        {"n": 10, "p": 0.2, "k": 2, "l": 2, "seeds": [5]}]}"#,
    );
    let out = pvc(&["bench", "--suite", &suite]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "instance,variant,n,m,k,l,kernel_n,kernel_m,kernel_k,bound,bound_ok,rule1,rule2,rule3,rule4,oracle_agree,time_ms"
    );
    // 3 instances x 2 variants + 2 aggregate rows
    assert_eq!(lines.len(), 1 + 6 + 2);
    let header_fields = lines[0].split(',').count();
    for row in &lines[1..7] {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), header_fields, "row: {row}");
        assert_eq!(fields[10], "true", "bound_ok in row: {row}");
        assert_eq!(fields[15], "true", "oracle_agree in row: {row}");
        // the additive bound column is (max(l,1)+1)(k+l); 2k+2 for l = 1
        if fields[1] == "additive" {
            let k: usize = fields[4].parse().unwrap();
            let l: usize = fields[5].parse().unwrap();
            assert_eq!(fields[9], ((l.max(1) + 1) * (k + l)).to_string(), "row: {row}");
            if l == 1 {
                assert_eq!(fields[9], (2 * k + 2).to_string(), "row: {row}");
            }
        }
    }
    assert!(lines[7].starts_with("aggregate,expansion,"));
    assert!(lines[8].starts_with("aggregate,additive,"));
}

#[test]
fn bench_hundred_seeds_all_agree_within_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let seeds: Vec<String> = (0..100).map(|s| s.to_string()).collect();
    let suite = write(
        dir.path(),
        "suite.json",
        &format!(
            r#"{{"entries": [{{"n": 14, "p": 0.2, "k": 2, "l": 2, "seeds": [{}]}}]}}"#,
            seeds.join(", ")
        ),
    );
    let csv_path = dir.path().join("rows.csv");
    let out = pvc(&["bench", "--suite", &suite, "--out", csv_path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 200 + 2);
    for row in lines[1..201].iter() {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[10], "true", "bound_ok in row: {row}");
        assert_eq!(fields[15], "true", "oracle_agree in row: {row}");
    }
}

#[test]
fn bench_rejects_malformed_suite() {
    let dir = tempfile::tempdir().unwrap();
    let suite = write(dir.path(), "bad.json", "{\"entries\": [{\"n\": }]}");
    let out = pvc(&["bench", "--suite", &suite]);
    assert_eq!(out.status.code(), Some(2));
}
