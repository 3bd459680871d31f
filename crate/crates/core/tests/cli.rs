use std::path::PathBuf;
use std::process::Command;

use inverse_centrality::cli::run_from_args;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> inverse_centrality::cli::Output {
    run_from_args(std::iter::once("invcent").chain(args.iter().copied()))
}

fn json(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("valid JSON")
}

#[test]
fn check_reports_tied_witness() {
    let out = run(&["check", &data("paw.graph"), &data("ones.cvec"), "--json"]);
    assert_eq!(out.code, 1);
    let report = json(&out.stdout);
    assert_eq!(report["feasible"], false);
    assert_eq!(report["witness_set"], serde_json::json!([1, 4]));
    assert_eq!(report["witness_family"], "S2");
    assert_eq!(report["lhs"], "2");
    assert_eq!(report["rhs"], "2");
    assert_eq!(report["path"], "general");
}

#[test]
fn check_text_names_decision_path() {
    let out = run(&[
        "check",
        &data("paw.graph"),
        &data("c2221.cvec"),
        "--reduced",
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with(
        "path: stable-set conditions over covering stable sets and the reduced family"
    ));
    assert!(out.stdout.contains("feasible: all 4 conditions hold"));
}

#[test]
fn check_all_witnesses() {
    let out = run(&[
        "check",
        &data("paw.graph"),
        &data("ones.cvec"),
        "--all-witnesses",
        "--json",
    ]);
    let report = json(&out.stdout);
    let sets: Vec<&Value> = report["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| &v["set"])
        .collect();
    assert_eq!(sets.len(), 3);
}

#[test]
fn solve_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let weights = dir.path().join("w.weights");
    let weights = weights.to_str().unwrap();
    let out = run(&[
        "solve",
        &data("paw.graph"),
        &data("c2221.cvec"),
        "--json",
        "--out",
        weights,
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = json(&out.stdout);
    assert_eq!(report["status"], "StrictlyFeasible");
    assert_eq!(report["epsilon_star"], "3/8");
    assert_eq!(report["weights"]["1-2"], "5/8");
    assert_eq!(report["weights"]["1-3"], "3/8");
    assert_eq!(report["weights"]["2-3"], "3/8");
    assert_eq!(report["weights"]["3-4"], "1/2");

    let verified = run(&[
        "verify",
        &data("paw.graph"),
        &data("c2221.cvec"),
        weights,
        "--json",
    ]);
    assert_eq!(verified.code, 0);
    let report = json(&verified.stdout);
    assert_eq!(report["passed"], true);
    assert!((report["rho_estimate"].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn verify_rejects_boundary_weights() {
    let out = run(&[
        "verify",
        &data("paw.graph"),
        &data("ones.cvec"),
        &data("boundary.weights"),
    ]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("fail"));
    assert!(out.stdout.contains("irreducible: no"));
    let good = run(&[
        "verify",
        &data("paw.graph"),
        &data("c2221.cvec"),
        &data("c2221.weights"),
    ]);
    assert_eq!(good.code, 0);
}

#[test]
fn solve_reports_boundary_weights() {
    let out = run(&["solve", &data("paw.graph"), &data("ones.cvec"), "--json"]);
    assert_eq!(out.code, 1);
    let report = json(&out.stdout);
    assert_eq!(report["status"], "BoundaryOnly");
    assert_eq!(report["epsilon_star"], "0");
    assert_eq!(report["weights"], Value::Null);
    assert_eq!(report["boundary_weights"]["1-3"], "0");
}

#[test]
fn json_output_is_stable() {
    for args in [
        vec![
            "check",
            &data("paw.graph"),
            &data("ones.cvec"),
            "--json",
            "--all-witnesses",
        ],
        vec!["solve", &data("paw.graph"), &data("c2221.cvec"), "--json"],
        vec!["fstab", &data("paw.graph"), "--rays", "--json"],
    ] {
        let args: Vec<&str> = args.iter().map(|s| s.as_ref()).collect();
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn reduce_lists_the_family() {
    let out = run(&["reduce", &data("paw.graph")]);
    assert_eq!(
        out.stdout,
        "{1,4} N={2,3} S2\n{2,4} N={1,3} S2\n{3} N={1,2,4} S2\n{4} N={3} S2\n"
    );
}

#[test]
fn fstab_vertices_and_scan() {
    let vertices = run(&["fstab", &data("paw.graph")]);
    assert_eq!(vertices.code, 0);
    assert!(vertices.stdout.lines().any(|l| l == "1/2 1/2 1/2 0"));

    let scan = run(&[
        "fstab",
        &data("paw.graph"),
        "--scan",
        &data("ones.cvec"),
        "1/100",
    ]);
    assert_eq!(scan.code, 1);
    assert!(
        scan.stdout.contains("ray (1 -1 -1 1) [signed]"),
        "{}",
        scan.stdout
    );

    let pass = run(&[
        "fstab",
        &data("paw.graph"),
        "--scan",
        &data("c2221.cvec"),
        "--eps",
        "1/100",
    ]);
    assert_eq!(pass.code, 0, "{}", pass.stdout);
    assert!(
        run(&[
            "fstab",
            &data("paw.graph"),
            "--scan",
            &data("c2221.cvec"),
            "-1"
        ])
        .code
            == 2
    );
}

#[test]
fn fast_path_names_the_structure() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("star");
    let out = run(&["gen", "star", "5", "--out", prefix.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    let graph = format!("{}.graph", prefix.display());
    let cvec = format!("{}.cvec", prefix.display());
    assert_eq!(std::fs::read_to_string(&cvec).unwrap(), "2\n1\n1\n1\n1\n");
    let fast = run(&["check", &graph, &cvec, "--fast"]);
    assert_eq!(fast.code, 0);
    assert!(fast.stdout.contains("closed form for star center 1"));
    let general = run(&["check", &graph, &cvec]);
    assert_eq!(general.code, 0);
}

#[test]
fn generated_fixtures_pass_check() {
    let dir = tempfile::tempdir().unwrap();
    for kind in ["complete", "bipartite", "star", "chain"] {
        for n in 2..=7 {
            for seed in 0..3 {
                let prefix = dir.path().join(format!("{kind}{n}-{seed}"));
                let seed = seed.to_string();
                let n = n.to_string();
                let out = run(&[
                    "gen",
                    kind,
                    &n,
                    "--seed",
                    &seed,
                    "--out",
                    prefix.to_str().unwrap(),
                ]);
                assert_eq!(out.code, 0, "{}", out.stderr);
                let graph = format!("{}.graph", prefix.display());
                let cvec = format!("{}.cvec", prefix.display());
                for extra in [None, Some("--fast")] {
                    let mut args = vec!["check", graph.as_str(), cvec.as_str()];
                    args.extend(extra);
                    let checked = run(&args);
                    assert_eq!(
                        checked.code, 0,
                        "gen {kind} {n} --seed {seed}: {}",
                        checked.stdout
                    );
                }
            }
        }
    }
}

#[test]
fn gen_prints_graph_and_target() {
    let out = run(&["gen", "chain", "3"]);
    assert_eq!(out.stdout, "3 2\n1 2\n2 3\n---\n3\n5\n4\n");
    let complete = run(&["gen", "complete", "3"]);
    assert!(complete.stdout.ends_with("---\n1\n1\n1\n"));
    let random = run(&["gen", "random-connected", "6", "--seed", "3"]);
    assert_eq!(random.code, 0);
    assert!(random.stdout.contains("# sampled target"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run(&["gen", "wheel", "5"]).code, 2);
    assert_eq!(run(&["check", &data("paw.graph")]).code, 2);
    assert_eq!(
        run(&["check", &data("paw.graph"), "/nonexistent.cvec"]).code,
        2
    );
    assert_eq!(
        run(&[
            "check",
            &data("paw.graph"),
            &data("ones.cvec"),
            "--enum-bound",
            "0"
        ])
        .code,
        2
    );
    assert_eq!(
        run(&[
            "check",
            &data("paw.graph"),
            &data("ones.cvec"),
            "--enum-bound",
            "3"
        ])
        .code,
        2
    );
    let mismatch = run(&["check", &data("paw.graph"), &data("paw.graph")]);
    assert_eq!(mismatch.code, 2);
    assert!(mismatch.stderr.starts_with("error:"));
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_invcent");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let infeasible = status(&["check", &data("paw.graph"), &data("ones.cvec")]);
    assert_eq!(infeasible.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&infeasible.stdout).contains("{1,4}"));
    assert_eq!(
        status(&["check", &data("paw.graph"), &data("c2221.cvec")])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(status(&["bogus"]).status.code(), Some(2));
}
