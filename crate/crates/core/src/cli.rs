//! Command-line front end: argument definitions and report rendering.
//!
//! [`run`] never prints; it returns the exit code and both output streams so
//! the binary stays a thin wrapper and tests can drive every subcommand.
//! Exit codes: `0` feasible or verified, `1` infeasible or failed
//! verification, `2` usage, I/O or parse errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::feasibility::{check_feasibility, explain, CheckOptions, Violation};
use crate::fstab::{enumerate_fstab_vertices, extreme_rays, farkas_scan, RayViolation};
use crate::generate::{fixture, FixtureKind};
use crate::graph::Graph;
use crate::io::{format_weights, parse_graph, parse_target_for, parse_weights};
use crate::lp::{solve_max_min_weight, LpStatus};
use crate::rational::{parse_rational, Rational};
use crate::special::check_structure;
use crate::spectral::{verify, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE};
use crate::stable::{reduced_family, DEFAULT_ENUMERATION_BOUND};
use crate::target::CentralityTarget;

#[derive(Debug, Parser)]
#[command(
    name = "invcent",
    version,
    about = "Decide and construct edge weights that realize a given eigenvector centrality"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide realizability of a centrality vector on a graph.
    Check {
        graph: PathBuf,
        cvec: PathBuf,
        /// Test only the irredundant strict inequalities.
        #[arg(long)]
        reduced: bool,
        /// Use the closed-form rule when the graph is complete, complete
        /// bipartite, a star or a path.
        #[arg(long)]
        fast: bool,
        /// Report every violated condition instead of the first.
        #[arg(long)]
        all_witnesses: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND, value_parser = parse_bound)]
        enum_bound: usize,
    },
    /// Construct weights maximizing the smallest edge weight.
    Solve {
        graph: PathBuf,
        cvec: PathBuf,
        #[arg(long)]
        json: bool,
        /// Also write the weights in the `i j p/q` format.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check that a weight file realizes the centrality vector.
    Verify {
        graph: PathBuf,
        cvec: PathBuf,
        weights: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITERATIONS)]
        max_iter: usize,
    },
    /// Vertices of the fractional stable set polytope, their rays, or the
    /// ray test of a target at a given slack.
    Fstab {
        graph: PathBuf,
        /// Print the rays `2y - 1` instead of the vertices.
        #[arg(long)]
        rays: bool,
        /// Test `q(eps)^T x <= 0` on every ray for the target in CVEC.
        #[arg(long, num_args = 1..=2, value_names = ["CVEC", "EPS"])]
        scan: Option<Vec<String>>,
        /// Slack for `--scan` when not given inline (default 0).
        #[arg(long)]
        eps: Option<String>,
        /// Keep scanning after the first violated ray.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND, value_parser = parse_bound)]
        enum_bound: usize,
    },
    /// List the irredundant strict-inequality stable sets.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND, value_parser = parse_bound)]
        enum_bound: usize,
    },
    /// Emit a graph and a target: complete, bipartite, star, chain or
    /// random-connected.
    Gen {
        kind: String,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write PREFIX.graph and PREFIX.cvec instead of printing.
        #[arg(long, value_name = "PREFIX")]
        out: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn report(success: bool, stdout: String) -> Self {
        Output {
            code: if success { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(message: String) -> Self {
        Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Output {
    let result = match &cli.command {
        Command::Check {
            graph,
            cvec,
            reduced,
            fast,
            all_witnesses,
            json,
            enum_bound,
        } => {
            let options = CheckOptions {
                use_reduced: *reduced,
                all_witnesses: *all_witnesses,
                enumeration_bound: *enum_bound,
            };
            check(graph, cvec, &options, *fast, *json)
        }
        Command::Solve {
            graph,
            cvec,
            json,
            out,
        } => solve(graph, cvec, *json, out.as_deref()),
        Command::Verify {
            graph,
            cvec,
            weights,
            json,
            tol,
            max_iter,
        } => verify_weights(graph, cvec, weights, *json, *tol, *max_iter),
        Command::Fstab {
            graph,
            rays,
            scan,
            eps,
            full,
            json,
            enum_bound,
        } => fstab(
            graph,
            *rays,
            scan.as_deref(),
            eps.as_deref(),
            *full,
            *json,
            *enum_bound,
        ),
        Command::Reduce {
            graph,
            json,
            enum_bound,
        } => reduce(graph, *json, *enum_bound),
        Command::Gen { kind, n, seed, out } => gen(kind, *n, *seed, out.as_deref()),
    };
    result.unwrap_or_else(Output::failure)
}

fn parse_bound(text: &str) -> std::result::Result<usize, String> {
    match text.parse::<usize>() {
        Ok(bound) if bound >= 1 => Ok(bound),
        _ => Err(format!("expected an integer >= 1, got {text:?}")),
    }
}

type CommandResult = std::result::Result<Output, String>;

fn read(path: &Path) -> std::result::Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn in_file(path: &Path) -> impl Fn(Error) -> String + '_ {
    move |e| format!("{}: {e}", path.display())
}

fn load_graph(path: &Path) -> std::result::Result<Graph, String> {
    parse_graph(&read(path)?).map_err(in_file(path))
}

fn load_target(graph: &Graph, path: &Path) -> std::result::Result<CentralityTarget, String> {
    parse_target_for(graph, &read(path)?).map_err(in_file(path))
}

fn parse_eps(text: &str) -> std::result::Result<Rational, String> {
    let eps = parse_rational(text).ok_or_else(|| format!("not a rational number: {text:?}"))?;
    if eps < Rational::from_integer(0.into()) {
        return Err(format!("eps must be >= 0, got {eps}"));
    }
    Ok(eps)
}

fn to_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    text
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "set": v.record.set.labels(),
        "neighborhood": v.record.neighborhood.labels(),
        "family": v.record.family,
        "lhs": v.lhs.to_string(),
        "rhs": v.rhs.to_string(),
    })
}

fn check(
    graph: &Path,
    cvec: &Path,
    options: &CheckOptions,
    fast: bool,
    json: bool,
) -> CommandResult {
    let g = load_graph(graph)?;
    let c = load_target(&g, cvec)?;
    if fast {
        if let Some(verdict) = check_structure(&g, &c) {
            let verb = if verdict.feasible {
                "feasible"
            } else {
                "infeasible"
            };
            let stdout = if json {
                to_json(&json!({
                    "feasible": verdict.feasible,
                    "path": "corollary",
                    "structure": verdict.structure,
                    "clause": verdict.clause,
                }))
            } else {
                format!(
                    "path: closed form for {}\n{verb}: {} {}\n",
                    verdict.structure,
                    verdict.clause,
                    if verdict.feasible { "holds" } else { "fails" }
                )
            };
            return Ok(Output::report(verdict.feasible, stdout));
        }
    }
    let verdict = check_feasibility(&g, &c, options).map_err(|e| e.to_string())?;
    let path = if options.use_reduced {
        "reduced"
    } else {
        "general"
    };
    let stdout = if json {
        let witness = verdict.witness.as_ref();
        let mut report = json!({
            "feasible": verdict.feasible,
            "path": path,
            "conditions_checked": verdict.conditions_checked,
            "witness_set": witness.map(|w| w.record.set.labels()),
            "witness_neighborhood": witness.map(|w| w.record.neighborhood.labels()),
            "witness_family": witness.map(|w| w.record.family),
            "lhs": witness.map(|w| w.lhs.to_string()),
            "rhs": witness.map(|w| w.rhs.to_string()),
        });
        if options.all_witnesses {
            report["violations"] = verdict.violations.iter().map(violation_json).collect();
        }
        to_json(&report)
    } else {
        let description = if options.use_reduced {
            "covering stable sets and the reduced family"
        } else {
            "all stable sets"
        };
        format!(
            "path: stable-set conditions over {description}\n{}\n",
            explain(&verdict)
        )
    };
    Ok(Output::report(verdict.feasible, stdout))
}

fn solve(graph: &Path, cvec: &Path, json: bool, out: Option<&Path>) -> CommandResult {
    let g = load_graph(graph)?;
    let c = load_target(&g, cvec)?;
    let result = solve_max_min_weight(&g, &c);
    let feasible = result.status == LpStatus::StrictlyFeasible;
    if let (Some(path), Some(weights)) = (out, result.assignment()) {
        std::fs::write(path, format_weights(weights))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    let stdout = if json {
        let mut report = json!({
            "status": result.status,
            "epsilon_star": result.epsilon_star.as_ref().map(|e| e.to_string()),
            "weights": result.assignment().map(|w| w.to_json_map()),
        });
        if result.status == LpStatus::BoundaryOnly {
            report["boundary_weights"] = json!(result.weights.as_ref().map(|w| w.to_json_map()));
        }
        to_json(&report)
    } else {
        let mut text = String::from("path: exact simplex, maximizing the smallest edge weight\n");
        let _ = writeln!(text, "status: {:?}", result.status);
        match (&result.epsilon_star, &result.weights) {
            (Some(eps), Some(weights)) => {
                let _ = writeln!(text, "epsilon*: {eps}");
                let heading = if feasible {
                    "weights:"
                } else {
                    "no strictly positive solution; optimal nonnegative weights:"
                };
                let _ = writeln!(text, "{heading}");
                text.push_str(&format_weights(weights));
            }
            _ => text.push_str("no nonnegative solution\n"),
        }
        text
    };
    Ok(Output::report(feasible, stdout))
}

fn float_json(value: Option<f64>) -> Value {
    value.map_or(Value::Null, |v| json!(v))
}

fn verify_weights(
    graph: &Path,
    cvec: &Path,
    weights: &Path,
    json: bool,
    tol: f64,
    max_iter: usize,
) -> CommandResult {
    let g = load_graph(graph)?;
    let c = load_target(&g, cvec)?;
    let w = parse_weights(&g, &read(weights)?).map_err(in_file(weights))?;
    let report = verify(&g, &w, &c, tol, max_iter).map_err(|e| e.to_string())?;
    let passed = report.passed();
    let stdout = if json {
        to_json(&json!({
            "passed": passed,
            "exact_residual_zero": report.exact_residual_zero,
            "support_full": report.support_full,
            "irreducible": report.irreducible,
            "converged": report.converged,
            "iterations": report.iterations,
            "rho_estimate": float_json(report.rho_estimate),
            "perron_cosine": float_json(report.perron_cosine),
            "gap_estimate": float_json(report.gap_estimate),
        }))
    } else {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let mut text = String::from("path: exact residual, support and connectivity checks\n");
        let _ = writeln!(text, "{}", if passed { "pass" } else { "fail" });
        let _ = writeln!(
            text,
            "exact residual zero: {}",
            yes_no(report.exact_residual_zero)
        );
        let _ = writeln!(
            text,
            "all weights positive: {}",
            yes_no(report.support_full)
        );
        let _ = writeln!(text, "irreducible: {}", yes_no(report.irreducible));
        if report.irreducible && !report.converged {
            let _ = writeln!(
                text,
                "power iteration did not converge within {max_iter} iterations"
            );
        }
        if let (Some(rho), Some(cosine), Some(gap)) = (
            report.rho_estimate,
            report.perron_cosine,
            report.gap_estimate,
        ) {
            let _ = writeln!(text, "rho estimate: {rho:.12}");
            let _ = writeln!(text, "perron cosine: {cosine:.12}");
            let _ = writeln!(text, "|lambda2|/rho estimate: {gap:.6}");
        }
        text
    };
    Ok(Output::report(passed, stdout))
}

fn ray_violation_json(v: &RayViolation) -> Value {
    json!({
        "ray": v.ray.x,
        "class": v.class.to_string(),
        "value": v.value.to_string(),
    })
}

fn fstab(
    graph: &Path,
    rays: bool,
    scan: Option<&[String]>,
    eps: Option<&str>,
    full: bool,
    json: bool,
    bound: usize,
) -> CommandResult {
    let g = load_graph(graph)?;
    if let Some(args) = scan {
        let eps = match (args.get(1), eps) {
            (Some(_), Some(_)) => {
                return Err("give eps either inline with --scan or with --eps".into())
            }
            (Some(text), None) => parse_eps(text)?,
            (None, Some(text)) => parse_eps(text)?,
            (None, None) => Rational::from_integer(0.into()),
        };
        let c = load_target(&g, Path::new(&args[0]))?;
        let result = farkas_scan(&g, &c, &eps, full, bound).map_err(|e| e.to_string())?;
        let stdout = if json {
            to_json(&json!({
                "passed": result.passed,
                "eps": eps.to_string(),
                "q": result.q.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                "rays_checked": result.rays_checked,
                "first_failure": result.first_failure.as_ref().map(ray_violation_json),
                "failures": result.failures.iter().map(ray_violation_json).collect::<Vec<_>>(),
            }))
        } else {
            let mut text = format!("path: ray test of q(eps) at eps = {eps}\n");
            match &result.first_failure {
                None => {
                    let _ = writeln!(text, "pass: q^T x <= 0 on all {} rays", result.rays_checked);
                }
                Some(first) => {
                    let _ = writeln!(
                        text,
                        "fail: ray ({}) [{}] gives q^T x = {} > 0",
                        first.ray, first.class, first.value
                    );
                    if full {
                        let _ = writeln!(text, "{} violated rays:", result.failures.len());
                        for v in &result.failures {
                            let _ = writeln!(text, "  ({}) [{}] {}", v.ray, v.class, v.value);
                        }
                    }
                }
            }
            text
        };
        return Ok(Output::report(result.passed, stdout));
    }
    let stdout = if rays {
        let rays = extreme_rays(&g, bound).map_err(|e| e.to_string())?;
        if json {
            let list: Vec<Value> = rays
                .iter()
                .map(|r| json!({ "x": r.x, "class": r.class().to_string() }))
                .collect();
            to_json(&json!({ "rays": list }))
        } else {
            rays.iter().map(|r| format!("{r}\n")).collect()
        }
    } else {
        let vertices = enumerate_fstab_vertices(&g, bound).map_err(|e| e.to_string())?;
        if json {
            let list: Vec<Vec<String>> = vertices
                .iter()
                .map(|v| v.y().iter().map(|y| y.to_string()).collect())
                .collect();
            to_json(&json!({ "vertices": list }))
        } else {
            vertices.iter().map(|v| format!("{v}\n")).collect()
        }
    };
    Ok(Output::report(true, stdout))
}

fn reduce(graph: &Path, json: bool, bound: usize) -> CommandResult {
    let g = load_graph(graph)?;
    let family = reduced_family(&g, bound).map_err(|e| e.to_string())?;
    let stdout = if json {
        let sets: Vec<Value> = family
            .sets
            .iter()
            .map(|r| json!({ "set": r.set.labels(), "neighborhood": r.neighborhood.labels() }))
            .collect();
        to_json(&json!({ "sets": sets }))
    } else {
        family.sets.iter().map(|r| format!("{r}\n")).collect()
    };
    Ok(Output::report(true, stdout))
}

fn gen(kind: &str, n: usize, seed: u64, out: Option<&Path>) -> CommandResult {
    let kind: FixtureKind = kind.parse().map_err(|e: Error| e.to_string())?;
    let fixture = fixture(kind, n, seed).map_err(|e| e.to_string())?;
    let graph_text = fixture.graph.to_edge_list();
    let mut target_text = String::new();
    if !fixture.classified {
        target_text.push_str("# sampled target, realizability not known\n");
    }
    target_text.push_str(&fixture.target.to_text());
    match out {
        Some(prefix) => {
            let mut written = String::new();
            for (extension, text) in [("graph", &graph_text), ("cvec", &target_text)] {
                let path = PathBuf::from(format!("{}.{extension}", prefix.display()));
                std::fs::write(&path, text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                let _ = writeln!(written, "wrote {}", path.display());
            }
            Ok(Output::report(true, written))
        }
        None => Ok(Output::report(
            true,
            format!("{graph_text}---\n{target_text}"),
        )),
    }
}
