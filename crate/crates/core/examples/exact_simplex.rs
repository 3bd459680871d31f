//! The rational simplex on its own: an optimum, an infeasible system with
//! its certificate, and an unbounded problem.
//!
//! `cargo run --example exact_simplex`

use inverse_centrality::lp::{LinearProgram, Relation, SimplexOutcome};
use inverse_centrality::rational::{int, ratio};

fn main() {
    // maximize x + y  s.t.  x + 2y <= 4, 3x + y <= 6
    let lp = LinearProgram::maximize(vec![int(1), int(1)])
        .constraint(vec![int(1), int(2)], Relation::LessEq, int(4))
        .constraint(vec![int(3), int(1)], Relation::LessEq, int(6));
    report("bounded", lp.solve());

    // x + y = 1 and x - y = 3 force y = -1
    let lp = LinearProgram::maximize(vec![int(0), int(0)])
        .constraint(vec![int(1), int(1)], Relation::Equal, int(1))
        .constraint(vec![int(1), int(-1)], Relation::Equal, int(3));
    report("infeasible", lp.solve());

    let lp = LinearProgram::maximize(vec![int(1), int(0)]).constraint(
        vec![int(1), int(-1)],
        Relation::LessEq,
        ratio(1, 2),
    );
    report("unbounded", lp.solve());
}

fn report(name: &str, outcome: SimplexOutcome) {
    match outcome {
        SimplexOutcome::Optimal(s) => {
            let x: Vec<String> = s.x.iter().map(|v| v.to_string()).collect();
            println!("{name}: optimum {} at ({})", s.objective, x.join(", "));
        }
        SimplexOutcome::Infeasible { certificate } => {
            let y: Vec<String> = certificate.iter().map(|v| v.to_string()).collect();
            println!("{name}: no solution, certificate ({})", y.join(", "));
        }
        SimplexOutcome::Unbounded => println!("{name}: unbounded"),
    }
}
