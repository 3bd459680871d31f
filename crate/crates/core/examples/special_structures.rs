//! Structure detection and the closed-form rules, compared with the general
//! checker.
//!
//! `cargo run --example special_structures`

use inverse_centrality::feasibility::{check_feasibility, CheckOptions};
use inverse_centrality::generate::{complete, complete_bipartite, cycle, path, paw, star};
use inverse_centrality::special::{check_structure, detect_structure};
use inverse_centrality::CentralityTarget;

fn main() -> inverse_centrality::Result<()> {
    let cases = [
        (complete(3), vec![1, 1, 1]),
        (complete(3), vec![2, 1, 1]),
        (cycle(4), vec![1, 1, 1, 1]),
        (complete_bipartite(2, 3), vec![3, 3, 2, 2, 2]),
        (star(5), vec![2, 1, 1, 1, 1]),
        (path(3), vec![3, 5, 4]),
        (path(4), vec![1, 2, 2, 1]),
        (paw(), vec![2, 2, 2, 1]),
    ];
    for (g, values) in cases {
        let c = CentralityTarget::from_integers(&values)?;
        let general = check_feasibility(&g, &c, &CheckOptions::default())?.feasible;
        print!("{:<34} c = {values:?}: ", detect_structure(&g).to_string());
        match check_structure(&g, &c) {
            Some(v) => println!("closed form {} (general {general})", v.feasible),
            None => println!("no closed form (general {general})"),
        }
    }
    Ok(())
}
