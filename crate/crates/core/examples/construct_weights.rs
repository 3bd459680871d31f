//! Build edge weights with the exact simplex and inspect the three outcomes.
//!
//! `cargo run --example construct_weights`

use inverse_centrality::generate::{paw, star};
use inverse_centrality::io::format_weights;
use inverse_centrality::lp::solve_max_min_weight;
use inverse_centrality::CentralityTarget;

fn main() -> inverse_centrality::Result<()> {
    let cases = [
        ("paw", paw(), vec![2, 2, 2, 1]),
        ("paw", paw(), vec![1, 1, 1, 1]),
        ("paw", paw(), vec![1, 3, 1, 1]),
        ("star", star(5), vec![2, 1, 1, 1, 1]),
    ];
    for (name, g, values) in cases {
        let c = CentralityTarget::from_integers(&values)?;
        let result = solve_max_min_weight(&g, &c);
        println!("{name} with c = {values:?}: {:?}", result.status);
        if let Some(eps) = &result.epsilon_star {
            println!("  largest achievable minimum weight: {eps}");
        }
        if let Some(weights) = &result.weights {
            for line in format_weights(weights).lines() {
                println!("  {line}");
            }
        }
    }
    Ok(())
}
