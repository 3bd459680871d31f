//! Generated instances: canonical seed-0 targets and random realizable ones,
//! in the text formats the command line reads.
//!
//! `cargo run --example fixtures`

use inverse_centrality::feasibility::{check_feasibility, CheckOptions};
use inverse_centrality::generate::{fixture, FixtureKind};
use inverse_centrality::io::{parse_graph, parse_target_for};

fn main() -> inverse_centrality::Result<()> {
    for (kind, n, seed) in [
        (FixtureKind::Star, 5, 0),
        (FixtureKind::Chain, 3, 0),
        (FixtureKind::Chain, 6, 4),
        (FixtureKind::Bipartite, 5, 2),
        (FixtureKind::RandomConnected, 6, 1),
    ] {
        let f = fixture(kind, n, seed)?;
        let graph_text = f.graph.to_edge_list();
        let target_text = f.target.to_text();
        // round trip through the file formats
        let g = parse_graph(&graph_text)?;
        let c = parse_target_for(&g, &target_text)?;
        let feasible = check_feasibility(&g, &c, &CheckOptions::default())?.feasible;
        println!("{kind:?} n={n} seed={seed}: feasible {feasible}");
        print!("{graph_text}---\n{target_text}");
    }
    Ok(())
}
