//! Decide whether a vector is realizable and read the violated condition.
//!
//! `cargo run --example check_feasibility`

use inverse_centrality::feasibility::{check_feasibility, explain, CheckOptions};
use inverse_centrality::generate::paw;
use inverse_centrality::CentralityTarget;

fn main() -> inverse_centrality::Result<()> {
    // triangle 1 2 3 with vertex 4 hanging off 3
    let g = paw();

    for values in [[1, 1, 1, 1], [2, 2, 2, 1], [1, 2, 3, 1]] {
        let c = CentralityTarget::from_integers(&values)?;
        let verdict = check_feasibility(&g, &c, &CheckOptions::default())?;
        println!("c = {values:?}");
        println!("  {}", explain(&verdict));
    }

    // every violated condition, not just the first
    let c = CentralityTarget::from_integers(&[1, 1, 1, 1])?;
    let options = CheckOptions {
        all_witnesses: true,
        ..CheckOptions::default()
    };
    let verdict = check_feasibility(&g, &c, &options)?;
    println!("all witnesses for c = (1,1,1,1):");
    println!("{}", explain(&verdict));
    Ok(())
}
