//! List every stable set with its condition, then the irredundant ones.
//!
//! `cargo run --example reduced_family`

use inverse_centrality::generate::{path, paw};
use inverse_centrality::stable::{
    enumerate_stable_sets, reduced_family, DEFAULT_ENUMERATION_BOUND,
};

fn main() -> inverse_centrality::Result<()> {
    for (name, g) in [("paw", paw()), ("path on 5 vertices", path(5))] {
        println!("{name}: all stable sets");
        for record in enumerate_stable_sets(&g, DEFAULT_ENUMERATION_BOUND)? {
            println!("  {record}");
        }
        let family = reduced_family(&g, DEFAULT_ENUMERATION_BOUND)?;
        println!("{name}: {} strict inequalities remain", family.len());
        for record in &family.sets {
            println!("  {record}");
        }
    }
    Ok(())
}
