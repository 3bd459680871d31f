//! Vertices of the fractional stable set polytope from their level-set
//! description, checked against brute-force basic solutions.
//!
//! `cargo run --example polytope_vertices`

use inverse_centrality::fstab::{brute_force_vertices, enumerate_fstab_vertices, extreme_rays};
use inverse_centrality::generate::{complete, cycle, path};

fn main() -> inverse_centrality::Result<()> {
    for (name, g) in [("K3", complete(3)), ("C5", cycle(5)), ("P4", path(4))] {
        let vertices = enumerate_fstab_vertices(&g, 25)?;
        println!("{name}: {} vertices", vertices.len());
        for v in &vertices {
            println!("  {v}");
        }
        let mut built: Vec<_> = vertices.iter().map(|v| v.y()).collect();
        built.sort();
        println!(
            "  matches brute force: {}",
            built == brute_force_vertices(&g)?
        );
        for ray in extreme_rays(&g, 25)? {
            println!("  ray ({ray}) [{}]", ray.class());
        }
    }
    Ok(())
}
