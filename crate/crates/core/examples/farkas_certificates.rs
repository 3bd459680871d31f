//! Infeasibility proofs: a certificate from the simplex and the violated ray
//! from the polytope scan, for the same slack.
//!
//! `cargo run --example farkas_certificates`

use inverse_centrality::fstab::farkas_scan;
use inverse_centrality::generate::paw;
use inverse_centrality::lp::{farkas_certificate, is_valid_certificate, solve_max_min_weight};
use inverse_centrality::rational::{int, ratio};
use inverse_centrality::CentralityTarget;

fn main() -> inverse_centrality::Result<()> {
    let g = paw();
    let c = CentralityTarget::from_integers(&[2, 2, 2, 1])?;
    let eps_star = solve_max_min_weight(&g, &c)
        .epsilon_star
        .expect("this target is feasible");
    println!("c = (2,2,2,1), largest minimum weight {eps_star}");

    for eps in [
        &eps_star / int(2),
        eps_star.clone(),
        &eps_star + ratio(1, 100),
    ] {
        let scan = farkas_scan(&g, &c, &eps, false, 25)?;
        match farkas_certificate(&g, &c, &eps) {
            None => println!("eps = {eps}: solvable, all {} rays pass", scan.rays_checked),
            Some(x) => {
                let shown: Vec<String> = x.iter().map(|v| v.to_string()).collect();
                println!("eps = {eps}: certificate ({})", shown.join(", "));
                println!("  valid: {}", is_valid_certificate(&g, &c, &eps, &x));
                if let Some(first) = scan.first_failure {
                    println!(
                        "  first violated ray ({}) [{}], q^T x = {}",
                        first.ray, first.class, first.value
                    );
                }
            }
        }
    }
    Ok(())
}
