//! Verify constructed weights exactly and confirm the spectrum numerically.
//!
//! `cargo run --example spectral_verification`

use inverse_centrality::generate::{cycle, paw, realizable_target};
use inverse_centrality::lp::solve_max_min_weight;
use inverse_centrality::rational::int;
use inverse_centrality::spectral::{verify, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE};
use inverse_centrality::{CentralityTarget, Graph, WeightAssignment};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn show(
    name: &str,
    g: &Graph,
    w: &WeightAssignment,
    c: &CentralityTarget,
) -> inverse_centrality::Result<()> {
    let report = verify(g, w, c, DEFAULT_TOLERANCE, DEFAULT_MAX_ITERATIONS)?;
    println!("{name}: {}", if report.passed() { "pass" } else { "fail" });
    println!(
        "  residual zero {}, weights positive {}, irreducible {}",
        report.exact_residual_zero, report.support_full, report.irreducible
    );
    if let (Some(rho), Some(cosine), Some(gap)) = (
        report.rho_estimate,
        report.perron_cosine,
        report.gap_estimate,
    ) {
        println!("  rho {rho:.12}, cosine with c {cosine:.12}, |lambda2|/rho {gap:.4}");
    }
    Ok(())
}

fn main() -> inverse_centrality::Result<()> {
    let g = paw();
    let c = CentralityTarget::from_integers(&[2, 2, 2, 1])?;
    let w = solve_max_min_weight(&g, &c)
        .assignment()
        .cloned()
        .expect("feasible");
    show("paw, c = (2,2,2,1)", &g, &w, &c)?;

    // zero weights split the paw into two edges: eigenvalue 1 is then double
    let boundary = WeightAssignment::from_labels(&[
        ((1, 2), int(1)),
        ((1, 3), int(0)),
        ((2, 3), int(0)),
        ((3, 4), int(1)),
    ]);
    show(
        "paw, c = (1,1,1,1), boundary weights",
        &g,
        &boundary,
        &CentralityTarget::from_integers(&[1, 1, 1, 1])?,
    )?;

    // an even cycle is bipartite, so the unshifted iteration would oscillate
    let g = cycle(6);
    let c = realizable_target(&mut ChaCha8Rng::seed_from_u64(1), &g, 0.0);
    let w = solve_max_min_weight(&g, &c)
        .assignment()
        .cloned()
        .expect("realizable by construction");
    show("C6, generated target", &g, &w, &c)?;
    Ok(())
}
