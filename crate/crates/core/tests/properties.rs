use inverse_centrality::feasibility::{check_feasibility, CheckOptions};
use inverse_centrality::fstab::{enumerate_fstab_vertices, extreme_rays, farkas_scan, RayClass};
use inverse_centrality::generate::{random_connected, random_target, realizable_target};
use inverse_centrality::lp::{
    farkas_certificate, is_valid_certificate, shifted_rhs, solve_max_min_weight, LpStatus,
};
use inverse_centrality::rational::{int, ratio, Rational};
use inverse_centrality::special::{
    check_complete_bipartite, check_star, detect_structure, StructureTag,
};
use inverse_centrality::spectral::{build_matrix, verify_exact};
use inverse_centrality::stable::{enumerate_stable_sets, reduced_family, Family};
use inverse_centrality::{CentralityTarget, Graph};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BOUND: usize = 25;

/// A random connected graph on 2..=7 vertices with a random or realizable
/// target.
fn instance() -> impl Strategy<Value = (Graph, CentralityTarget)> {
    (2usize..=7, 0.0f64..0.8, any::<u64>(), 0u8..3).prop_map(|(n, density, seed, mode)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, n, density);
        let c = match mode {
            0 => random_target(&mut rng, n, 9, 4),
            1 => realizable_target(&mut rng, &g, 0.0),
            _ => realizable_target(&mut rng, &g, 0.5),
        };
        (g, c)
    })
}

fn feasible(g: &Graph, c: &CentralityTarget) -> bool {
    check_feasibility(g, c, &CheckOptions::default())
        .unwrap()
        .feasible
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn checker_matches_lp((g, c) in instance()) {
        let lp = solve_max_min_weight(&g, &c);
        prop_assert_eq!(feasible(&g, &c), lp.status == LpStatus::StrictlyFeasible);
        let reduced = check_feasibility(&g, &c, &CheckOptions::reduced()).unwrap();
        prop_assert_eq!(reduced.feasible, feasible(&g, &c));
    }

    #[test]
    fn lp_solutions_are_exact((g, c) in instance()) {
        let lp = solve_max_min_weight(&g, &c);
        prop_assert_eq!(lp.epsilon_star.is_some(), lp.status != LpStatus::Infeasible);
        if let (Some(eps), Some(w)) = (&lp.epsilon_star, &lp.weights) {
            prop_assert_eq!(Some(eps), w.min_weight());
            prop_assert_eq!(eps.is_positive(), lp.status == LpStatus::StrictlyFeasible);
        }
        if let Some(w) = lp.assignment() {
            prop_assert!(verify_exact(&g, w, &c));
            let a = build_matrix(&g, w).unwrap();
            for i in 0..g.n() {
                prop_assert!(a.get(i, i).is_zero());
                for j in 0..g.n() {
                    prop_assert_eq!(a.get(i, j), a.get(j, i));
                }
            }
        }
    }

    #[test]
    fn certificates_are_valid_and_monotone((g, c) in instance(), num in 0i64..20, den in 1i64..20) {
        let eps = ratio(num, den);
        let certificate = farkas_certificate(&g, &c, &eps);
        if let Some(x) = &certificate {
            prop_assert!(is_valid_certificate(&g, &c, &eps, x));
            // infeasible at eps stays infeasible above it
            prop_assert!(farkas_certificate(&g, &c, &(&eps * int(2) + int(1))).is_some());
        } else {
            // feasible at eps stays feasible below it
            prop_assert!(farkas_certificate(&g, &c, &(&eps / int(2))).is_none());
        }
        let scan = farkas_scan(&g, &c, &eps, false, BOUND).unwrap();
        prop_assert_eq!(scan.passed, certificate.is_none());
    }

    #[test]
    fn scale_invariance((g, c) in instance(), num in 1i64..30, den in 1i64..30) {
        let scaled = c.scaled(&ratio(num, den)).unwrap();
        let a = check_feasibility(&g, &c, &CheckOptions::default()).unwrap();
        let b = check_feasibility(&g, &scaled, &CheckOptions::default()).unwrap();
        prop_assert_eq!(a.feasible, b.feasible);
        prop_assert_eq!(a.witness.map(|w| w.record), b.witness.map(|w| w.record));
    }

    #[test]
    fn bipartite_parts_balance((g, c) in instance()) {
        if let Some(color) = g.two_coloring(g.vertices()) {
            if feasible(&g, &c) {
                let other = g.vertices().difference(color);
                prop_assert_eq!(c.square_sum(color), c.square_sum(other));
            }
        }
    }

    #[test]
    fn pendant_vertices_are_smaller((g, c) in instance()) {
        if !feasible(&g, &c) {
            return Ok(());
        }
        for j in 0..g.n() {
            if g.degree(j) == 1 {
                let k = g.neighbors(j)[0];
                let covering = enumerate_stable_sets(&g, BOUND)
                    .unwrap()
                    .any(|r| r.set.len() == 1 && r.set.contains(j) && r.family == Family::Covering);
                if !covering {
                    prop_assert!(c.value(j) < c.value(k));
                }
            }
        }
    }

    #[test]
    fn reduced_family_holds_open_stable_sets((g, _c) in instance()) {
        for record in reduced_family(&g, BOUND).unwrap().sets {
            prop_assert_eq!(record.family, Family::Open);
            prop_assert!(g.is_stable(record.set));
        }
    }

    #[test]
    fn polytope_vertices_satisfy_the_characterization((g, _c) in instance()) {
        for v in enumerate_fstab_vertices(&g, BOUND).unwrap() {
            prop_assert!(g.is_stable(v.ones));
            prop_assert!(g.external_neighborhood(v.ones).is_subset(v.zeros));
            for component in g.induced_components(v.halves) {
                prop_assert!(g.two_coloring(component).is_none());
            }
            let y = v.y();
            for &(i, j) in g.edges() {
                prop_assert!(&y[i] + &y[j] <= int(1));
            }
        }
        if g.two_coloring(g.vertices()).is_some() {
            prop_assert!(enumerate_fstab_vertices(&g, BOUND).unwrap().iter().all(|v| v.halves.is_empty()));
        }
    }

    #[test]
    fn rays_lie_in_the_cone((g, c) in instance()) {
        let q = shifted_rhs(&g, &c, &Rational::zero());
        for ray in extreme_rays(&g, BOUND).unwrap() {
            prop_assert!(ray.in_cone(&g));
            prop_assert!(ray.x.iter().any(|&x| x != 0));
            // with q >= 0, rays without positive entries never fail
            if ray.class() == RayClass::NonPositive {
                prop_assert!(!ray.dot(&q).is_positive());
            }
        }
    }

    #[test]
    fn star_rule_matches_bipartite_rule(leaves in 1usize..9, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = inverse_centrality::generate::star(leaves + 1);
        prop_assert_eq!(detect_structure(&g), StructureTag::Star { center: 0 });
        let c = if seed % 2 == 0 { realizable_target(&mut rng, &g, 0.0) } else { random_target(&mut rng, g.n(), 5, 2) };
        let center = inverse_centrality::VertexSet::singleton(0);
        let rest = g.vertices().difference(center);
        prop_assert_eq!(check_star(&c, 0), check_complete_bipartite(&c, center, rest));
        prop_assert_eq!(check_star(&c, 0), feasible(&g, &c));
    }
}
