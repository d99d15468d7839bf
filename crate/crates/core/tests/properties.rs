use proptest::prelude::*;

use locsparse::bounds::{meets_sparse_guarantee, sparse_iset};
use locsparse::coloring::{heuristic_color, random_cover, solve_exact, Outcome, Twist};
use locsparse::embedding::{min_degree_boost, verify_embedding};
use locsparse::gen::{gnp, random_locally_sparse};
use locsparse::hardcore::{independence_polynomial, occupancy_fraction, transfer_z, Family};
use locsparse::io::{parse_graph, write_graph, Format};
use locsparse::occupancy::{certified_bound, check_certificate, tight_beta, Mode, OccupancyCertificate};
use locsparse::oracle;
use locsparse::sparsity::{certify_uniform, count_cliques};
use locsparse::Graph;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..=1.0f64, any::<u64>()).prop_map(|(n, p, seed)| gnp(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_matches_enumeration(g in small_graph(12)) {
        let poly = independence_polynomial(&g).unwrap();
        let naive = oracle::independence_counts_naive(&g);
        let coeffs: Vec<u64> = poly.coeffs().iter().map(|c| u64::try_from(c).unwrap()).collect();
        prop_assert_eq!(coeffs, naive);
    }

    #[test]
    fn clique_counts_match_enumeration(g in small_graph(14), r in 2usize..5) {
        let all: Vec<usize> = (0..g.n()).collect();
        prop_assert_eq!(count_cliques(&g, &all, r), oracle::count_cliques_naive(&g, &all, r));
    }

    #[test]
    fn generated_graphs_are_certified(n in 2usize..40, cap in 1usize..8, k in 0u32..4, r in 2usize..5, seed in any::<u64>()) {
        let g = random_locally_sparse(n, cap, k as f64, r, seed).unwrap();
        prop_assert!(g.max_degree() <= cap);
        prop_assert!(certify_uniform(&g, k as f64, r).unwrap().passes());
        prop_assert_eq!(&g, &random_locally_sparse(n, cap, k as f64, r, seed).unwrap());
    }

    #[test]
    fn sparse_iset_meets_its_guarantee(n in 16usize..60, p in 0.0..0.5f64, seed in any::<u64>()) {
        // a graph with m edges is (m, 2)-sparse
        let g = gnp(n, p, seed).unwrap();
        let k = g.m().max(1) as f64;
        let w = sparse_iset(&g, k, 2).unwrap();
        prop_assert!(oracle::is_independent(&g, &w.vertices));
        prop_assert!(meets_sparse_guarantee(w.size(), n, k, 2));
    }

    #[test]
    fn passing_certificates_bound_occupancy(g in small_graph(9), gamma in 0.2..2.0f64, lambda in 0.1..2.0f64) {
        prop_assume!(g.m() > 0);
        let beta = tight_beta(&g, lambda, gamma, 0.0).unwrap() * (1.0 + 1e-9);
        let cert = OccupancyCertificate::uniform(g.n(), lambda, Mode::Induced, beta, gamma).unwrap();
        prop_assert!(check_certificate(&g, &cert).unwrap().pass);
        let exact = occupancy_fraction(&independence_polynomial(&g).unwrap(), lambda).unwrap();
        prop_assert!(exact >= certified_bound(&cert, g.max_degree()) - 1e-9);
    }

    #[test]
    fn strong_pass_implies_induced_pass(g in small_graph(6), beta in 0.5..6.0f64, gamma in 0.2..2.0f64) {
        let strong = OccupancyCertificate::uniform(g.n(), 1.0, Mode::Strong, beta, gamma).unwrap();
        let induced = OccupancyCertificate::uniform(g.n(), 1.0, Mode::Induced, beta, gamma).unwrap();
        let (s, i) = (check_certificate(&g, &strong).unwrap(), check_certificate(&g, &induced).unwrap());
        prop_assert!(s.worst_margin <= i.worst_margin + 1e-12);
        prop_assert!(!s.pass || i.pass);
    }

    #[test]
    fn exact_solver_agrees_with_enumeration(g in small_graph(7), q in 1usize..4, seed in any::<u64>(), keep in 0.3..1.0f64) {
        let cover = random_cover(&g, q, seed, Twist::Partial(keep)).unwrap();
        let naive = oracle::cover_colorable_naive(&g, &cover);
        match solve_exact(&g, &cover).unwrap() {
            Outcome::Sat(phi) => {
                prop_assert!(naive);
                prop_assert!(phi.validate(&g, &cover).is_ok());
            }
            Outcome::Unsat => prop_assert!(!naive),
        }
        if let Some(phi) = heuristic_color(&g, &cover, seed, 2_000) {
            prop_assert!(phi.validate(&g, &cover).is_ok());
        }
    }

    #[test]
    fn embeddings_verify(g in small_graph(10), seed in any::<u64>()) {
        prop_assume!(g.m() > 0);
        let delta = 1 + (seed as usize) % g.max_degree();
        let (k, r) = (vec![1.0; g.n()], vec![3; g.n()]);
        let res = min_degree_boost(&g, delta, &k, &r).unwrap();
        prop_assert!(verify_embedding(&g, &res, delta, &k, &r).unwrap().ok);
        prop_assert!(res.graph.min_degree() >= delta);
        prop_assert_eq!(res.graph.max_degree(), g.max_degree());
    }

    #[test]
    fn formats_round_trip(g in small_graph(20)) {
        for f in [Format::EdgeList, Format::Dimacs, Format::Json] {
            let text = write_graph(&g, f);
            prop_assert_eq!(&parse_graph(&text, f).unwrap(), &g);
            prop_assert_eq!(write_graph(&parse_graph(&text, f).unwrap(), f), text);
        }
    }

    #[test]
    fn closed_forms_match_polynomials(n in 3usize..21, lambda in 0.05..4.0f64) {
        for (family, g) in [(Family::Path, locsparse::gen::families::path(n)), (Family::Cycle, locsparse::gen::families::cycle(n))] {
            let (z, dz) = transfer_z(family, n, lambda).unwrap();
            let (pz, pdz) = independence_polynomial(&g).unwrap().eval(lambda);
            prop_assert!((z.to_f64() / pz.to_f64() - 1.0).abs() < 1e-12);
            prop_assert!((dz.to_f64() / pdz.to_f64() - 1.0).abs() < 1e-12);
        }
    }
}
