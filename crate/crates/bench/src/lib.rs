//! Fixtures shared by the criterion benchmarks in `benches/`.

use locsparse::gen::{gnp, random_locally_sparse, random_triangle_free};
use locsparse::occupancy::{tight_beta, Mode, OccupancyCertificate};
use locsparse::Graph;

/// Bounded-degree graph whose neighborhoods are small enough for exhaustive checks.
pub fn sparse_graph(n: usize, max_degree: usize, seed: u64) -> Graph {
    random_locally_sparse(n, max_degree, 4.0, 3, seed).expect("valid parameters")
}

pub fn dense_graph(n: usize, seed: u64) -> Graph {
    gnp(n, 0.3, seed).expect("valid parameters")
}

pub fn triangle_free(n: usize, seed: u64) -> Graph {
    random_triangle_free(n, 3 * n, seed).expect("feasible edge count")
}

/// Uniform certificate with γ = 1 and the smallest passing β.
pub fn passing_certificate(g: &Graph, lambda: f64) -> OccupancyCertificate {
    let beta = tight_beta(g, lambda, 1.0, 0.0).expect("degrees within the checker limit");
    OccupancyCertificate::uniform(g.n(), lambda, Mode::Induced, beta, 1.0).expect("positive parameters")
}
