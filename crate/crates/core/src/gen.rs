//! Seeded instance generators.
//!
//! Every random generator takes an explicit `u64` seed and draws from ChaCha8, so a
//! given `(params, seed)` pair yields the same edge set on every platform.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{BitGraph, Graph, VertexSet};
use crate::sparsity::{count_cliques_dense, k_floor};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Binomial random graph G(n, p).
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("edge probability p = {p} not in [0, 1]")));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Uniform graph with exactly `m` edges, G(n, m).
pub fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    if m > pairs {
        return Err(Error::pre(format!("{m} edges requested, only {pairs} pairs exist")));
    }
    let mut rng = rng(seed);
    let mut chosen = index::sample(&mut rng, pairs, m).into_vec();
    chosen.sort_unstable();
    let edges: Vec<_> = chosen.into_iter().map(|i| unrank_pair(n, i)).collect();
    Graph::from_edges(n, &edges)
}

/// The i-th pair (u, v), u < v, in lexicographic order.
fn unrank_pair(n: usize, mut i: usize) -> (usize, usize) {
    let mut u = 0;
    loop {
        let row = n - 1 - u;
        if i < row {
            return (u, u + 1 + i);
        }
        i -= row;
        u += 1;
    }
}

/// Random bipartite graph with `m` edges across a random balanced bipartition.
///
/// Bipartite graphs are triangle-free, so the output is (0, 3)-locally-sparse.
pub fn random_triangle_free(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let mut rng = rng(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let (left, right) = perm.split_at(n.div_ceil(2));
    let capacity = left.len() * right.len();
    if m > capacity {
        return Err(Error::pre(format!(
            "{m} edges do not fit a {}x{} bipartition",
            left.len(),
            right.len()
        )));
    }
    let mut chosen = index::sample(&mut rng, capacity, m).into_vec();
    chosen.sort_unstable();
    let edges: Vec<_> = chosen
        .into_iter()
        .map(|i| (left[i / right.len()], right[i % right.len()]))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Greedy (k, r)-locally-sparse graph with maximum degree at most `max_degree`.
///
/// All pairs are visited once in a seeded random order; a pair becomes an edge unless
/// that would exceed the degree cap or push some neighborhood above ⌊k⌋ copies of
/// `K_r`. Rejected pairs are never retried.
pub fn random_locally_sparse(
    n: usize,
    max_degree: usize,
    k: f64,
    r: usize,
    seed: u64,
) -> Result<Graph> {
    if r < 2 {
        return Err(Error::pre(format!("r = {r} must be >= 2")));
    }
    let budget = k_floor(k)?;
    let mut rng = rng(seed);
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);

    let mut rows = vec![VertexSet::new(n); n];
    let mut deg = vec![0usize; n];
    let mut counts = vec![0u64; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] >= max_degree || deg[v] >= max_degree {
            continue;
        }
        let common = rows[u].intersection(&rows[v]);
        // v joins N(u) and u joins N(v): new K_r through the new member
        let gain_uv = cliques_in(&rows, &common, r - 1);
        if counts[u] + gain_uv > budget || counts[v] + gain_uv > budget {
            continue;
        }
        // for w in N(u) ∩ N(v), the new edge uv lies inside N(w)
        let mut gains = Vec::new();
        let mut ok = true;
        for w in common.iter() {
            let inner = rows[w].intersection(&common);
            let gain = cliques_in(&rows, &inner, r - 2);
            if counts[w] + gain > budget {
                ok = false;
                break;
            }
            gains.push((w, gain));
        }
        if !ok {
            continue;
        }
        counts[u] += gain_uv;
        counts[v] += gain_uv;
        for (w, gain) in gains {
            counts[w] += gain;
        }
        rows[u].insert(v);
        rows[v].insert(u);
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u, v));
    }
    edges.sort_unstable();
    Graph::from_edges(n, &edges)
}

fn cliques_in(rows: &[VertexSet], subset: &VertexSet, r: usize) -> u64 {
    if r == 0 {
        return 1;
    }
    if r == 1 {
        return subset.len() as u64;
    }
    let members: Vec<usize> = subset.iter().collect();
    count_cliques_dense(&BitGraph::induced_from_rows(rows, &members), r)
}

/// Deterministic families with known answers.
pub mod families {
    use crate::graph::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    /// Cycle C_n; requires n >= 3.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).expect("complete")
    }

    /// Star K_{1,leaves} with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star")
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &s) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, s));
        }
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v])
            .collect();
        Graph::from_edges(n, &edges).expect("multipartite")
    }

    /// Kneser graph K(n, k): k-subsets of [n], adjacent when disjoint.
    pub fn kneser(n: usize, k: usize) -> Graph {
        assert!(n <= 24, "kneser graph limited to n <= 24");
        let subsets: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect();
        let edges: Vec<_> = (0..subsets.len())
            .flat_map(|i| (i + 1..subsets.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| subsets[i] & subsets[j] == 0)
            .collect();
        Graph::from_edges(subsets.len(), &edges).expect("kneser")
    }

    /// The Petersen graph, K(5, 2).
    pub fn petersen() -> Graph {
        kneser(5, 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparsity::{certify_uniform, count_cliques};

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp(7, 0.0, 1).unwrap().m(), 0);
        assert_eq!(gnp(7, 1.0, 1).unwrap().m(), 21);
        assert!(gnp(3, 1.5, 1).is_err());
    }

    #[test]
    fn seeded_replay_is_identical() {
        let a = gnp(12, 0.4, 7).unwrap();
        let b = gnp(12, 0.4, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            random_locally_sparse(20, 6, 2.0, 3, 5).unwrap(),
            random_locally_sparse(20, 6, 2.0, 3, 5).unwrap()
        );
        assert_eq!(gnm(15, 30, 3).unwrap(), gnm(15, 30, 3).unwrap());
    }

    #[test]
    fn gnm_has_exact_edge_count() {
        assert_eq!(gnm(10, 45, 0).unwrap().m(), 45);
        assert_eq!(gnm(10, 17, 9).unwrap().m(), 17);
        assert!(gnm(4, 7, 0).is_err());
    }

    #[test]
    fn triangle_free_generator() {
        let g = random_triangle_free(40, 200, 11).unwrap();
        assert_eq!(g.m(), 200);
        assert!(certify_uniform(&g, 0.0, 3).unwrap().passes());
        assert!(random_triangle_free(4, 5, 0).is_err());
    }

    #[test]
    fn locally_sparse_generator_respects_budget() {
        for seed in 0..5 {
            let g = random_locally_sparse(25, 8, 3.0, 3, seed).unwrap();
            assert!(g.max_degree() <= 8);
            assert!(certify_uniform(&g, 3.0, 3).unwrap().passes());
            let h = random_locally_sparse(20, 19, 0.0, 2, seed).unwrap();
            let all: Vec<_> = (0..20).collect();
            assert_eq!(count_cliques(&h, &all, 3), 0);
        }
    }

    #[test]
    fn family_facts() {
        let p = families::petersen();
        assert_eq!(p.n(), 10);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert!(certify_uniform(&p, 0.0, 3).unwrap().passes());
        let km = families::complete_multipartite(&[2, 3, 2]);
        let all: Vec<_> = (0..7).collect();
        assert!(count_cliques(&km, &all, 3) > 0);
        assert_eq!(count_cliques(&km, &all, 4), 0);
        assert!(certify_uniform(&families::path(30), 1.0, 3).unwrap().passes());
        assert_eq!(families::star(9).max_degree(), 9);
    }
}
