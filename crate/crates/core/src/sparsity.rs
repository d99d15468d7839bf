//! Clique and subgraph-copy counting, and (k, r)-local-sparsity certificates.
//!
//! A graph is (k, r)-sparse when it contains at most ⌊k⌋ cliques on r vertices, and
//! (k, r)-locally-sparse when every neighborhood `G[N(v)]` is (k(v), r(v))-sparse.
//! Copies of a pattern `F` are counted as distinct subgraphs (vertex set plus edge
//! set), not necessarily induced, so for `F = K_r` they coincide with r-cliques.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BitGraph, Graph, Vertex, VertexSet};

/// Patterns with more vertices than this are rejected by the copy and
/// automorphism counters.
pub const MAX_PATTERN_VERTICES: usize = 10;

/// ⌊k⌋ as an integer budget, saturating at `u64::MAX`.
pub fn k_floor(k: f64) -> Result<u64> {
    if k.is_nan() || k < 0.0 {
        return Err(Error::domain(format!("sparsity budget k = {k} must be >= 0")));
    }
    Ok(if k >= u64::MAX as f64 {
        u64::MAX
    } else {
        k.floor() as u64
    })
}

/// Number of r-cliques in `G[subset]`.
///
/// Vertices are relabeled in a degeneracy order and cliques are enumerated by
/// extending with forward neighbors only, so each clique is seen exactly once.
pub fn count_cliques(g: &Graph, subset: &[Vertex], r: usize) -> u64 {
    if r == 0 {
        return 1;
    }
    if r > subset.len() {
        return 0;
    }
    if r == 1 {
        return subset.len() as u64;
    }
    if r == 2 {
        let mut inside = VertexSet::new(g.n());
        for &v in subset {
            inside.insert(v);
        }
        let twice: usize = subset
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| inside.contains(w)).count())
            .sum();
        return twice as u64 / 2;
    }
    let dense = g.dense(subset);
    count_cliques_dense(&dense, r)
}

/// Number of r-cliques in a dense graph.
pub fn count_cliques_dense(g: &BitGraph, r: usize) -> u64 {
    let n = g.n();
    if r == 0 {
        return 1;
    }
    if r > n {
        return 0;
    }
    if r == 1 {
        return n as u64;
    }
    if r == 2 {
        return (0..n).map(|v| g.degree(v) as u64).sum::<u64>() / 2;
    }
    let order = degeneracy_order(g);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // forward[i] = neighbors of order[i] that come later in the order
    let forward: Vec<VertexSet> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut s = VertexSet::from_iter_in(n, g.row(v).iter().map(|w| pos[w]));
            s.retain_above(i);
            s
        })
        .collect();
    let mut total = 0u64;
    for cand in &forward {
        total += extend(&forward, cand, r - 1);
    }
    total
}

fn extend(forward: &[VertexSet], cand: &VertexSet, remaining: usize) -> u64 {
    match remaining {
        0 => 1,
        1 => cand.len() as u64,
        2 => cand.iter().map(|v| forward[v].intersection_len(cand) as u64).sum(),
        _ => {
            if cand.len() < remaining {
                return 0;
            }
            cand.iter()
                .map(|v| {
                    let next = forward[v].intersection(cand);
                    extend(forward, &next, remaining - 1)
                })
                .sum()
        }
    }
}

/// Repeatedly removes a minimum-degree vertex.
fn degeneracy_order(g: &BitGraph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = VertexSet::full(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| deg[v])
            .expect("alive is nonempty");
        alive.remove(v);
        order.push(v);
        for w in g.row(v).iter() {
            if alive.contains(w) {
                deg[w] -= 1;
            }
        }
    }
    order
}

/// Number of r-cliques in `G` that contain `v`, i.e. (r-1)-cliques in `G[N(v)]`.
pub fn cliques_through(g: &Graph, v: Vertex, r: usize) -> u64 {
    if r == 0 {
        return 0;
    }
    count_cliques(g, g.neighbors(v), r - 1)
}

/// A violating vertex of a local-sparsity certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub v: Vertex,
    pub count: u64,
    pub k_floor: u64,
}

/// Per-vertex clique counts witnessing (or refuting) (k, r)-local-sparsity.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsityCertificate {
    pub r_map: Vec<usize>,
    pub k_map: Vec<f64>,
    /// `counts[v]` = number of `K_{r(v)}` in `G[N(v)]`.
    pub counts: Vec<u64>,
    pub violations: Vec<Violation>,
}

impl SparsityCertificate {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    /// `{"verdict": bool, "violations": [{"v", "count", "k_floor"}]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "verdict": self.passes(),
            "violations": self.violations,
        })
    }
}

/// Counts `K_{r(v)}` in every neighborhood and compares against ⌊k(v)⌋.
pub fn certify_local_sparsity(
    g: &Graph,
    k_map: &[f64],
    r_map: &[usize],
) -> Result<SparsityCertificate> {
    let n = g.n();
    if k_map.len() != n || r_map.len() != n {
        return Err(Error::pre(format!(
            "k_map/r_map lengths {}/{} do not match n = {n}",
            k_map.len(),
            r_map.len()
        )));
    }
    if let Some(v) = r_map.iter().position(|&r| r < 2) {
        return Err(Error::pre(format!("r({v}) = {} must be >= 2", r_map[v])));
    }
    let floors = k_map
        .iter()
        .map(|&k| k_floor(k))
        .collect::<Result<Vec<_>>>()?;
    let counts: Vec<u64> = (0..n)
        .into_par_iter()
        .map(|v| count_cliques(g, g.neighbors(v), r_map[v]))
        .collect();
    let violations = (0..n)
        .filter(|&v| counts[v] > floors[v])
        .map(|v| Violation {
            v,
            count: counts[v],
            k_floor: floors[v],
        })
        .collect();
    Ok(SparsityCertificate {
        r_map: r_map.to_vec(),
        k_map: k_map.to_vec(),
        counts,
        violations,
    })
}

/// [`certify_local_sparsity`] with the same `k` and `r` at every vertex.
pub fn certify_uniform(g: &Graph, k: f64, r: usize) -> Result<SparsityCertificate> {
    certify_local_sparsity(g, &vec![k; g.n()], &vec![r; g.n()])
}

/// True when `G` itself (not its neighborhoods) has at most ⌊k⌋ r-cliques.
pub fn is_sparse(g: &Graph, k: f64, r: usize) -> Result<bool> {
    let all: Vec<Vertex> = (0..g.n()).collect();
    Ok(count_cliques(g, &all, r) <= k_floor(k)?)
}

fn pattern_guard(f: &Graph) -> Result<()> {
    if f.n() > MAX_PATTERN_VERTICES {
        return Err(Error::guard("pattern vertex count", MAX_PATTERN_VERTICES, f.n()));
    }
    Ok(())
}

/// |Aut(F)| by backtracking over degree-preserving partial maps.
pub fn automorphism_count(f: &Graph) -> Result<u64> {
    pattern_guard(f)?;
    let n = f.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(count_automorphisms(f, 0, &mut image, &mut used))
}

fn count_automorphisms(f: &Graph, i: usize, image: &mut [usize], used: &mut [bool]) -> u64 {
    let n = f.n();
    if i == n {
        return 1;
    }
    let mut total = 0;
    for w in 0..n {
        if used[w] || f.degree(w) != f.degree(i) {
            continue;
        }
        let consistent = (0..i).all(|j| f.has_edge(i, j) == f.has_edge(w, image[j]));
        if !consistent {
            continue;
        }
        image[i] = w;
        used[w] = true;
        total += count_automorphisms(f, i + 1, image, used);
        used[w] = false;
    }
    image[i] = usize::MAX;
    total
}

/// Number of subgraphs of `G` isomorphic to `F` (not necessarily induced).
///
/// Counts injective edge-preserving maps `F -> G` and divides by |Aut(F)|.
pub fn count_copies(g: &Graph, f: &Graph) -> Result<u64> {
    pattern_guard(f)?;
    if f.n() == 0 {
        return Ok(1);
    }
    if f.n() > g.n() {
        return Ok(0);
    }
    let order = pattern_order(f);
    let mut image = vec![usize::MAX; f.n()];
    let mut used = vec![false; g.n()];
    let embeddings = count_embeddings(g, f, &order, 0, &mut image, &mut used);
    let aut = automorphism_count(f)? as u128;
    debug_assert_eq!(embeddings % aut, 0);
    Ok((embeddings / aut) as u64)
}

/// Pattern vertices ordered so that each one (after the first of its component)
/// has an already-placed neighbor whenever possible.
fn pattern_order(f: &Graph) -> Vec<Vertex> {
    let n = f.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = f.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (back, f.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    order
}

fn count_embeddings(
    g: &Graph,
    f: &Graph,
    order: &[Vertex],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> u128 {
    if depth == order.len() {
        return 1;
    }
    let x = order[depth];
    let anchor = f
        .neighbors(x)
        .iter()
        .copied()
        .find(|&y| image[y] != usize::MAX);
    let candidates: Box<dyn Iterator<Item = Vertex>> = match anchor {
        Some(y) => Box::new(g.neighbors(image[y]).to_vec().into_iter()),
        None => Box::new(0..g.n()),
    };
    let mut total = 0;
    for w in candidates {
        if used[w] || g.degree(w) < f.degree(x) {
            continue;
        }
        let ok = f
            .neighbors(x)
            .iter()
            .all(|&y| image[y] == usize::MAX || g.has_edge(w, image[y]));
        if !ok {
            continue;
        }
        image[x] = w;
        used[w] = true;
        total += count_embeddings(g, f, order, depth + 1, image, used);
        used[w] = false;
        image[x] = usize::MAX;
    }
    total
}

/// Converts a (k, F)-local-sparsity budget to the implied (k̃, r)-budget,
/// k̃ = ⌈k⌉·|Aut(F)|/r! with r = |V(F)|.
pub fn f_to_clique_budget(k: f64, f: &Graph) -> Result<f64> {
    if k.is_nan() || k < 0.0 {
        return Err(Error::domain(format!("k = {k} must be >= 0")));
    }
    let aut = automorphism_count(f)? as f64;
    let r_factorial: f64 = (1..=f.n()).map(|i| i as f64).product();
    Ok(k.ceil() * aut / r_factorial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::families;
    use crate::oracle;

    #[test]
    fn clique_examples() {
        let k5 = families::complete(5);
        assert_eq!(count_cliques(&k5, k5.neighbors(0), 3), 4);
        let c5 = families::cycle(5);
        assert_eq!(count_cliques(&c5, c5.neighbors(2), 2), 0);
        let p = families::petersen();
        let all: Vec<_> = (0..10).collect();
        assert_eq!(count_cliques(&p, &all, 3), 0);
        assert_eq!(oracle::count_cliques_naive(&p, &all, 3), 0);
        assert_eq!(count_cliques(&k5, &[0, 1], 3), 0);
    }

    #[test]
    fn certificate_examples() {
        let k4 = families::complete(4);
        let cert = certify_uniform(&k4, 0.0, 3).unwrap();
        assert!(!cert.passes());
        assert_eq!(cert.violations.len(), 4);
        assert!(cert.counts.iter().all(|&c| c == 1));

        let c7 = families::cycle(7);
        assert!(certify_uniform(&c7, 0.0, 3).unwrap().passes());

        let json = cert.to_json();
        assert_eq!(json["verdict"], false);
        assert_eq!(json["violations"][0]["k_floor"], 0);
    }

    #[test]
    fn isolated_vertex_passes_any_budget() {
        let g = Graph::empty(3);
        assert!(certify_uniform(&g, 0.0, 2).unwrap().passes());
    }

    #[test]
    fn certificate_rejects_bad_input() {
        let g = families::cycle(4);
        assert!(certify_uniform(&g, 1.0, 1).is_err());
        assert!(certify_uniform(&g, -1.0, 3).is_err());
        assert!(certify_local_sparsity(&g, &[1.0], &[3]).is_err());
    }

    #[test]
    fn floor_is_applied_to_real_budget() {
        let k4 = families::complete(4);
        assert!(certify_uniform(&k4, 1.999, 3).unwrap().passes());
        assert!(!certify_uniform(&k4, 0.999, 3).unwrap().passes());
    }

    #[test]
    fn copy_examples() {
        let k3 = families::complete(3);
        let p3 = families::path(3);
        let c4 = families::cycle(4);
        let k4 = families::complete(4);
        let k2 = families::complete(2);
        let pet = families::petersen();
        assert_eq!(count_copies(&pet, &k2).unwrap(), 15);
        assert_eq!(count_copies(&k3, &p3).unwrap(), 3);
        assert_eq!(count_copies(&k4, &c4).unwrap(), 3);
        assert_eq!(oracle::count_copies_naive(&k4, &c4), 3);
        assert!(count_copies(&k4, &families::path(11)).is_err());
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(automorphism_count(&families::complete(4)).unwrap(), 24);
        assert_eq!(automorphism_count(&families::cycle(5)).unwrap(), 10);
        assert_eq!(automorphism_count(&families::path(4)).unwrap(), 2);
        assert_eq!(oracle::automorphism_count_naive(&families::path(4)), 2);
        assert_eq!(automorphism_count(&families::petersen()).unwrap(), 120);
    }

    #[test]
    fn conversion_examples() {
        assert!((f_to_clique_budget(5.0, &families::complete(3)).unwrap() - 5.0).abs() < 1e-12);
        assert!((f_to_clique_budget(3.0, &families::cycle(4)).unwrap() - 1.0).abs() < 1e-12);
        assert!(
            (f_to_clique_budget(1.5, &families::path(3)).unwrap() - 2.0 / 3.0).abs() < 1e-12
        );
    }
}
