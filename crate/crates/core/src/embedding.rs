//! Raising the minimum degree by doubling.
//!
//! Each round takes two disjoint copies of the current graph and joins the two
//! copies of every vertex whose degree is still below δ. After j = δ − δ(G) rounds
//! every degree is at least δ, the maximum degree is unchanged, and every
//! neighborhood is the old one plus at most one isolated vertex, so clique counts
//! in neighborhoods are preserved.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, MAX_VERTICES};
use crate::sparsity::certify_local_sparsity;

/// Largest number of doubling rounds.
pub const MAX_ROUNDS: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingResult {
    pub graph: Graph,
    /// `homs[b]` maps V(G) into copy `b`. Bit i of `b` picks the copy in round i.
    pub homs: Vec<Vec<Vertex>>,
    pub k_tilde: Vec<f64>,
    pub r_tilde: Vec<usize>,
    pub rounds: usize,
}

#[derive(Serialize)]
struct HomTable<'a> {
    rounds: usize,
    n: usize,
    homs: &'a [Vec<Vertex>],
    k_tilde: &'a [f64],
    r_tilde: &'a [usize],
}

impl EmbeddingResult {
    /// The homomorphism table with the transferred k and r maps.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(HomTable {
            rounds: self.rounds,
            n: self.graph.n(),
            homs: &self.homs,
            k_tilde: &self.k_tilde,
            r_tilde: &self.r_tilde,
        })
        .expect("serializable")
    }
}

/// Number of doubling rounds needed to reach minimum degree δ.
pub fn rounds_needed(g: &Graph, delta: usize) -> usize {
    delta.saturating_sub(g.min_degree())
}

/// One round: two copies of `g`, plus the edge v–(v+n) for every v with deg(v) < δ.
fn double(g: &Graph, delta: usize) -> Result<Graph> {
    let n = g.n();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(2 * g.m() + n);
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((u + n, v + n));
    }
    edges.extend((0..n).filter(|&v| g.degree(v) < delta).map(|v| (v, v + n)));
    Graph::from_edges(2 * n, &edges)
}

/// Embeds `g` into a graph of minimum degree at least `delta` with the same maximum
/// degree, recording the 2^j copy homomorphisms and the transferred sparsity maps.
pub fn min_degree_boost(g: &Graph, delta: usize, k_map: &[f64], r_map: &[usize]) -> Result<EmbeddingResult> {
    let n = g.n();
    if k_map.len() != n || r_map.len() != n {
        return Err(Error::pre("k_map/r_map lengths do not match the vertex count"));
    }
    if delta > g.max_degree() {
        return Err(Error::pre(format!(
            "target minimum degree {delta} exceeds the maximum degree {}",
            g.max_degree()
        )));
    }
    let rounds = rounds_needed(g, delta);
    if rounds > MAX_ROUNDS {
        return Err(Error::guard("doubling rounds", MAX_ROUNDS, rounds));
    }
    if n << rounds > MAX_VERTICES {
        return Err(Error::guard("vertex count after doubling", MAX_VERTICES, n << rounds));
    }
    let mut cur = g.clone();
    for _ in 0..rounds {
        let next = double(&cur, delta)?;
        let m = cur.n();
        for v in 0..m {
            let (before, expect) = (cur.degree(v), cur.degree(v) + usize::from(cur.degree(v) < delta));
            if next.degree(v) != expect || next.degree(v + m) != expect {
                return Err(Error::Internal(format!(
                    "degree of {v} went from {before} to {} instead of {expect}",
                    next.degree(v)
                )));
            }
        }
        cur = next;
    }
    let copies = 1usize << rounds;
    let homs: Vec<Vec<Vertex>> = (0..copies)
        .map(|b| (0..n).map(|v| v + b * n).collect())
        .collect();
    let result = EmbeddingResult {
        k_tilde: (0..cur.n()).map(|x| k_map[x % n]).collect(),
        r_tilde: (0..cur.n()).map(|x| r_map[x % n]).collect(),
        graph: cur,
        homs,
        rounds,
    };
    let check = verify_embedding(g, &result, delta, k_map, r_map)?;
    if !check.ok {
        return Err(Error::Internal(format!("embedding invariants failed: {:?}", check.failures)));
    }
    Ok(result)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingCheck {
    pub ok: bool,
    /// One entry per failed invariant, prefixed with its name.
    pub failures: Vec<String>,
}

/// Rechecks a result from scratch: minimum degree (I1), maximum degree (I2),
/// vertex count 2^j·n (I3), homomorphisms with pairwise disjoint images (I4), and
/// that local sparsity of `g` under (k, r) carries over to G' under (k̃, r̃).
pub fn verify_embedding(
    g: &Graph,
    result: &EmbeddingResult,
    delta: usize,
    k_map: &[f64],
    r_map: &[usize],
) -> Result<EmbeddingCheck> {
    let mut failures = Vec::new();
    let h = &result.graph;
    let n = g.n();
    let rounds = rounds_needed(g, delta);

    if h.min_degree() < delta && h.n() > 0 {
        failures.push(format!("I1: minimum degree {} < {delta}", h.min_degree()));
    }
    if h.max_degree() != g.max_degree() {
        failures.push(format!("I2: maximum degree {} != {}", h.max_degree(), g.max_degree()));
    }
    if result.rounds != rounds || h.n() != n << rounds || result.homs.len() != 1 << rounds {
        failures.push(format!(
            "I3: expected {rounds} rounds, {} vertices and {} maps; got {}, {}, {}",
            n << rounds,
            1usize << rounds,
            result.rounds,
            h.n(),
            result.homs.len()
        ));
    }

    let mut owner = vec![usize::MAX; h.n()];
    'maps: for (b, phi) in result.homs.iter().enumerate() {
        if phi.len() != n || phi.iter().any(|&x| x >= h.n()) {
            failures.push(format!("I4: map {b} is not a map V(G) -> V(G')"));
            continue;
        }
        for (u, v) in g.edges() {
            if !h.has_edge(phi[u], phi[v]) {
                failures.push(format!("I4: map {b} sends edge ({u}, {v}) to a non-edge"));
                continue 'maps;
            }
        }
        for (v, &x) in phi.iter().enumerate() {
            if owner[x] != usize::MAX {
                failures.push(format!("I4: vertex {x} is the image of {v} under map {b} and of a vertex under map {}", owner[x]));
                continue 'maps;
            }
            owner[x] = b;
        }
    }

    if result.k_tilde.len() != h.n() || result.r_tilde.len() != h.n() {
        failures.push("sparsity: k̃/r̃ do not cover V(G')".into());
    } else {
        let consistent = result.homs.iter().all(|phi| {
            phi.iter().enumerate().all(|(v, &x)| {
                x >= h.n() || (result.k_tilde[x] == k_map[v] && result.r_tilde[x] == r_map[v])
            })
        });
        if !consistent {
            failures.push("sparsity: k̃(φ(v)) or r̃(φ(v)) differs from k(v), r(v)".into());
        }
        if certify_local_sparsity(g, k_map, r_map)?.passes()
            && !certify_local_sparsity(h, &result.k_tilde, &result.r_tilde)?.passes()
        {
            failures.push("sparsity: G is locally sparse but G' is not".into());
        }
    }

    Ok(EmbeddingCheck {
        ok: failures.is_empty(),
        failures,
    })
}

/// Edge removal that should break a valid result. Picks the first edge of G' that
/// some homomorphism uses, so I4 (and usually I1) must fail.
pub fn mutate_drop_edge(result: &EmbeddingResult, g: &Graph) -> Option<EmbeddingResult> {
    let (u, v) = g.edges().next()?;
    let phi = result.homs.first()?;
    Some(EmbeddingResult {
        graph: result.graph.without_edge(phi[u], phi[v]),
        ..result.clone()
    })
}

/// Makes the last two maps share the image of vertex 0.
pub fn mutate_share_vertex(result: &EmbeddingResult) -> Option<EmbeddingResult> {
    let len = result.homs.len();
    if len < 2 || result.homs[0].is_empty() {
        return None;
    }
    let mut out = result.clone();
    out.homs[len - 1][0] = out.homs[len - 2][0];
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{families, gnp};

    fn ones(g: &Graph, r: usize) -> (Vec<f64>, Vec<usize>) {
        (vec![1.0; g.n()], vec![r; g.n()])
    }

    #[test]
    fn path_becomes_six_cycle() {
        let g = families::path(3);
        let (k, r) = ones(&g, 3);
        let res = min_degree_boost(&g, 2, &k, &r).unwrap();
        assert_eq!(res.rounds, 1);
        assert_eq!(res.graph.n(), 6);
        assert_eq!(res.graph.m(), 6);
        assert!((0..6).all(|v| res.graph.degree(v) == 2));
        // connected 2-regular on 6 vertices
        let mut seen = [false; 6];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if !std::mem::replace(&mut seen[v], true) {
                stack.extend(res.graph.neighbors(v));
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn star_needs_two_rounds() {
        let g = families::star(3);
        let (k, r) = ones(&g, 2);
        let res = min_degree_boost(&g, 3, &k, &r).unwrap();
        assert_eq!(res.rounds, 2);
        assert_eq!(res.graph.n(), 16);
        assert_eq!(res.graph.min_degree(), 3);
        assert_eq!(res.graph.max_degree(), 3);
    }

    #[test]
    fn no_rounds_when_already_dense_enough() {
        let g = families::cycle(5);
        let (k, r) = ones(&g, 3);
        let res = min_degree_boost(&g, 2, &k, &r).unwrap();
        assert_eq!(res.rounds, 0);
        assert_eq!(res.graph, g);
        assert_eq!(res.homs, vec![(0..5).collect::<Vec<_>>()]);
    }

    #[test]
    fn mutations_are_caught() {
        for seed in 0..20 {
            let g = gnp(8, 0.35, seed).unwrap();
            if g.m() == 0 {
                continue;
            }
            let delta = g.max_degree();
            let (k, r) = ones(&g, 3);
            let res = min_degree_boost(&g, delta, &k, &r).unwrap();
            assert!(verify_embedding(&g, &res, delta, &k, &r).unwrap().ok);
            let bad = mutate_drop_edge(&res, &g).unwrap();
            let check = verify_embedding(&g, &bad, delta, &k, &r).unwrap();
            assert!(!check.ok);
            assert!(check.failures.iter().any(|f| f.starts_with("I4")));
            if let Some(bad) = mutate_share_vertex(&res) {
                let check = verify_embedding(&g, &bad, delta, &k, &r).unwrap();
                assert!(check.failures.iter().any(|f| f.starts_with("I4")));
            }
        }
    }

    #[test]
    fn regular_when_target_is_max_degree() {
        let g = gnp(10, 0.3, 3).unwrap();
        let (k, r) = ones(&g, 3);
        let res = min_degree_boost(&g, g.max_degree(), &k, &r).unwrap();
        assert_eq!(res.graph.min_degree(), res.graph.max_degree());
    }

    #[test]
    fn guards() {
        let g = families::star(3);
        let (k, r) = ones(&g, 2);
        assert!(min_degree_boost(&g, 4, &k, &r).is_err());
        for leaves in [19, 22] {
            let g = families::star(leaves);
            let (k, r) = ones(&g, 2);
            assert!(matches!(min_degree_boost(&g, leaves, &k, &r), Err(Error::SizeGuard { .. })));
        }
    }
}
