//! Simple undirected graphs.
//!
//! [`Graph`] keeps sorted neighbor lists so that large sparse inputs stay cheap.
//! The exponential routines never walk those lists directly: they first extract a
//! relabeled dense view of the vertex set they care about, either a [`BitGraph`]
//! (bitset rows of arbitrary width) or a [`SmallGraph`] (one `u64` mask per row,
//! at most 64 vertices).

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Hard cap on the number of vertices of any [`Graph`].
pub const MAX_VERTICES: usize = 1_000_000;

/// Fixed-universe bitset over `0..universe`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_iter_in(universe: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(universe);
        for v in items {
            s.insert(v);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.universe % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Drops every element `<= v`.
    pub fn retain_above(&mut self, v: usize) {
        let word = v / 64;
        for w in self.words.iter_mut().take(word) {
            *w = 0;
        }
        if word < self.words.len() {
            let bit = v % 64;
            self.words[word] &= if bit == 63 { 0 } else { u64::MAX << (bit + 1) };
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

/// Iterates the set bits of a `u64` mask in ascending order.
#[inline]
pub fn mask_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::guard("vertex count", MAX_VERTICES, n));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::pre(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::pre(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
            m2 += row.len();
        }
        Ok(Graph {
            adj,
            m: m2 / 2,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::pre(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Δ(G); zero for the null graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ(G); zero for the null graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// d(G) = 2m/n; zero for the null graph.
    pub fn avg_degree(&self) -> f64 {
        if self.n() == 0 {
            0.0
        } else {
            2.0 * self.m as f64 / self.n() as f64
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbor_set(&self, v: Vertex) -> VertexSet {
        VertexSet::from_iter_in(self.n(), self.adj[v].iter().copied())
    }

    /// `G[S]` relabeled to `0..|S|` in the order of `subset`.
    pub fn induced(&self, subset: &[Vertex]) -> Graph {
        let mut index = std::collections::HashMap::with_capacity(subset.len());
        for (i, &v) in subset.iter().enumerate() {
            index.insert(v, i);
        }
        let mut adj = vec![Vec::new(); subset.len()];
        let mut m2 = 0;
        for (i, &v) in subset.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = index.get(w) {
                    adj[i].push(j);
                }
            }
            adj[i].sort_unstable();
            m2 += adj[i].len();
        }
        Graph {
            adj,
            m: m2 / 2,
            labels: None,
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|row| row.iter().map(|&v| v + off).collect()),
        );
        Graph {
            adj,
            m: self.m + other.m,
            labels: None,
        }
    }

    /// Copy of the graph with the edge `uv` deleted (no-op when absent).
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        if let Ok(i) = g.adj[u].binary_search(&v) {
            g.adj[u].remove(i);
            let j = g.adj[v].binary_search(&u).expect("symmetric adjacency");
            g.adj[v].remove(j);
            g.m -= 1;
        }
        g
    }

    /// Dense view of `G[subset]`, relabeled in the order of `subset`.
    pub fn dense(&self, subset: &[Vertex]) -> BitGraph {
        let k = subset.len();
        let mut sorted: Vec<(Vertex, usize)> =
            subset.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        sorted.sort_unstable();
        let mut rows = vec![VertexSet::new(k); k];
        for (i, &v) in subset.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Ok(p) = sorted.binary_search_by_key(&w, |&(x, _)| x) {
                    rows[i].insert(sorted[p].1);
                }
            }
        }
        BitGraph { rows }
    }

    /// Dense view of the whole graph.
    pub fn to_dense(&self) -> BitGraph {
        let all: Vec<Vertex> = (0..self.n()).collect();
        self.dense(&all)
    }

    /// `u64`-mask view of `G[subset]`; requires `|subset| <= 64`.
    pub fn small(&self, subset: &[Vertex]) -> Result<SmallGraph> {
        if subset.len() > 64 {
            return Err(Error::guard("vertex subset size", 64, subset.len()));
        }
        let d = self.dense(subset);
        Ok(SmallGraph::from_bitgraph(&d))
    }

    /// `u64`-mask view of `G[N(v)]`, neighbors in ascending order.
    pub fn small_neighborhood(&self, v: Vertex) -> Result<SmallGraph> {
        self.small(&self.adj[v])
    }
}

/// Dense graph with bitset adjacency rows.
#[derive(Clone, Debug)]
pub struct BitGraph {
    rows: Vec<VertexSet>,
}

impl BitGraph {
    /// Relabeled dense view of `subset` inside a graph given by bitset rows.
    pub fn induced_from_rows(rows: &[VertexSet], subset: &[usize]) -> Self {
        let k = subset.len();
        let mut out = vec![VertexSet::new(k); k];
        for (i, &v) in subset.iter().enumerate() {
            for (j, &w) in subset.iter().enumerate().skip(i + 1) {
                if rows[v].contains(w) {
                    out[i].insert(j);
                    out[j].insert(i);
                }
            }
        }
        BitGraph { rows: out }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }
}

/// Graph on at most 64 vertices with one adjacency mask per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    adj: Vec<u64>,
}

impl SmallGraph {
    pub fn from_masks(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= 64);
        SmallGraph { adj }
    }

    fn from_bitgraph(d: &BitGraph) -> Self {
        let adj = (0..d.n())
            .map(|i| d.row(i).iter().fold(0u64, |acc, j| acc | 1 << j))
            .collect();
        SmallGraph { adj }
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<_> = (0..self.n())
            .flat_map(|u| mask_bits(self.adj[u]).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(self.n(), &edges).expect("valid small graph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn masks(&self) -> &[u64] {
        &self.adj
    }

    /// Mask of all vertices.
    #[inline]
    pub fn all(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// Edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| mask_bits(self.adj[u]).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Spanning subgraph keeping only the listed edges.
    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        SmallGraph { adj }
    }

    /// True when no two vertices of `mask` are adjacent.
    #[inline]
    pub fn is_independent(&self, mask: u64) -> bool {
        mask_bits(mask).all(|v| self.adj[v] & mask == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_statistics() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3), (1, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.min_degree(), 1);
        assert!((g.avg_degree() - 1.5).abs() < 1e-15);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(2, 3));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn vertex_set_ops() {
        let mut s = VertexSet::from_iter_in(130, [0, 5, 64, 100, 129]);
        assert_eq!(s.len(), 5);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 5, 64, 100, 129]);
        s.retain_above(64);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![100, 129]);
        assert_eq!(VertexSet::full(130).len(), 130);
        let mut t = VertexSet::full(70);
        t.retain_above(63);
        assert_eq!(t.first(), Some(64));
    }

    #[test]
    fn induced_and_small_views_agree() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let h = g.induced(&[4, 0, 1]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let s = g.small(&[4, 0, 1]).unwrap();
        assert_eq!(s.to_graph(), h);
        assert!(s.is_independent(0b101));
        assert!(!s.is_independent(0b011));
    }

    #[test]
    fn without_edge_updates_both_rows() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let h = g.without_edge(2, 1);
        assert_eq!(h.m(), 1);
        assert!(!h.has_edge(1, 2));
        assert_eq!(g.without_edge(0, 2), g);
    }
}
