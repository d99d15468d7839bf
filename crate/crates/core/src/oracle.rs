//! Brute-force reference implementations.
//!
//! Everything here enumerates subsets, maps or assignments directly and shares no
//! code with the fast routines it is compared against. Only usable on tiny inputs.

use std::collections::HashSet;

use crate::coloring::CorrespondenceCover;
use crate::graph::{Graph, Vertex};

/// All `r`-subsets of `items`, lexicographic.
pub fn combinations(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, r, 0, &mut Vec::new(), &mut out);
    out
}

pub fn count_cliques_naive(g: &Graph, subset: &[Vertex], r: usize) -> u64 {
    combinations(subset, r)
        .into_iter()
        .filter(|c| {
            c.iter()
                .enumerate()
                .all(|(i, &a)| c[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .count() as u64
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Permutations of `V(F)` that map the edge set onto itself.
pub fn automorphism_count_naive(f: &Graph) -> u64 {
    let edges: Vec<_> = f.edges().collect();
    permutations(f.n())
        .into_iter()
        .filter(|p| edges.iter().all(|&(a, b)| f.has_edge(p[a], p[b])))
        .count() as u64
}

/// Distinct (vertex set, edge set) images of injective edge-preserving maps `F -> G`.
pub fn count_copies_naive(g: &Graph, f: &Graph) -> u64 {
    let f_edges: Vec<_> = f.edges().collect();
    let all: Vec<usize> = (0..g.n()).collect();
    let mut seen = HashSet::new();
    for chosen in combinations(&all, f.n()) {
        for p in permutations(f.n()) {
            let image: Vec<usize> = p.iter().map(|&i| chosen[i]).collect();
            if f_edges.iter().all(|&(a, b)| g.has_edge(image[a], image[b])) {
                let mut es: Vec<(usize, usize)> = f_edges
                    .iter()
                    .map(|&(a, b)| (image[a].min(image[b]), image[a].max(image[b])))
                    .collect();
                es.sort_unstable();
                seen.insert((chosen.clone(), es));
            }
        }
    }
    seen.len() as u64
}

pub fn is_independent(g: &Graph, set: &[Vertex]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && !g.has_edge(a, b)))
}

/// Independent-set counts by size, over all `2^n` vertex subsets. `n <= 24`.
pub fn independence_counts_naive(g: &Graph) -> Vec<u64> {
    let n = g.n();
    assert!(n <= 24, "naive enumeration limited to 24 vertices");
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u64..1 << n {
        let mut ok = true;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & mask != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    counts
}

/// α(G) by include/exclude branching on a maximum-degree vertex. `n <= 40`.
pub fn independence_number_naive(g: &Graph) -> usize {
    assert!(g.n() <= 40, "naive independence number limited to 40 vertices");
    fn go(g: &Graph, alive: &mut Vec<bool>) -> usize {
        let pick = (0..g.n())
            .filter(|&v| alive[v])
            .max_by_key(|&v| g.neighbors(v).iter().filter(|&&w| alive[w]).count());
        let Some(v) = pick else { return 0 };
        let live_nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        if live_nbrs.is_empty() {
            alive[v] = false;
            let r = 1 + go(g, alive);
            alive[v] = true;
            return r;
        }
        alive[v] = false;
        let without = go(g, alive);
        for &w in &live_nbrs {
            alive[w] = false;
        }
        let with = 1 + go(g, alive);
        for &w in &live_nbrs {
            alive[w] = true;
        }
        alive[v] = true;
        without.max(with)
    }
    go(g, &mut vec![true; g.n()])
}

/// Largest ℓ with at least half of all independent sets of size >= ℓ.
pub fn median_from_counts(counts: &[u64]) -> usize {
    let total: u128 = counts.iter().map(|&c| c as u128).sum();
    let mut tail: u128 = 0;
    for l in (0..counts.len()).rev() {
        tail += counts[l] as u128;
        if 2 * tail >= total {
            return l;
        }
    }
    0
}

/// Whether any choice of one color per list avoids every matched pair.
pub fn cover_colorable_naive(g: &Graph, cover: &CorrespondenceCover) -> bool {
    let lists: Vec<Vec<u32>> = (0..g.n()).map(|v| cover.list(v).to_vec()).collect();
    if lists.iter().any(Vec::is_empty) {
        return false;
    }
    let mut idx = vec![0usize; g.n()];
    loop {
        let phi: Vec<u32> = (0..g.n()).map(|v| lists[v][idx[v]]).collect();
        let proper = g.edges().all(|(u, v)| !cover.conflicts(u, phi[u], v, phi[v]));
        if proper {
            return true;
        }
        let mut i = 0;
        loop {
            if i == g.n() {
                return false;
            }
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Ordinary chromatic number by trying q = 1, 2, ... with plain backtracking.
pub fn chromatic_number_naive(g: &Graph) -> usize {
    fn fits(g: &Graph, q: usize, v: usize, col: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..q {
            if g.neighbors(v).iter().all(|&w| w >= v || col[w] != c) {
                col[v] = c;
                if fits(g, q, v + 1, col) {
                    return true;
                }
            }
        }
        false
    }
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n())
        .find(|&q| fits(g, q, 0, &mut vec![0; g.n()]))
        .expect("n colors always suffice")
}

/// log Γ(x) for x > 0 by shifting to x >= 12 and summing the Stirling series.
pub fn ln_gamma_stirling(x: f64) -> f64 {
    assert!(x > 0.0, "log-gamma oracle needs x > 0");
    let mut shift = 0.0;
    let mut y = x;
    while y < 12.0 {
        shift += y.ln();
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let series = inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
    (y - 0.5) * y.ln() - y + 0.5 * (2.0 * std::f64::consts::PI).ln() + series - shift
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::families;

    #[test]
    fn naive_basics() {
        assert_eq!(combinations(&[1, 2, 3, 4], 2).len(), 6);
        assert_eq!(independence_counts_naive(&families::path(3)), vec![1, 3, 1]);
        assert_eq!(independence_counts_naive(&families::cycle(5)), vec![1, 5, 5]);
        assert_eq!(independence_number_naive(&families::petersen()), 4);
        assert_eq!(median_from_counts(&[1, 5, 5]), 1);
        assert_eq!(median_from_counts(&[1, 2, 1]), 1);
        assert_eq!(chromatic_number_naive(&families::petersen()), 3);
        assert_eq!(chromatic_number_naive(&families::cycle(6)), 2);
        assert!(is_independent(&families::cycle(6), &[0, 2, 4]));
    }
}
