//! Correspondence covers and colorings of them.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gen::rng;
use crate::graph::{Graph, Vertex};

pub type Color = u32;

/// Per-vertex color lists plus one matching per edge.
///
/// Color ids are global: no id appears in two lists. The matching of edge `uv`
/// holds pairs `(c, c')` with `c ∈ L(u)`, `c' ∈ L(v)` and uses each color at most
/// once. A coloring picks one color per list and never both ends of a pair.
type Edge = (Vertex, Vertex);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceCover {
    lists: Vec<Vec<Color>>,
    /// Keyed by `(u, v)` with `u < v`; pairs are stored as `(color of u, color of v)`.
    matchings: BTreeMap<(Vertex, Vertex), Vec<(Color, Color)>>,
    owner: HashMap<Color, Vertex>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Twist {
    /// Uniform random perfect matching on every edge.
    Full,
    /// Random perfect matching with each pair kept independently with probability p.
    Partial(f64),
}

impl CorrespondenceCover {
    /// Builds and validates a cover of `g`. Matchings may be given with either
    /// endpoint order; pairs are oriented to match.
    pub fn new(
        g: &Graph,
        lists: Vec<Vec<Color>>,
        matchings: Vec<(Edge, Vec<(Color, Color)>)>,
    ) -> Result<Self> {
        if lists.len() != g.n() {
            return Err(Error::pre(format!("{} lists for {} vertices", lists.len(), g.n())));
        }
        let mut owner = HashMap::new();
        for (v, list) in lists.iter().enumerate() {
            for &c in list {
                if let Some(u) = owner.insert(c, v) {
                    return Err(Error::pre(format!(
                        "color {c} appears in the lists of {u} and {v} (lists must be disjoint)"
                    )));
                }
            }
        }
        let mut map: BTreeMap<(Vertex, Vertex), Vec<(Color, Color)>> = BTreeMap::new();
        for ((a, b), pairs) in matchings {
            if a >= g.n() || b >= g.n() || a == b {
                return Err(Error::pre(format!("matching on invalid pair ({a}, {b})")));
            }
            if !g.has_edge(a, b) {
                return Err(Error::pre(format!("matching on non-edge ({a}, {b})")));
            }
            let (u, v) = (a.min(b), a.max(b));
            let entry = map.entry((u, v)).or_default();
            for (x, y) in pairs {
                let (cu, cv) = if a == u { (x, y) } else { (y, x) };
                if owner.get(&cu) != Some(&u) || owner.get(&cv) != Some(&v) {
                    return Err(Error::pre(format!(
                        "pair ({x}, {y}) on edge ({a}, {b}) uses a color outside L({a}) x L({b})"
                    )));
                }
                entry.push((cu, cv));
            }
        }
        for ((u, v), pairs) in map.iter_mut() {
            pairs.sort_unstable();
            pairs.dedup();
            let mut left: Vec<Color> = pairs.iter().map(|p| p.0).collect();
            let mut right: Vec<Color> = pairs.iter().map(|p| p.1).collect();
            left.sort_unstable();
            right.sort_unstable();
            if left.windows(2).any(|w| w[0] == w[1]) || right.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::pre(format!("pairs on edge ({u}, {v}) are not a matching")));
            }
        }
        map.retain(|_, pairs| !pairs.is_empty());
        Ok(CorrespondenceCover {
            lists,
            matchings: map,
            owner,
        })
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: Vertex) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    /// Nonempty matchings, keyed by `(u, v)` with `u < v`.
    pub fn matchings(&self) -> &BTreeMap<(Vertex, Vertex), Vec<(Color, Color)>> {
        &self.matchings
    }

    /// Vertex whose list contains `c`.
    pub fn owner(&self, c: Color) -> Option<Vertex> {
        self.owner.get(&c).copied()
    }

    /// Fold size: the minimum list length (0 for the empty cover).
    pub fn fold(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_list(&self) -> usize {
        self.lists.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// True when coloring `u` with `cu` and `v` with `cv` is forbidden.
    pub fn conflicts(&self, u: Vertex, cu: Color, v: Vertex, cv: Color) -> bool {
        let (key, pair) = if u < v { ((u, v), (cu, cv)) } else { ((v, u), (cv, cu)) };
        self.matchings
            .get(&key)
            .is_some_and(|pairs| pairs.binary_search(&pair).is_ok())
    }

    /// For every vertex and list position, the `(neighbor, position)` pairs it
    /// conflicts with.
    pub(crate) fn conflict_table(&self) -> Vec<Vec<Vec<(Vertex, usize)>>> {
        let pos: HashMap<Color, usize> = self
            .lists
            .iter()
            .flat_map(|l| l.iter().enumerate().map(|(i, &c)| (c, i)))
            .collect();
        let mut table: Vec<Vec<Vec<(Vertex, usize)>>> =
            self.lists.iter().map(|l| vec![Vec::new(); l.len()]).collect();
        for (&(u, v), pairs) in &self.matchings {
            for &(cu, cv) in pairs {
                table[u][pos[&cu]].push((v, pos[&cv]));
                table[v][pos[&cv]].push((u, pos[&cu]));
            }
        }
        table
    }

    /// True when some global identification of colors turns every matching into
    /// identity pairs, i.e. the cover comes from a list assignment.
    ///
    /// Matched colors are merged with union-find, which gives the finest possible
    /// identification. The cover is list-like iff no class holds two colors of one
    /// list and every class shared by two adjacent vertices is matched on that edge.
    pub fn is_list_like(&self, g: &Graph) -> bool {
        let ids: Vec<Color> = self.lists.iter().flatten().copied().collect();
        let index: HashMap<Color, usize> = ids.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for pairs in self.matchings.values() {
            for &(a, b) in pairs {
                let ra = find(&mut parent, index[&a]);
                let rb = find(&mut parent, index[&b]);
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let mut roots: Vec<Vec<usize>> = Vec::with_capacity(self.lists.len());
        for list in &self.lists {
            let mut r: Vec<usize> = list.iter().map(|c| find(&mut parent, index[c])).collect();
            r.sort_unstable();
            if r.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
            roots.push(r);
        }
        // under the identification, equal colors on adjacent vertices must be matched
        let matched: usize = self.matchings.values().map(Vec::len).sum();
        let mut shared = 0;
        for (u, v) in g.edges() {
            shared += roots[u].iter().filter(|r| roots[v].binary_search(r).is_ok()).count();
        }
        shared == matched
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = CoverDoc {
            lists: self
                .lists
                .iter()
                .enumerate()
                .map(|(v, l)| (v.to_string(), l.clone()))
                .collect(),
            matchings: self
                .matchings
                .iter()
                .map(|(&(u, v), pairs)| MatchingDoc {
                    u,
                    v,
                    pairs: pairs.iter().map(|&(a, b)| [a, b]).collect(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn from_json(g: &Graph, value: &serde_json::Value) -> Result<Self> {
        let doc: CoverDoc = serde_json::from_value(value.clone())?;
        let mut lists = vec![Vec::new(); g.n()];
        for (key, list) in doc.lists {
            let v: usize = key
                .parse()
                .map_err(|_| Error::pre(format!("list key {key:?} is not a vertex id")))?;
            if v >= g.n() {
                return Err(Error::pre(format!("list for vertex {v} outside 0..{}", g.n())));
            }
            lists[v] = list;
        }
        let matchings = doc
            .matchings
            .into_iter()
            .map(|m| ((m.u, m.v), m.pairs.into_iter().map(|[a, b]| (a, b)).collect()))
            .collect();
        Self::new(g, lists, matchings)
    }
}

#[derive(Serialize, Deserialize)]
struct CoverDoc {
    lists: BTreeMap<String, Vec<Color>>,
    matchings: Vec<MatchingDoc>,
}

#[derive(Serialize, Deserialize)]
struct MatchingDoc {
    u: Vertex,
    v: Vertex,
    pairs: Vec<[Color; 2]>,
}

/// Cover of a list assignment: the `i`-th color of `v` gets id `offset(v) + i`
/// and equal labels on adjacent vertices are matched.
pub fn cover_from_lists(g: &Graph, labels: &[Vec<u32>]) -> Result<CorrespondenceCover> {
    if labels.len() != g.n() {
        return Err(Error::pre(format!("{} lists for {} vertices", labels.len(), g.n())));
    }
    let mut lists = Vec::with_capacity(g.n());
    let mut next: Color = 0;
    let mut id_of: Vec<HashMap<u32, Color>> = Vec::with_capacity(g.n());
    for l in labels {
        let mut uniq = l.clone();
        uniq.sort_unstable();
        uniq.dedup();
        let mut ids = HashMap::new();
        let mut list = Vec::with_capacity(uniq.len());
        for c in uniq {
            ids.insert(c, next);
            list.push(next);
            next += 1;
        }
        lists.push(list);
        id_of.push(ids);
    }
    let matchings = g
        .edges()
        .map(|(u, v)| {
            let mut pairs: Vec<(Color, Color)> = id_of[u]
                .iter()
                .filter_map(|(c, &a)| id_of[v].get(c).map(|&b| (a, b)))
                .collect();
            pairs.sort_unstable();
            ((u, v), pairs)
        })
        .collect();
    CorrespondenceCover::new(g, lists, matchings)
}

/// Identity cover with lists `{0, ..., q-1}` at every vertex.
pub fn uniform_lists(g: &Graph, q: u32) -> Result<CorrespondenceCover> {
    cover_from_lists(g, &vec![(0..q).collect(); g.n()])
}

/// q-fold cover with independent random matchings per edge.
pub fn random_cover(g: &Graph, q: usize, seed: u64, twist: Twist) -> Result<CorrespondenceCover> {
    if q < 1 {
        return Err(Error::pre("fold size q must be >= 1"));
    }
    if let Twist::Partial(p) = twist {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::domain(format!("keep probability p = {p} not in [0, 1]")));
        }
    }
    let mut rng = rng(seed);
    let id = |v: usize, i: usize| (v * q + i) as Color;
    let lists = (0..g.n()).map(|v| (0..q).map(|i| id(v, i)).collect()).collect();
    let mut matchings = Vec::with_capacity(g.m());
    for (u, v) in g.edges() {
        let mut perm: Vec<usize> = (0..q).collect();
        perm.shuffle(&mut rng);
        let pairs = perm
            .into_iter()
            .enumerate()
            .filter(|_| match twist {
                Twist::Full => true,
                Twist::Partial(p) => rng.random_bool(p),
            })
            .map(|(i, j)| (id(u, i), id(v, j)))
            .collect();
        matchings.push(((u, v), pairs));
    }
    CorrespondenceCover::new(g, lists, matchings)
}

/// The 4-cycle with a 2-fold cover that is identity on three edges and crossed on
/// the fourth. It has no proper coloring although C_4 is 2-colorable.
pub fn twisted_c4() -> (Graph, CorrespondenceCover) {
    let g = crate::gen::families::cycle(4);
    let lists = (0..4).map(|v| vec![2 * v, 2 * v + 1]).collect();
    let id = |v: u32, i: u32| 2 * v + i;
    let matchings = vec![
        ((0, 1), vec![(id(0, 0), id(1, 0)), (id(0, 1), id(1, 1))]),
        ((1, 2), vec![(id(1, 0), id(2, 0)), (id(1, 1), id(2, 1))]),
        ((2, 3), vec![(id(2, 0), id(3, 0)), (id(2, 1), id(3, 1))]),
        ((0, 3), vec![(id(0, 0), id(3, 1)), (id(0, 1), id(3, 0))]),
    ];
    let cover = CorrespondenceCover::new(&g, lists, matchings).expect("valid cover");
    (g, cover)
}

/// A choice of one color per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringAssignment {
    pub phi: Vec<Color>,
}

impl ColoringAssignment {
    /// Checks `φ(v) ∈ L(v)` and that no edge picks a matched pair.
    pub fn validate(&self, g: &Graph, cover: &CorrespondenceCover) -> Result<(), String> {
        if self.phi.len() != g.n() {
            return Err(format!("{} colors for {} vertices", self.phi.len(), g.n()));
        }
        for (v, &c) in self.phi.iter().enumerate() {
            if !cover.list(v).contains(&c) {
                return Err(format!("color {c} of vertex {v} is not in its list"));
            }
        }
        for (u, v) in g.edges() {
            if cover.conflicts(u, self.phi[u], v, self.phi[v]) {
                return Err(format!("edge ({u}, {v}) uses matched colors"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let phi: BTreeMap<String, Color> = self
            .phi
            .iter()
            .enumerate()
            .map(|(v, &c)| (v.to_string(), c))
            .collect();
        serde_json::json!({ "phi": phi })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::families;

    #[test]
    fn rejects_invalid_covers() {
        let g = families::path(3);
        // shared color
        assert!(CorrespondenceCover::new(&g, vec![vec![0], vec![0], vec![1]], vec![]).is_err());
        // matching on a non-edge
        assert!(CorrespondenceCover::new(
            &g,
            vec![vec![0], vec![1], vec![2]],
            vec![((0, 2), vec![(0, 2)])]
        )
        .is_err());
        // not a matching
        assert!(CorrespondenceCover::new(
            &g,
            vec![vec![0, 1], vec![2, 3], vec![4]],
            vec![((0, 1), vec![(0, 2), (0, 3)])]
        )
        .is_err());
        // color from the wrong list
        assert!(CorrespondenceCover::new(
            &g,
            vec![vec![0], vec![1], vec![2]],
            vec![((0, 1), vec![(0, 2)])]
        )
        .is_err());
    }

    #[test]
    fn list_covers() {
        let g = families::cycle(5);
        let c = uniform_lists(&g, 2).unwrap();
        assert_eq!(c.fold(), 2);
        assert_eq!(c.matchings().len(), 5);
        assert!(c.is_list_like(&g));
        let disjoint = cover_from_lists(&g, &(0..5).map(|v| vec![v]).collect::<Vec<_>>()).unwrap();
        assert!(disjoint.matchings().is_empty());
        let phi = ColoringAssignment {
            phi: (0..5).map(|v| disjoint.list(v)[0]).collect(),
        };
        assert!(phi.validate(&g, &disjoint).is_ok());
    }

    #[test]
    fn twisted_cover_is_not_list_like() {
        let (g, c) = twisted_c4();
        assert!(!c.is_list_like(&g));
        assert!(c.conflicts(3, 7, 0, 0));
        assert!(!c.conflicts(0, 0, 3, 6));
    }

    #[test]
    fn random_covers_are_valid_and_replayable() {
        let g = families::petersen();
        let a = random_cover(&g, 3, 5, Twist::Full).unwrap();
        assert_eq!(a, random_cover(&g, 3, 5, Twist::Full).unwrap());
        assert!(a.matchings().values().all(|p| p.len() == 3));
        let b = random_cover(&g, 3, 5, Twist::Partial(0.5)).unwrap();
        assert!(b.matchings().values().all(|p| p.len() <= 3));
        assert!(random_cover(&g, 0, 1, Twist::Full).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = families::cycle(4);
        let c = random_cover(&g, 2, 1, Twist::Full).unwrap();
        let back = CorrespondenceCover::from_json(&g, &c.to_json()).unwrap();
        assert_eq!(c, back);
    }
}
