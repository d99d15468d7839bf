//! Exact and heuristic cover coloring.

use rand::seq::SliceRandom;
use rand::Rng;

use rayon::prelude::*;
use serde::Serialize;

use super::cover::{random_cover, uniform_lists, ColoringAssignment, CorrespondenceCover, Twist};
use crate::error::{Error, Result};
use crate::gen::rng;
use crate::graph::Graph;

pub const MAX_EXACT_VERTICES: usize = 30;
pub const MAX_EXACT_LIST: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Sat(ColoringAssignment),
    Unsat,
}

impl Outcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, Outcome::Sat(_))
    }
}

/// Decides whether `g` has a proper coloring from `cover`.
///
/// Backtracking over list positions with forward checking: each vertex keeps a
/// bitmask of positions not yet ruled out by colored neighbors, and the next vertex
/// is the uncolored one with the fewest remaining positions.
pub fn solve_exact(g: &Graph, cover: &CorrespondenceCover) -> Result<Outcome> {
    if g.n() > MAX_EXACT_VERTICES {
        return Err(Error::guard("vertex count", MAX_EXACT_VERTICES, g.n()));
    }
    if cover.n() != g.n() {
        return Err(Error::pre("cover and graph have different vertex counts"));
    }
    if cover.max_list() > MAX_EXACT_LIST {
        return Err(Error::guard("list length", MAX_EXACT_LIST, cover.max_list()));
    }
    let table = cover.conflict_table();
    let n = g.n();
    let mut domain: Vec<u8> = (0..n)
        .map(|v| ((1u16 << cover.list(v).len()) - 1) as u8)
        .collect();
    let mut pick = vec![usize::MAX; n];
    let mut search = Search {
        table: &table,
        domain: &mut domain,
        pick: &mut pick,
        degree: (0..n).map(|v| g.degree(v)).collect(),
    };
    if !search.run(n) {
        return Ok(Outcome::Unsat);
    }
    let phi = ColoringAssignment {
        phi: (0..n).map(|v| cover.list(v)[pick[v]]).collect(),
    };
    phi.validate(g, cover)
        .map_err(|e| Error::Internal(format!("exact solver produced an improper coloring: {e}")))?;
    Ok(Outcome::Sat(phi))
}

struct Search<'a> {
    table: &'a [Vec<Vec<(usize, usize)>>],
    domain: &'a mut [u8],
    pick: &'a mut [usize],
    degree: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let v = (0..self.pick.len())
            .filter(|&v| self.pick[v] == usize::MAX)
            .min_by_key(|&v| (self.domain[v].count_ones(), std::cmp::Reverse(self.degree[v]), v))
            .expect("an uncolored vertex remains");
        let mut options = self.domain[v];
        while options != 0 {
            let i = options.trailing_zeros() as usize;
            options &= options - 1;
            let mut trail = Vec::new();
            let mut dead = false;
            for &(w, j) in &self.table[v][i] {
                if self.pick[w] == usize::MAX && self.domain[w] >> j & 1 == 1 {
                    self.domain[w] &= !(1 << j);
                    trail.push((w, j));
                    if self.domain[w] == 0 {
                        dead = true;
                        break;
                    }
                }
            }
            if !dead {
                self.pick[v] = i;
                if self.run(left - 1) {
                    return true;
                }
                self.pick[v] = usize::MAX;
            }
            for (w, j) in trail {
                self.domain[w] |= 1 << j;
            }
        }
        false
    }
}

/// Random greedy coloring followed by min-conflicts repair.
///
/// Returns `None` when no proper coloring was found within `max_iters` repair
/// steps. That is not a proof of uncolorability.
pub fn heuristic_color(
    g: &Graph,
    cover: &CorrespondenceCover,
    seed: u64,
    max_iters: u64,
) -> Option<ColoringAssignment> {
    let n = g.n();
    if cover.n() != n || (0..n).any(|v| cover.list(v).is_empty()) {
        return None;
    }
    let table = cover.conflict_table();
    let mut rng = rng(seed);
    let mut pick = vec![usize::MAX; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let clashes = |pick: &[usize], v: usize, i: usize| {
        table[v][i].iter().filter(|&&(w, j)| pick[w] == j).count()
    };
    let best_position = |pick: &[usize], v: usize, rng: &mut rand_chacha::ChaCha8Rng| {
        let scores: Vec<usize> = (0..cover.list(v).len()).map(|i| clashes(pick, v, i)).collect();
        let low = *scores.iter().min().expect("nonempty list");
        let ties: Vec<usize> = (0..scores.len()).filter(|&i| scores[i] == low).collect();
        ties[rng.random_range(0..ties.len())]
    };

    for &v in &order {
        pick[v] = best_position(&pick, v, &mut rng);
    }
    let mut iters = 0;
    loop {
        let conflicted: Vec<usize> = (0..n).filter(|&v| clashes(&pick, v, pick[v]) > 0).collect();
        if conflicted.is_empty() {
            break;
        }
        if iters >= max_iters {
            return None;
        }
        iters += 1;
        let v = conflicted[rng.random_range(0..conflicted.len())];
        pick[v] = if rng.random_bool(0.1) {
            rng.random_range(0..cover.list(v).len())
        } else {
            best_position(&pick, v, &mut rng)
        };
    }
    let phi = ColoringAssignment {
        phi: (0..n).map(|v| cover.list(v)[pick[v]]).collect(),
    };
    phi.validate(g, cover).ok().map(|_| phi)
}

/// Runs [`heuristic_color`] for every seed in parallel. The lowest succeeding seed
/// wins.
pub fn heuristic_portfolio(
    g: &Graph,
    cover: &CorrespondenceCover,
    seeds: std::ops::Range<u64>,
    max_iters: u64,
) -> Option<(u64, ColoringAssignment)> {
    let found: Vec<Option<ColoringAssignment>> = seeds
        .clone()
        .into_par_iter()
        .map(|s| heuristic_color(g, cover, s, max_iters))
        .collect();
    seeds.zip(found).find_map(|(s, phi)| phi.map(|phi| (s, phi)))
}

/// χ(G) by the exact solver on uniform lists.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    for q in 0..=MAX_EXACT_LIST {
        let cover = uniform_lists(g, q as u32)?;
        if solve_exact(g, &cover)?.is_sat() {
            return Ok(q);
        }
    }
    Err(Error::guard("chromatic number", MAX_EXACT_LIST, MAX_EXACT_LIST + 1))
}

/// Sampled stand-in for the correspondence chromatic number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiCEstimate {
    pub chromatic: usize,
    /// Least q at which the identity cover and every sampled q-fold cover are
    /// colorable. A lower bound on χ_c, never an upper bound.
    pub lower_estimate: usize,
    pub samples: usize,
}

/// Samples `samples` fully twisted q-fold covers for q = χ, χ+1, ... and stops at
/// the first q where all of them are colorable.
pub fn chi_c_estimate(g: &Graph, samples: usize, seed: u64) -> Result<ChiCEstimate> {
    let chromatic = chromatic_number(g)?;
    for q in chromatic.max(1)..=MAX_EXACT_LIST {
        let mut all = true;
        for s in 0..samples as u64 {
            let cover = random_cover(g, q, seed.wrapping_mul(1_000_003).wrapping_add(s * 64 + q as u64), Twist::Full)?;
            if !solve_exact(g, &cover)?.is_sat() {
                all = false;
                break;
            }
        }
        if all {
            return Ok(ChiCEstimate {
                chromatic,
                lower_estimate: q.max(chromatic),
                samples,
            });
        }
    }
    Err(Error::guard("fold size", MAX_EXACT_LIST, MAX_EXACT_LIST + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::cover::twisted_c4;
    use crate::gen::{families, gnp};
    use crate::oracle;

    #[test]
    fn known_verdicts() {
        let (g, c) = twisted_c4();
        assert_eq!(solve_exact(&g, &c).unwrap(), Outcome::Unsat);
        assert!(heuristic_color(&g, &c, 0, 1000).is_none());
        let p = families::petersen();
        assert!(solve_exact(&p, &uniform_lists(&p, 3).unwrap()).unwrap().is_sat());
        assert_eq!(solve_exact(&p, &uniform_lists(&p, 2).unwrap()).unwrap(), Outcome::Unsat);
        let c5 = families::cycle(5);
        assert_eq!(solve_exact(&c5, &uniform_lists(&c5, 2).unwrap()).unwrap(), Outcome::Unsat);
    }

    #[test]
    fn three_fold_c4_covers_are_colorable() {
        let g = families::cycle(4);
        for seed in 0..20 {
            let c = random_cover(&g, 3, seed, Twist::Full).unwrap();
            assert!(solve_exact(&g, &c).unwrap().is_sat());
        }
    }

    #[test]
    fn exact_matches_enumeration() {
        for seed in 0..40 {
            let g = gnp(8, 0.45, seed).unwrap();
            for q in 1..=3 {
                let c = random_cover(&g, q, seed * 7 + q as u64, Twist::Full).unwrap();
                let exact = solve_exact(&g, &c).unwrap().is_sat();
                assert_eq!(exact, oracle::cover_colorable_naive(&g, &c), "seed {seed} q {q}");
            }
        }
    }

    #[test]
    fn greedy_succeeds_with_delta_plus_one_colors() {
        for seed in 0..10 {
            let g = gnp(20, 0.3, seed).unwrap();
            let c = uniform_lists(&g, g.max_degree() as u32 + 1).unwrap();
            assert!(heuristic_color(&g, &c, seed, 0).is_some());
        }
    }

    #[test]
    fn chromatic_and_chi_c() {
        assert_eq!(chromatic_number(&families::petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(3)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        let c4 = families::cycle(4);
        let est = chi_c_estimate(&c4, 30, 1).unwrap();
        assert_eq!(est.chromatic, 2);
        assert!(est.lower_estimate >= 2 && est.lower_estimate <= 3);
        for seed in 0..10 {
            let g = gnp(9, 0.4, seed).unwrap();
            let e = chi_c_estimate(&g, 10, seed).unwrap();
            assert!(e.chromatic <= e.lower_estimate);
        }
    }

    #[test]
    fn portfolio_picks_lowest_seed() {
        let g = families::petersen();
        let c = uniform_lists(&g, 3).unwrap();
        let (s, phi) = heuristic_portfolio(&g, &c, 5..13, 100_000).unwrap();
        assert!(phi.validate(&g, &c).is_ok());
        assert_eq!(Some(phi), heuristic_color(&g, &c, s, 100_000));
        for lower in 5..s {
            assert!(heuristic_color(&g, &c, lower, 100_000).is_none());
        }
    }

    #[test]
    fn guards() {
        let g = families::cycle(31);
        assert!(solve_exact(&g, &uniform_lists(&g, 3).unwrap()).is_err());
        let h = families::cycle(5);
        assert!(solve_exact(&h, &uniform_lists(&h, 9).unwrap()).is_err());
    }
}
