//! Samplers for the hard-core distribution P[I] ∝ λ^|I|.

use std::collections::HashMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::poly::check_lambda;
use crate::error::{Error, Result};
use crate::gen::rng;
use crate::graph::{mask_bits, Graph};

/// Graphs above this size are rejected by the exact sampler.
pub const MAX_EXACT_SAMPLE_VERTICES: usize = 30;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HardCoreSampleStats {
    pub lambda: f64,
    pub steps: u64,
    pub empirical_occupancy: f64,
    pub seed: u64,
}

/// Single-site Glauber dynamics started from the empty set.
///
/// Each step picks a uniform vertex `v`; with probability λ/(1+λ) it tries to add
/// `v` (only if no neighbor is occupied), otherwise it removes `v`. The reported
/// occupancy is the time-average of |I|/n over the second half of the run.
pub fn glauber_sample(g: &Graph, lambda: f64, steps: u64, seed: u64) -> Result<HardCoreSampleStats> {
    glauber_with_trace(g, lambda, steps, seed, 0).map(|(stats, _)| stats)
}

/// [`glauber_sample`] that also records `(step, |I|)` every `every` steps
/// (no trace when `every == 0`).
pub fn glauber_with_trace(
    g: &Graph,
    lambda: f64,
    steps: u64,
    seed: u64,
    every: u64,
) -> Result<(HardCoreSampleStats, Vec<(u64, usize)>)> {
    check_lambda(lambda)?;
    if steps < 1 {
        return Err(Error::pre("steps must be >= 1"));
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::pre("sampling on the null graph"));
    }
    let mut rng = rng(seed);
    let p_insert = lambda / (1.0 + lambda);
    let mut occupied = vec![false; n];
    // blocked[v] = number of occupied neighbors of v
    let mut blocked = vec![0u32; n];
    let mut size = 0usize;
    let burn_in = steps / 2;
    let mut acc: u128 = 0;
    let mut trace = Vec::new();
    for step in 0..steps {
        let v = rng.random_range(0..n);
        if rng.random_bool(p_insert) {
            if !occupied[v] && blocked[v] == 0 {
                occupied[v] = true;
                size += 1;
                for &w in g.neighbors(v) {
                    blocked[w] += 1;
                }
            }
        } else if occupied[v] {
            occupied[v] = false;
            size -= 1;
            for &w in g.neighbors(v) {
                blocked[w] -= 1;
            }
        }
        if step >= burn_in {
            acc += size as u128;
        }
        if every > 0 && step % every == 0 {
            trace.push((step, size));
        }
    }
    let samples = (steps - burn_in) as f64;
    Ok((
        HardCoreSampleStats {
            lambda,
            steps,
            empirical_occupancy: acc as f64 / samples / n as f64,
            seed,
        },
        trace,
    ))
}

/// Memoized `Z_{G[S]}(λ)` over vertex masks of a graph with at most 64 vertices.
pub(crate) struct MaskPartition {
    adj: Vec<u64>,
    lambda: f64,
    memo: HashMap<u64, f64>,
}

impl MaskPartition {
    pub(crate) fn new(g: &Graph, lambda: f64) -> Result<Self> {
        let all: Vec<usize> = (0..g.n()).collect();
        let small = g.small(&all)?;
        Ok(MaskPartition {
            adj: small.masks().to_vec(),
            lambda,
            memo: HashMap::new(),
        })
    }

    pub(crate) fn closed_nbhd(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    pub(crate) fn z(&mut self, mask: u64) -> f64 {
        if mask == 0 {
            return 1.0;
        }
        if mask.count_ones() == 1 {
            return 1.0 + self.lambda;
        }
        if let Some(&z) = self.memo.get(&mask) {
            return z;
        }
        let v = mask_bits(mask)
            .max_by_key(|&v| (self.adj[v] & mask).count_ones())
            .expect("nonempty");
        let z = self.z(mask & !(1 << v)) + self.lambda * self.z(mask & !self.closed_nbhd(v));
        self.memo.insert(mask, z);
        z
    }
}

/// Exact sequential sampler: vertices are decided in order 0, 1, ..., each one
/// joining with probability λ·Z_{H-N[v]}/Z_H where `H` is the still-undecided part.
pub struct ExactSampler {
    part: MaskPartition,
    n: usize,
}

impl ExactSampler {
    pub fn new(g: &Graph, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        if g.n() > MAX_EXACT_SAMPLE_VERTICES {
            return Err(Error::guard("vertex count", MAX_EXACT_SAMPLE_VERTICES, g.n()));
        }
        Ok(ExactSampler {
            part: MaskPartition::new(g, lambda)?,
            n: g.n(),
        })
    }

    pub fn sample<R: Rng>(&mut self, rng: &mut R) -> Vec<usize> {
        let mut rest: u64 = if self.n == 64 { u64::MAX } else { (1 << self.n) - 1 };
        let mut set = Vec::new();
        for v in 0..self.n {
            if rest >> v & 1 == 0 {
                continue;
            }
            let z = self.part.z(rest);
            let with = self.part.lambda * self.part.z(rest & !self.part.closed_nbhd(v));
            if rng.random::<f64>() * z < with {
                set.push(v);
                rest &= !self.part.closed_nbhd(v);
            } else {
                rest &= !(1 << v);
            }
        }
        set
    }
}

/// One exact draw from the hard-core distribution.
pub fn exact_sample(g: &Graph, lambda: f64, seed: u64) -> Result<Vec<usize>> {
    let mut sampler = ExactSampler::new(g, lambda)?;
    Ok(sampler.sample(&mut rng(seed)))
}

/// P[v ∈ I] = λ·Z_{G-N[v]}/Z_G for every vertex; `n <= 64`.
pub fn vertex_marginals(g: &Graph, lambda: f64) -> Result<Vec<f64>> {
    check_lambda(lambda)?;
    let mut part = MaskPartition::new(g, lambda)?;
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let z = part.z(all);
    Ok((0..g.n())
        .map(|v| lambda * part.z(all & !part.closed_nbhd(v)) / z)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::families;
    use crate::hardcore::poly::{independence_polynomial, occupancy_fraction};
    use crate::oracle;

    #[test]
    fn glauber_is_seed_deterministic() {
        let g = families::cycle(5);
        let a = glauber_sample(&g, 1.0, 10_000, 3).unwrap();
        let b = glauber_sample(&g, 1.0, 10_000, 3).unwrap();
        assert_eq!(a, b);
        assert!((0.0..=1.0).contains(&a.empirical_occupancy));
    }

    #[test]
    fn glauber_single_vertex() {
        let s = glauber_sample(&Graph::empty(1), 1.0, 200_000, 1).unwrap();
        assert!((s.empirical_occupancy - 0.5).abs() < 0.01);
    }

    #[test]
    fn trace_is_recorded() {
        let (_, trace) = glauber_with_trace(&families::path(4), 1.0, 100, 0, 10).unwrap();
        assert_eq!(trace.len(), 10);
        assert_eq!(trace[0].0, 0);
    }

    #[test]
    fn exact_sampler_outputs_independent_sets() {
        let g = families::petersen();
        let mut s = ExactSampler::new(&g, 1.5).unwrap();
        let mut r = rng(9);
        for _ in 0..200 {
            assert!(oracle::is_independent(&g, &s.sample(&mut r)));
        }
    }

    #[test]
    fn exact_sampler_frequencies() {
        let g = families::path(3);
        let mut s = ExactSampler::new(&g, 1.0).unwrap();
        let mut r = rng(4);
        let draws = 100_000;
        let hits = (0..draws).filter(|_| s.sample(&mut r) == vec![0, 2]).count();
        assert!((hits as f64 / draws as f64 - 0.2).abs() < 0.02);
    }

    #[test]
    fn marginals_sum_to_occupancy() {
        let g = families::petersen();
        let m = vertex_marginals(&g, 0.8).unwrap();
        let poly = independence_polynomial(&g).unwrap();
        let occ = occupancy_fraction(&poly, 0.8).unwrap();
        assert!((m.iter().sum::<f64>() / 10.0 - occ).abs() < 1e-12);
    }
}
