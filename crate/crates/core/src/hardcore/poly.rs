//! Exact independence polynomials and their evaluation.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;

use super::scaled::Scaled;
use crate::error::{Error, Result};
use crate::graph::{mask_bits, Graph, SmallGraph};

/// General graphs above this size are rejected by [`independence_polynomial`].
pub const MAX_POLY_VERTICES: usize = 34;

/// `coeffs[j]` = number of independent sets of size `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependencePolynomial {
    coeffs: Vec<BigUint>,
    n: usize,
}

impl IndependencePolynomial {
    pub fn from_coeffs(coeffs: Vec<BigUint>, n: usize) -> Self {
        debug_assert!(coeffs.first().is_some_and(One::is_one));
        IndependencePolynomial { coeffs, n }
    }

    fn from_u64(coeffs: Vec<u64>, n: usize) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(BigUint::from).collect(), n)
    }

    /// Polynomial of the path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_coeffs(path_coeffs(n), n)
    }

    /// Polynomial of the cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::pre(format!("cycle needs n >= 3, got {n}")));
        }
        // v out: path on n-1; v in: both neighbors out, path on n-3
        let out = path_coeffs(n - 1);
        let inn = path_coeffs(n - 3);
        Ok(Self::from_coeffs(add_shifted(&out, &inn), n))
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Vertex count of the source graph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// α(G), the degree of the polynomial.
    pub fn alpha(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// i(G), the total number of independent sets.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// ᾱ(G): the largest ℓ with `2 · #{I : |I| >= ℓ} >= i(G)`.
    pub fn median_independence_number(&self) -> usize {
        let total = self.total();
        let mut tail = BigUint::zero();
        for l in (0..self.coeffs.len()).rev() {
            tail += &self.coeffs[l];
            if &tail * 2u32 >= total {
                return l;
            }
        }
        0
    }

    /// `(Z(λ), Z'(λ))` in extended precision.
    pub fn eval(&self, lambda: f64) -> (Scaled, Scaled) {
        let lam = Scaled::from_f64(lambda);
        let mut z = Scaled::ZERO;
        let mut dz = Scaled::ZERO;
        // Horner for Z and Z' side by side
        for c in self.coeffs.iter().rev() {
            dz = dz * lam + z;
            z = z * lam + Scaled::from_biguint(c);
        }
        (z, dz)
    }

    /// `(Z(λ), Z'(λ))` as exact rationals.
    pub fn eval_exact(&self, lambda: &BigRational) -> (BigRational, BigRational) {
        let mut z = BigRational::zero();
        let mut dz = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            dz = dz * lambda + &z;
            z = z * lambda + BigRational::from_integer(c.clone().into());
        }
        (z, dz)
    }

    /// Integer array; entries above 2^53 become decimal strings.
    pub fn to_json(&self) -> Value {
        let limit = BigUint::from(1u64 << 53);
        Value::Array(
            self.coeffs
                .iter()
                .map(|c| {
                    if c <= &limit {
                        Value::from(c.to_u64().expect("fits"))
                    } else {
                        Value::from(c.to_string())
                    }
                })
                .collect(),
        )
    }
}

fn path_coeffs(n: usize) -> Vec<BigUint> {
    // P_{-1} and P_0 both have polynomial 1
    let mut prev = vec![BigUint::one()];
    let mut cur = vec![BigUint::one()];
    for _ in 0..n {
        let next = add_shifted(&cur, &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `a + x·b`
fn add_shifted(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let len = a.len().max(b.len() + 1);
    let mut out = vec![BigUint::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + 1] += c;
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// Exact independence polynomial.
///
/// Graphs with at most [`MAX_POLY_VERTICES`] vertices go through a memoized
/// branch on a maximum-degree vertex, `Z_G = Z_{G-v} + x·Z_{G-N[v]}`, splitting
/// into connected components first. Larger graphs are accepted only when every
/// component is a path or a cycle, which have closed-form recurrences.
pub fn independence_polynomial(g: &Graph) -> Result<IndependencePolynomial> {
    if g.n() <= MAX_POLY_VERTICES {
        let all: Vec<usize> = (0..g.n()).collect();
        let small = g.small(&all)?;
        return Ok(IndependencePolynomial::from_u64(small_polynomial(&small), g.n()));
    }
    if g.max_degree() <= 2 {
        return Ok(IndependencePolynomial::from_coeffs(
            paths_and_cycles(g),
            g.n(),
        ));
    }
    Err(Error::guard("vertex count (general graph)", MAX_POLY_VERTICES, g.n()))
}

fn paths_and_cycles(g: &Graph) -> Vec<BigUint> {
    let mut seen = vec![false; g.n()];
    let mut result = vec![BigUint::one()];
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        let (mut size, mut deg_sum) = (0, 0);
        while let Some(v) = stack.pop() {
            size += 1;
            deg_sum += g.degree(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let comp = if deg_sum / 2 == size && size >= 3 {
            IndependencePolynomial::cycle(size).expect("size >= 3").coeffs
        } else {
            path_coeffs(size)
        };
        result = multiply(&result, &comp);
    }
    result
}

fn multiply(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients for a graph on at most 64 vertices. Counts stay below 2^64 for
/// the sizes this is used at.
fn small_polynomial(g: &SmallGraph) -> Vec<u64> {
    let mut engine = Engine {
        adj: g.masks(),
        memo: HashMap::new(),
    };
    engine.poly(g.all())
}

struct Engine<'a> {
    adj: &'a [u64],
    memo: HashMap<u64, Vec<u64>>,
}

impl Engine<'_> {
    fn poly(&mut self, mask: u64) -> Vec<u64> {
        match mask.count_ones() {
            0 => return vec![1],
            1 => return vec![1, 1],
            _ => {}
        }
        if let Some(p) = self.memo.get(&mask) {
            return p.clone();
        }
        let comp = self.component(mask);
        let result = if comp != mask {
            let a = self.poly(comp);
            let b = self.poly(mask & !comp);
            mul_u64(&a, &b)
        } else {
            let v = mask_bits(mask)
                .max_by_key(|&v| (self.adj[v] & mask).count_ones())
                .expect("nonempty");
            let out = self.poly(mask & !(1 << v));
            let inn = self.poly(mask & !(self.adj[v] | 1 << v));
            let mut r = out;
            if r.len() < inn.len() + 1 {
                r.resize(inn.len() + 1, 0);
            }
            for (i, c) in inn.iter().enumerate() {
                r[i + 1] += c;
            }
            r
        };
        self.memo.insert(mask, result.clone());
        result
    }

    /// Connected component of the lowest vertex of `mask`.
    fn component(&self, mask: u64) -> u64 {
        let mut comp = mask & mask.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_bits(frontier) {
                next |= self.adj[v];
            }
            next &= mask & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }
}

fn mul_u64(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Occupancy fraction λZ'(λ)/(n·Z(λ)).
pub fn occupancy_fraction(poly: &IndependencePolynomial, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    if poly.n() == 0 {
        return Err(Error::pre("occupancy fraction of the null graph"));
    }
    let (z, dz) = poly.eval(lambda);
    Ok((dz * lambda / (z * poly.n() as f64)).to_f64())
}

/// Occupancy fraction as an exact rational.
pub fn occupancy_fraction_exact(
    poly: &IndependencePolynomial,
    lambda: &BigRational,
) -> Result<BigRational> {
    if lambda <= &BigRational::zero() {
        return Err(Error::domain(format!("fugacity {lambda} must be positive")));
    }
    if poly.n() == 0 {
        return Err(Error::pre("occupancy fraction of the null graph"));
    }
    let (z, dz) = poly.eval_exact(lambda);
    Ok(dz * lambda / (z * BigRational::from_integer(poly.n().into())))
}

pub(crate) fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::domain(format!("fugacity λ = {lambda} must be positive and finite")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{families, gnp};
    use crate::oracle;

    fn coeffs(g: &Graph) -> Vec<u64> {
        independence_polynomial(g)
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| c.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn known_polynomials() {
        assert_eq!(coeffs(&Graph::empty(3)), vec![1, 3, 3, 1]);
        assert_eq!(coeffs(&families::complete(6)), vec![1, 6]);
        assert_eq!(coeffs(&families::path(3)), vec![1, 3, 1]);
        assert_eq!(coeffs(&families::cycle(5)), vec![1, 5, 5]);
        assert_eq!(coeffs(&Graph::empty(0)), vec![1]);
    }

    #[test]
    fn closed_forms_match_engine() {
        for n in 0..20 {
            let p = IndependencePolynomial::path(n);
            assert_eq!(p, independence_polynomial(&families::path(n)).unwrap());
        }
        for n in 3..20 {
            let c = IndependencePolynomial::cycle(n).unwrap();
            assert_eq!(c, independence_polynomial(&families::cycle(n)).unwrap());
        }
    }

    #[test]
    fn large_degree_two_graphs() {
        let g = families::path(40).disjoint_union(&families::cycle(30));
        let p = independence_polynomial(&g).unwrap();
        let q = multiply(
            IndependencePolynomial::path(40).coeffs(),
            IndependencePolynomial::cycle(30).unwrap().coeffs(),
        );
        assert_eq!(p.coeffs(), &q[..]);
        assert!(independence_polynomial(&families::complete(35)).is_err());
    }

    #[test]
    fn engine_matches_enumeration() {
        for seed in 0..20 {
            let g = gnp(13, 0.3, seed).unwrap();
            assert_eq!(coeffs(&g), oracle::independence_counts_naive(&g));
        }
    }

    #[test]
    fn occupancy_examples() {
        let k2 = independence_polynomial(&families::complete(2)).unwrap();
        assert!((occupancy_fraction(&k2, 1.0).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        let c5 = independence_polynomial(&families::cycle(5)).unwrap();
        assert!((occupancy_fraction(&c5, 1.0).unwrap() - 3.0 / 11.0).abs() < 1e-15);
        let e = independence_polynomial(&Graph::empty(4)).unwrap();
        assert!((occupancy_fraction(&e, 0.7).unwrap() - 0.7 / 1.7).abs() < 1e-15);
        let exact = occupancy_fraction_exact(&c5, &BigRational::one()).unwrap();
        assert_eq!(exact, BigRational::new(3.into(), 11.into()));
        assert!(occupancy_fraction(&c5, 0.0).is_err());
    }

    #[test]
    fn median_examples() {
        let med = |g: &Graph| independence_polynomial(g).unwrap().median_independence_number();
        assert_eq!(med(&families::complete(7)), 1);
        assert_eq!(med(&Graph::empty(2)), 1);
        assert_eq!(med(&families::cycle(5)), 1);
        assert_eq!(med(&Graph::empty(16)), 8);
    }

    #[test]
    fn json_switches_to_strings() {
        let p = IndependencePolynomial::path(200);
        let json = p.to_json();
        assert_eq!(json[0], 1);
        assert_eq!(json[1], 200);
        assert!(json[50].is_string());
    }
}
