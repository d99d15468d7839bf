//! Independent sets in (k, r)-sparse graphs and the bound calculators built on them.
//!
//! [`sparse_iset`] turns the inductive proof of the bound
//! α(G) >= (1/r)(n/k^{1/r})^{1/(r-1)} into an algorithm: at each level it either
//! finds many high-degree vertices and recurses into the neighborhood of the one
//! lying in the fewest r-cliques, or falls back to the min-degree greedy.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::sparsity::{cliques_through, count_cliques, k_floor};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    /// Min-degree greedy on the current graph (base case r = 2).
    Turan { depth: usize, n: usize, avg_degree: f64 },
    /// k exceeds the number of r-subsets, so any single vertex meets the bound.
    Trivial { depth: usize, r: usize, n: usize, k: f64 },
    /// Many vertices of degree >= X: recurse into N(v).
    Case1 {
        depth: usize,
        r: usize,
        n: usize,
        k: f64,
        x: f64,
        b_size: usize,
        v: Vertex,
        n_v: u64,
        child_k: f64,
    },
    /// Few vertices of degree >= X: the average degree is small, run the greedy.
    Case2 {
        depth: usize,
        r: usize,
        n: usize,
        k: f64,
        x: f64,
        b_size: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndependentSetWitness {
    /// Sorted vertex ids in the input graph.
    pub vertices: Vec<Vertex>,
    /// Size the construction promises.
    pub guarantee: f64,
    pub trace: Vec<TraceStep>,
}

impl IndependentSetWitness {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// `{"size", "vertices", "guarantee", "trace"}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "size": self.size(),
            "vertices": self.vertices,
            "guarantee": self.guarantee,
            "trace": self.trace,
        })
    }
}

fn is_independent(g: &Graph, set: &[Vertex]) -> bool {
    let mut member = vec![false; g.n()];
    for &v in set {
        member[v] = true;
    }
    g.edges().all(|(u, v)| !(member[u] && member[v]))
}

/// Min-degree greedy: take a vertex of minimum remaining degree, delete its
/// closed neighborhood, repeat. Always returns at least n/(1+d) vertices.
pub fn turan_iset(g: &Graph) -> Result<IndependentSetWitness> {
    if g.n() == 0 {
        return Err(Error::pre("independent set of the null graph"));
    }
    let vertices = greedy_min_degree(g);
    Ok(IndependentSetWitness {
        guarantee: g.n() as f64 / (1.0 + g.avg_degree()),
        trace: vec![TraceStep::Turan {
            depth: 0,
            n: g.n(),
            avg_degree: g.avg_degree(),
        }],
        vertices,
    })
}

fn greedy_min_degree(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut queue: BTreeSet<(usize, Vertex)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut out = Vec::new();
    while let Some((_, v)) = queue.pop_first() {
        out.push(v);
        alive[v] = false;
        let removed: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        for &w in &removed {
            alive[w] = false;
            queue.remove(&(deg[w], w));
        }
        for &w in &removed {
            for &x in g.neighbors(w) {
                if alive[x] {
                    queue.remove(&(deg[x], x));
                    deg[x] -= 1;
                    queue.insert((deg[x], x));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// r^{2r}, or `None` when it exceeds `u128`.
fn min_order(r: usize) -> Option<u128> {
    (r as u128).checked_pow(2 * r as u32)
}

fn binomial_f64(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// (1/r)(n/k^{1/r})^{1/(r-1)}
pub fn sparse_guarantee(n: usize, k: f64, r: usize) -> f64 {
    let r_f = r as f64;
    (n as f64 / k.powf(1.0 / r_f)).powf(1.0 / (r_f - 1.0)) / r_f
}

/// True when `size >= (1/r)(n/k^{1/r})^{1/(r-1)}`, i.e. `(r·size)^{r(r-1)}·k >= n^r`.
/// Exact for integral `k`.
pub fn meets_sparse_guarantee(size: usize, n: usize, k: f64, r: usize) -> bool {
    if k.fract() == 0.0 && k < 2f64.powi(64) {
        let lhs = BigUint::from(r * size).pow((r * (r - 1)) as u32) * BigUint::from(k as u64);
        let rhs = BigUint::from(n).pow(r as u32);
        lhs >= rhs
    } else {
        size as f64 >= sparse_guarantee(n, k, r) * (1.0 - 1e-12)
    }
}

/// Constructive independent set in an n-vertex (k, r)-sparse graph of size at
/// least (1/r)(n/k^{1/r})^{1/(r-1)}.
///
/// Requires r >= 2, k >= 1, n >= r^{2r} and at most ⌊k⌋ r-cliques in `g`. The
/// output is checked for independence by a full edge scan and for the size
/// guarantee before it is returned.
pub fn sparse_iset(g: &Graph, k: f64, r: usize) -> Result<IndependentSetWitness> {
    if r < 2 {
        return Err(Error::pre(format!("r = {r} must be >= 2")));
    }
    if !(k >= 1.0) || !k.is_finite() {
        return Err(Error::pre(format!("k = {k} must be a finite real >= 1")));
    }
    let n = g.n();
    match min_order(r) {
        Some(m) if n as u128 >= m => {}
        _ => {
            return Err(Error::pre(format!(
                "n = {n} is below r^(2r) = {}",
                min_order(r).map_or("overflow".to_string(), |m| m.to_string())
            )))
        }
    }
    let all: Vec<Vertex> = (0..n).collect();
    let cliques = count_cliques(g, &all, r);
    if cliques > k_floor(k)? {
        return Err(Error::pre(format!(
            "graph has {cliques} copies of K_{r}, more than ⌊k⌋ = {}",
            k_floor(k)?
        )));
    }
    let mut trace = Vec::new();
    let local = recurse(g, k, r, 0, &mut trace)?;
    let mut vertices = local;
    vertices.sort_unstable();
    if !is_independent(g, &vertices) {
        return Err(Error::Internal("sparse_iset output is not independent".into()));
    }
    let guarantee = sparse_guarantee(n, k, r);
    if !meets_sparse_guarantee(vertices.len(), n, k, r) {
        return Err(Error::Internal(format!(
            "sparse_iset returned {} vertices, below the guarantee {guarantee}",
            vertices.len()
        )));
    }
    Ok(IndependentSetWitness {
        vertices,
        guarantee,
        trace,
    })
}

fn recurse(g: &Graph, k: f64, r: usize, depth: usize, trace: &mut Vec<TraceStep>) -> Result<Vec<Vertex>> {
    let n = g.n();
    if r == 2 {
        trace.push(TraceStep::Turan {
            depth,
            n,
            avg_degree: g.avg_degree(),
        });
        return Ok(greedy_min_degree(g));
    }
    if k > binomial_f64(n, r) {
        trace.push(TraceStep::Trivial { depth, r, n, k });
        return Ok(greedy_min_degree(g));
    }
    let r_f = r as f64;
    let alpha_r = ((r_f - 1.0) / r_f).powf(r_f - 2.0 - 1.0 / (r_f - 1.0));
    let beta_r = r_f - 1.0;
    let x = alpha_r * (n as f64).powf((r_f - 2.0) / (r_f - 1.0)) * k.powf(1.0 / (r_f * (r_f - 1.0)));
    let b: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) as f64 >= x).collect();
    if (b.len() as f64) < beta_r * k.powf(1.0 / r_f) {
        trace.push(TraceStep::Case2 {
            depth,
            r,
            n,
            k,
            x,
            b_size: b.len(),
        });
        return Ok(greedy_min_degree(g));
    }
    // the averaging step: some v in B lies in at most rk/|B| copies of K_r
    let (v, n_v) = b
        .iter()
        .map(|&v| (v, cliques_through(g, v, r)))
        .min_by_key(|&(v, c)| (c, v))
        .expect("B is nonempty");
    if n_v as f64 > r_f * k / b.len() as f64 * (1.0 + 1e-12) {
        return Err(Error::Internal(format!(
            "minimum n_v = {n_v} exceeds rk/|B| = {}",
            r_f * k / b.len() as f64
        )));
    }
    let child_k = r_f * k.powf(1.0 - 1.0 / r_f) / beta_r;
    let nbhd = g.neighbors(v).to_vec();
    let child_min = min_order(r - 1).expect("small r");
    if child_k < 1.0 || (nbhd.len() as u128) < child_min {
        return Err(Error::Internal(format!(
            "child instance violates its preconditions: k~ = {child_k}, |N(v)| = {}",
            nbhd.len()
        )));
    }
    let h = g.induced(&nbhd);
    let all: Vec<Vertex> = (0..h.n()).collect();
    let recount = count_cliques(&h, &all, r - 1);
    if recount != n_v || recount > k_floor(child_k)? {
        return Err(Error::Internal(format!(
            "child sparsity recount {recount} disagrees with n_v = {n_v} or exceeds ⌊k~⌋"
        )));
    }
    trace.push(TraceStep::Case1 {
        depth,
        r,
        n,
        k,
        x,
        b_size: b.len(),
        v,
        n_v,
        child_k,
    });
    let inner = recurse(&h, child_k, r - 1, depth + 1, trace)?;
    Ok(inner.into_iter().map(|i| nbhd[i]).collect())
}

fn check_bound_inputs(n: usize, k: f64, r: usize, min_r: usize) -> Result<()> {
    if r < min_r {
        return Err(Error::pre(format!("r = {r} must be >= {min_r}")));
    }
    if !(k >= 1.0) {
        return Err(Error::pre(format!("k = {k} must be >= 1")));
    }
    match min_order(r) {
        Some(m) if n as u128 >= m => Ok(()),
        _ => Err(Error::pre(format!("n = {n} is below r^(2r)"))),
    }
}

/// Lower bound α(log(nλ) − log k / r − (r−1) log(rα)) on log Z_G(λ) for an
/// n-vertex (k, r)-sparse graph and any positive integer α. Requires r >= 3.
pub fn z_lower_bound(n: usize, k: f64, r: usize, lambda: f64, alpha: u64) -> Result<f64> {
    check_bound_inputs(n, k, r, 3)?;
    z_bound_formula(n, k, r, lambda, alpha)
}

/// [`z_lower_bound`] extended to r = 2. The counting argument only needs the
/// independent-set bound, whose base case r = 2 holds for n >= 16.
pub fn z_lower_bound_from_r2(n: usize, k: f64, r: usize, lambda: f64, alpha: u64) -> Result<f64> {
    check_bound_inputs(n, k, r, 2)?;
    z_bound_formula(n, k, r, lambda, alpha)
}

fn z_bound_formula(n: usize, k: f64, r: usize, lambda: f64, alpha: u64) -> Result<f64> {
    crate::hardcore::check_lambda(lambda)?;
    if alpha < 1 {
        return Err(Error::pre("α must be a positive integer"));
    }
    let a = alpha as f64;
    let r_f = r as f64;
    Ok(a * ((n as f64 * lambda).ln() - k.ln() / r_f - (r_f - 1.0) * (r_f * a).ln()))
}

/// The α used to lower-bound z in the ratio bound:
/// (1/(r e^{r/(r−1)}))(nλ/k^{1/r})^{1/(r−1)}, before rounding.
pub fn alpha_choice(n: usize, k: f64, r: usize, lambda: f64) -> f64 {
    let r_f = r as f64;
    (n as f64 * lambda / k.powf(1.0 / r_f)).powf(1.0 / (r_f - 1.0)) / (r_f * (r_f / (r_f - 1.0)).exp())
}

/// A formula value valid only up to an unquantified (1 ± o(1)) factor.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReferenceValue {
    pub value: f64,
    pub asymptotic_reference: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl ReferenceValue {
    pub(crate) fn new(value: f64) -> Self {
        ReferenceValue {
            value,
            asymptotic_reference: true,
            warnings: Vec::new(),
        }
    }
}

/// ω = e^{r/(r−2)} k^{1/(r(r−2))}
pub fn omega(k: f64, r: usize) -> f64 {
    let r_f = r as f64;
    (r_f / (r_f - 2.0)).exp() * k.powf(1.0 / (r_f * (r_f - 2.0)))
}

/// z / ((r − 2) log(ωz)), the idealized lower bound on λZ'/Z for z = log Z.
pub fn ratio_reference(z: f64, k: f64, r: usize) -> Result<ReferenceValue> {
    if r < 3 {
        return Err(Error::pre(format!("r = {r} must be >= 3")));
    }
    if !(k >= 1.0) {
        return Err(Error::pre(format!("k = {k} must be >= 1")));
    }
    let w = omega(k, r) * z;
    if !(z > 0.0) || !(w > 1.0) {
        return Err(Error::domain(format!("ωz = {w} must exceed 1")));
    }
    Ok(ReferenceValue::new(z / ((r as f64 - 2.0) * w.ln())))
}

/// Degree scale, sparsity exponent and clique order of the asymptotic bounds.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EtaParameters {
    /// Δ, or the average degree d for the average-degree bound.
    pub delta: f64,
    pub eps: f64,
    pub r: usize,
}

impl EtaParameters {
    pub fn new(delta: f64, eps: f64, r: usize) -> Result<Self> {
        if !(delta > std::f64::consts::E) {
            return Err(Error::domain(format!("degree scale {delta} must exceed e")));
        }
        if !(0.0..=1.0).contains(&eps) {
            return Err(Error::domain(format!("ε = {eps} not in [0, 1]")));
        }
        if r < 3 {
            return Err(Error::domain(format!("r = {r} must be >= 3")));
        }
        Ok(EtaParameters { delta, eps, r })
    }

    /// η = ε + r log log Δ / log Δ
    pub fn eta(&self) -> f64 {
        let l = self.delta.ln();
        self.eps + self.r as f64 * l.ln() / l
    }

    /// k = Δ^{εr}
    pub fn k(&self) -> f64 {
        self.delta.powf(self.eps * self.r as f64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    IsetMaxDeg,
    IsetAvgDeg,
    ChiC,
}

impl FromStr for BoundKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "iset_max_deg" => Ok(BoundKind::IsetMaxDeg),
            "iset_avg_deg" => Ok(BoundKind::IsetAvgDeg),
            "chi_c" => Ok(BoundKind::ChiC),
            _ => Err(Error::pre(format!("unknown bound kind {s:?}"))),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::IsetMaxDeg => "iset_max_deg",
            BoundKind::IsetAvgDeg => "iset_avg_deg",
            BoundKind::ChiC => "chi_c",
        })
    }
}

/// n/(ηΔ), n/(9ηd) or ηΔ·min{2, (1+ε)/(1−ε)}, with the (1 ± o(1)) factors dropped.
pub fn reference_bound(kind: BoundKind, params: &EtaParameters, n: usize) -> Result<ReferenceValue> {
    let eta = params.eta();
    let value = match kind {
        BoundKind::IsetMaxDeg => n as f64 / (eta * params.delta),
        BoundKind::IsetAvgDeg => n as f64 / (9.0 * eta * params.delta),
        BoundKind::ChiC => {
            if params.eps >= 1.0 {
                return Err(Error::domain("ε must be < 1 for the coloring bound"));
            }
            eta * params.delta * f64::min(2.0, (1.0 + params.eps) / (1.0 - params.eps))
        }
    };
    let mut out = ReferenceValue::new(value);
    let loglog = params.delta.ln().ln();
    if params.r as f64 > loglog {
        out.warnings.push(format!(
            "r = {} exceeds log log Δ = {loglog:.4}; the bounds assume r is much smaller",
            params.r
        ));
    }
    Ok(out)
}

/// Outcome of restricting to low-degree vertices with sparse neighborhoods.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeReduction {
    /// Vertices of degree at most 3d.
    pub v1: Vec<Vertex>,
    /// Vertices whose neighborhood holds at most ⌊3d^{εr}⌋ r-cliques.
    pub v2: Vec<Vertex>,
    /// V1 ∩ V2, the vertex set of `subgraph`.
    pub v3: Vec<Vertex>,
    pub subgraph: Graph,
    pub d: f64,
    pub k: f64,
}

impl DegreeReduction {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "d": self.d,
            "k": self.k,
            "v1_size": self.v1.len(),
            "v2_size": self.v2.len(),
            "v3": self.v3,
        })
    }
}

/// Passes from a (k, r+1)-sparse graph with average degree d to the induced
/// subgraph on V1 ∩ V2, which has at least n/3 vertices when (r+1)k <= n d^{εr}.
///
/// `k` defaults to n d^{εr}/(r+1).
pub fn avg_degree_reduction(g: &Graph, k: Option<f64>, r: usize, eps: f64) -> Result<DegreeReduction> {
    if r < 2 {
        return Err(Error::pre(format!("r = {r} must be >= 2")));
    }
    if !(eps >= 0.0) {
        return Err(Error::domain(format!("ε = {eps} must be >= 0")));
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::pre("reduction of the null graph"));
    }
    let d = g.avg_degree();
    let scale = d.powf(eps * r as f64);
    let cap = n as f64 * scale / (r + 1) as f64;
    let k = k.unwrap_or(cap);
    if k > cap * (1.0 + 1e-12) {
        return Err(Error::pre(format!(
            "k = {k} exceeds n d^(εr)/(r+1) = {cap}"
        )));
    }
    let all: Vec<Vertex> = (0..n).collect();
    let big = count_cliques(g, &all, r + 1);
    if big > k_floor(k)? {
        return Err(Error::pre(format!(
            "graph has {big} copies of K_{}, more than ⌊k⌋ = {}",
            r + 1,
            k_floor(k)?
        )));
    }
    let local_budget = k_floor(3.0 * scale)?;
    let v1: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) as f64 <= 3.0 * d).collect();
    let v2: Vec<Vertex> = (0..n)
        .filter(|&v| count_cliques(g, g.neighbors(v), r) <= local_budget)
        .collect();
    let v3: Vec<Vertex> = v1.iter().copied().filter(|v| v2.binary_search(v).is_ok()).collect();
    if v3.len() < n.div_ceil(3) {
        return Err(Error::Internal(format!(
            "|V1 ∩ V2| = {} is below n/3 for n = {n}",
            v3.len()
        )));
    }
    Ok(DegreeReduction {
        subgraph: g.induced(&v3),
        v1,
        v2,
        v3,
        d,
        k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{families, random_triangle_free};
    use crate::oracle;

    #[test]
    fn turan_examples() {
        let c5 = turan_iset(&families::cycle(5)).unwrap();
        assert!(c5.size() >= 2);
        assert_eq!(turan_iset(&Graph::empty(6)).unwrap().size(), 6);
        let p = turan_iset(&families::petersen()).unwrap();
        assert!(p.size() >= 3);
        assert!(oracle::is_independent(&families::petersen(), &p.vertices));
        assert!(turan_iset(&Graph::empty(0)).is_err());
    }

    #[test]
    fn sparse_iset_base_case() {
        let g = Graph::from_edges(16, &[(0, 1)]).unwrap();
        let w = sparse_iset(&g, 1.0, 2).unwrap();
        assert!((w.guarantee - 8.0).abs() < 1e-12);
        assert_eq!(w.size(), 15);
    }

    #[test]
    fn sparse_iset_on_long_path() {
        let g = families::path(729);
        let w = sparse_iset(&g, 1.0, 3).unwrap();
        assert!((w.guarantee - 9.0).abs() < 1e-9);
        assert!(w.size() >= 9);
        assert!(oracle::is_independent(&g, &w.vertices));
    }

    #[test]
    fn sparse_iset_on_bipartite_graph() {
        let g = random_triangle_free(800, 12_000, 3).unwrap();
        let w = sparse_iset(&g, 1.0, 3).unwrap();
        assert!(w.size() >= 10);
        assert!(matches!(w.trace[0], TraceStep::Case1 { .. }));
    }

    #[test]
    fn sparse_iset_preconditions() {
        assert!(sparse_iset(&families::path(100), 1.0, 3).is_err());
        assert!(sparse_iset(&families::complete(16), 1.0, 2).is_err());
        assert!(sparse_iset(&families::path(729), 0.5, 3).is_err());
    }

    #[test]
    fn exact_guarantee_comparison() {
        // (1/3)·sqrt(729) = 9 exactly
        assert!(meets_sparse_guarantee(9, 729, 1.0, 3));
        assert!(!meets_sparse_guarantee(8, 729, 1.0, 3));
    }

    #[test]
    fn z_lower_bound_examples() {
        assert!(z_lower_bound(729, 1.0, 3, 1.0, 9).unwrap().abs() < 1e-9);
        let v = z_lower_bound(2000, 1.0, 3, 1.0, 10).unwrap();
        assert!((v - 10.0 * (2000f64.ln() - 2.0 * 30f64.ln())).abs() < 1e-9);
        assert!(z_lower_bound(700, 1.0, 3, 1.0, 9).is_err());
        assert!(z_lower_bound(729, 1.0, 2, 1.0, 9).is_err());
        assert!(z_lower_bound_from_r2(16, 1.0, 2, 1.0, 3).is_ok());
    }

    #[test]
    fn ratio_reference_examples() {
        let w = omega(1.0, 3);
        assert!((w - 3f64.exp()).abs() < 1e-9);
        let z = (-1f64).exp();
        let v = ratio_reference(z, 1.0, 3).unwrap();
        assert!((v.value - z / 2.0).abs() < 1e-12);
        assert!(v.asymptotic_reference);
        let v4 = ratio_reference(10.0, 1.0, 4).unwrap().value;
        assert!((v4 - 0.5 * 10.0 / (2f64.exp() * 10.0).ln()).abs() < 1e-12);
        assert!(ratio_reference(1e-3, 1.0, 3).is_err());
    }

    #[test]
    fn reference_bound_examples() {
        let p = EtaParameters::new(1e6, 0.0, 3).unwrap();
        assert!((p.eta() - 0.570_157).abs() < 1e-4);
        let b = reference_bound(BoundKind::IsetMaxDeg, &p, 1_000_000).unwrap();
        assert!((b.value - 1.7538).abs() < 1e-3);
        let avg = reference_bound(BoundKind::IsetAvgDeg, &p, 1_000_000).unwrap();
        assert!((avg.value * 9.0 - b.value).abs() < 1e-12);
        let chi = reference_bound(BoundKind::ChiC, &p, 0).unwrap();
        assert!((chi.value - p.eta() * 1e6).abs() < 1e-6);
        assert!(EtaParameters::new(2.0, 0.0, 3).is_err());
        assert!(!reference_bound(BoundKind::ChiC, &p, 0).unwrap().warnings.is_empty());
    }

    #[test]
    fn reduction_examples() {
        let star = families::star(9);
        let red = avg_degree_reduction(&star, None, 2, 0.0).unwrap();
        assert!(!red.v1.contains(&0));
        assert_eq!(red.v3.len(), 9);
        let pet = families::petersen();
        let red = avg_degree_reduction(&pet, None, 3, 0.0).unwrap();
        assert_eq!(red.v3.len(), 10);
        assert!(avg_degree_reduction(&families::complete(5), Some(0.0), 2, 0.0).is_err());
    }
}
