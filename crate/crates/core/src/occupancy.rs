//! Local occupancy certificates.
//!
//! A certificate assigns (β_u, γ_u) to every vertex. It is valid at fugacity λ when
//! for every u and every induced subgraph F of G[N(u)], including the empty one,
//!
//! ```text
//! β_u · λ/(1+λ) · 1/Z_F(λ) + γ_u · λZ_F'(λ)/Z_F(λ) >= 1.
//! ```
//!
//! The strong variant quantifies over all subgraphs of G[N(u)], not only induced
//! ones. A valid certificate gives occupancy fraction >= 1/(β + γΔ).
//!
//! The checker evaluates all neighborhood subsets with a subset DP:
//! `Z(S) = Z(S−v) + λZ(S∖N[v])` and, for `W = λZ'`,
//! `W(S) = W(S−v) + λZ(S∖N[v]) + λW(S∖N[v])`. All terms are positive, so the
//! relative error stays within a few ulps per level.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::omega;
use crate::error::{Error, Result};
use crate::gen::rng;
use crate::graph::{mask_bits, Graph, Vertex};
use crate::hardcore::{check_lambda, independence_polynomial};

/// Largest neighborhood the induced-mode checker enumerates.
pub const MAX_CHECK_DEGREE: usize = 22;
/// Largest neighborhood the strong-mode checker enumerates.
pub const MAX_STRONG_DEGREE: usize = 12;
/// Strong mode also caps `|E(G[N(u)])| + deg(u)` at this many bits of work.
pub const MAX_STRONG_WORK_BITS: usize = 26;
/// Margins down to `-CHECK_TOLERANCE` count as passing.
pub const CHECK_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Induced,
    Strong,
}

/// Inputs of the closed-form parameter choice, per vertex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverInputs {
    pub d: Vec<f64>,
    pub sigma: f64,
    pub r: Vec<usize>,
    pub k: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Manual,
    Solved(SolverInputs),
}

#[derive(Clone, Debug, PartialEq)]
pub struct OccupancyCertificate {
    pub lambda: f64,
    pub mode: Mode,
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
    pub provenance: Provenance,
}

#[derive(Serialize, Deserialize)]
struct CertDoc {
    lambda: f64,
    mode: Mode,
    vertices: Vec<VertexDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
}

#[derive(Serialize, Deserialize)]
struct VertexDoc {
    v: Vertex,
    beta: f64,
    gamma: f64,
}

impl OccupancyCertificate {
    pub fn new(lambda: f64, mode: Mode, beta: Vec<f64>, gamma: Vec<f64>) -> Result<Self> {
        check_lambda(lambda)?;
        if beta.len() != gamma.len() {
            return Err(Error::pre("β and γ maps have different lengths"));
        }
        if let Some(v) = (0..beta.len()).find(|&v| !(beta[v] > 0.0 && gamma[v] > 0.0)) {
            return Err(Error::domain(format!(
                "β and γ must be positive, vertex {v} has ({}, {})",
                beta[v], gamma[v]
            )));
        }
        Ok(OccupancyCertificate {
            lambda,
            mode,
            beta,
            gamma,
            provenance: Provenance::Manual,
        })
    }

    /// Same (β, γ) at each of `n` vertices.
    pub fn uniform(n: usize, lambda: f64, mode: Mode, beta: f64, gamma: f64) -> Result<Self> {
        Self::new(lambda, mode, vec![beta; n], vec![gamma; n])
    }

    pub fn max_beta(&self) -> f64 {
        self.beta.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_gamma(&self) -> f64 {
        self.gamma.iter().copied().fold(0.0, f64::max)
    }

    /// Same certificate with every β and γ multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        OccupancyCertificate {
            beta: self.beta.iter().map(|b| b * factor).collect(),
            gamma: self.gamma.iter().map(|g| g * factor).collect(),
            ..self.clone()
        }
    }

    /// `{"lambda", "mode", "vertices": [{"v", "beta", "gamma"}]}`, plus the solver
    /// inputs when the parameters came from the closed forms.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = CertDoc {
            lambda: self.lambda,
            mode: self.mode,
            vertices: (0..self.beta.len())
                .map(|v| VertexDoc {
                    v,
                    beta: self.beta[v],
                    gamma: self.gamma[v],
                })
                .collect(),
            provenance: match &self.provenance {
                Provenance::Manual => None,
                p => Some(p.clone()),
            },
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value, n: usize) -> Result<Self> {
        let doc: CertDoc = serde_json::from_value(value.clone())?;
        let mut beta = vec![f64::NAN; n];
        let mut gamma = vec![f64::NAN; n];
        for e in doc.vertices {
            if e.v >= n {
                return Err(Error::pre(format!("certificate names vertex {} outside 0..{n}", e.v)));
            }
            beta[e.v] = e.beta;
            gamma[e.v] = e.gamma;
        }
        let mut cert = Self::new(doc.lambda, doc.mode, beta, gamma)?;
        if let Some(p) = doc.provenance {
            cert.provenance = p;
        }
        Ok(cert)
    }
}

/// The subgraph attaining the smallest margin.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub u: Vertex,
    /// Bit i stands for the i-th smallest neighbor of u.
    pub mask: u64,
    pub vertices: Vec<Vertex>,
    /// Edges of F in strong mode; `None` means the induced subgraph.
    pub edges: Option<Vec<(Vertex, Vertex)>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckVerdict {
    pub pass: bool,
    pub worst_margin: f64,
    pub witness: Option<Witness>,
    /// False for the sampled audit, which does not cover every subgraph.
    pub exhaustive: bool,
}

impl CheckVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// Left-hand side of the local occupancy inequality minus one.
#[inline]
fn margin(beta: f64, gamma: f64, c: f64, z: f64, w: f64) -> f64 {
    (beta * c + gamma * w) / z - 1.0
}

/// `(Z_F(λ), λZ_F'(λ))` for `F = H[S]`, every vertex mask `S` of `H` given by
/// adjacency masks.
fn subset_terms(adj: &[u64], lambda: f64) -> (Vec<f64>, Vec<f64>) {
    let m = adj.len();
    let size = 1usize << m;
    let mut z = vec![0.0; size];
    let mut w = vec![0.0; size];
    z[0] = 1.0;
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let without = s & (s - 1);
        let rest = s & !(adj[v] as usize) & !(1 << v);
        z[s] = z[without] + lambda * z[rest];
        w[s] = w[without] + lambda * z[rest] + lambda * w[rest];
    }
    (z, w)
}

/// `(Z_F, λZ_F')` for every induced subgraph `F` of `G[N(u)]`, indexed by the
/// neighbor mask.
pub fn neighborhood_terms(g: &Graph, u: Vertex, lambda: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    check_lambda(lambda)?;
    if g.degree(u) > MAX_CHECK_DEGREE {
        return Err(Error::guard("degree (exhaustive check)", MAX_CHECK_DEGREE, g.degree(u)));
    }
    let nb = g.small_neighborhood(u)?;
    Ok(subset_terms(nb.masks(), lambda))
}

#[derive(Clone, Copy)]
struct Worst {
    margin: f64,
    u: Vertex,
    mask: u64,
    edge_mask: u64,
}

impl Worst {
    /// Smaller margin wins; exact ties go to the smaller (u, mask, edge mask).
    fn better(self, other: Worst) -> Worst {
        let key = |w: &Worst| (w.u, w.mask, w.edge_mask);
        if other.margin < self.margin || (other.margin == self.margin && key(&other) < key(&self)) {
            other
        } else {
            self
        }
    }
}

/// Exhaustively checks the certificate at every vertex.
pub fn check_certificate(g: &Graph, cert: &OccupancyCertificate) -> Result<CheckVerdict> {
    if cert.beta.len() != g.n() {
        return Err(Error::pre(format!(
            "certificate covers {} vertices, graph has {}",
            cert.beta.len(),
            g.n()
        )));
    }
    let limit = match cert.mode {
        Mode::Induced => MAX_CHECK_DEGREE,
        Mode::Strong => MAX_STRONG_DEGREE,
    };
    if let Some(u) = (0..g.n()).find(|&u| g.degree(u) > limit) {
        return Err(Error::guard("degree (exhaustive check, use the sampled audit)", limit, g.degree(u)));
    }
    if cert.mode == Mode::Strong {
        for u in 0..g.n() {
            let nb = g.small_neighborhood(u)?;
            let bits = nb.edges().len() + g.degree(u);
            if bits > MAX_STRONG_WORK_BITS {
                return Err(Error::guard("edges + degree of a neighborhood (strong check)", MAX_STRONG_WORK_BITS, bits));
            }
        }
    }
    let lambda = cert.lambda;
    let c = lambda / (1.0 + lambda);
    let per_vertex: Vec<Worst> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            let nb = g.small_neighborhood(u).expect("degree checked");
            let (beta, gamma) = (cert.beta[u], cert.gamma[u]);
            let edges = nb.edges();
            let edge_masks: u64 = match cert.mode {
                Mode::Induced => 1,
                Mode::Strong => 1 << edges.len(),
            };
            let mut worst = Worst {
                margin: f64::INFINITY,
                u,
                mask: 0,
                edge_mask: 0,
            };
            for em in 0..edge_masks {
                let adj: Vec<u64> = match cert.mode {
                    Mode::Induced => nb.masks().to_vec(),
                    Mode::Strong => {
                        let kept: Vec<(usize, usize)> =
                            mask_bits(em).map(|i| edges[i]).collect();
                        crate::graph::SmallGraph::with_edges(nb.n(), &kept).masks().to_vec()
                    }
                };
                let (z, w) = subset_terms(&adj, lambda);
                for s in 0..z.len() {
                    let cand = Worst {
                        margin: margin(beta, gamma, c, z[s], w[s]),
                        u,
                        mask: s as u64,
                        edge_mask: em,
                    };
                    worst = worst.better(cand);
                }
            }
            worst
        })
        .collect();
    let Some(worst) = per_vertex.into_iter().reduce(Worst::better) else {
        return Ok(CheckVerdict {
            pass: true,
            worst_margin: f64::INFINITY,
            witness: None,
            exhaustive: true,
        });
    };
    let nbrs = g.neighbors(worst.u);
    let vertices: Vec<Vertex> = mask_bits(worst.mask).map(|i| nbrs[i]).collect();
    let edges = match cert.mode {
        Mode::Induced => None,
        Mode::Strong => {
            let nb = g.small_neighborhood(worst.u)?;
            let all = nb.edges();
            Some(
                mask_bits(worst.edge_mask)
                    .map(|i| all[i])
                    .filter(|&(a, b)| worst.mask >> a & 1 == 1 && worst.mask >> b & 1 == 1)
                    .map(|(a, b)| (nbrs[a], nbrs[b]))
                    .collect(),
            )
        }
    };
    Ok(CheckVerdict {
        pass: worst.margin >= -CHECK_TOLERANCE,
        worst_margin: worst.margin,
        witness: Some(Witness {
            u: worst.u,
            mask: worst.mask,
            vertices,
            edges,
        }),
        exhaustive: true,
    })
}

/// Random audit for neighborhoods beyond the exhaustive guard: `samples` uniformly
/// random vertex subsets per vertex (plus the empty one), induced subgraphs only.
/// A pass here is not a certificate.
pub fn audit_certificate(
    g: &Graph,
    cert: &OccupancyCertificate,
    samples: usize,
    seed: u64,
) -> Result<CheckVerdict> {
    let mut rng = rng(seed);
    let mut worst: Option<(f64, Vertex, Vec<Vertex>)> = None;
    for u in 0..g.n() {
        let nbrs = g.neighbors(u);
        for i in 0..=samples {
            let subset: Vec<Vertex> = if i == 0 {
                Vec::new()
            } else {
                nbrs.iter().copied().filter(|_| rng.random_bool(0.5)).collect()
            };
            let m = subgraph_margin(g, u, &subset, None, cert)?;
            if worst.as_ref().is_none_or(|w| m < w.0) {
                worst = Some((m, u, subset));
            }
        }
    }
    Ok(match worst {
        None => CheckVerdict {
            pass: true,
            worst_margin: f64::INFINITY,
            witness: None,
            exhaustive: false,
        },
        Some((m, u, vertices)) => CheckVerdict {
            pass: m >= -CHECK_TOLERANCE,
            worst_margin: m,
            witness: Some(Witness {
                u,
                mask: 0,
                vertices,
                edges: None,
            }),
            exhaustive: false,
        },
    })
}

/// Local occupancy margin for one explicit subgraph F of G[N(u)], computed from the
/// exact independence polynomial of F.
///
/// `edges = None` means the induced subgraph on `vertices`.
pub fn subgraph_margin(
    g: &Graph,
    u: Vertex,
    vertices: &[Vertex],
    edges: Option<&[(Vertex, Vertex)]>,
    cert: &OccupancyCertificate,
) -> Result<f64> {
    if let Some(&v) = vertices.iter().find(|&&v| !g.has_edge(u, v)) {
        return Err(Error::pre(format!("{v} is not a neighbor of {u}")));
    }
    let f = match edges {
        None => g.induced(vertices),
        Some(es) => {
            let pos = |x: Vertex| vertices.iter().position(|&y| y == x);
            let local: Option<Vec<(usize, usize)>> =
                es.iter().map(|&(a, b)| Some((pos(a)?, pos(b)?))).collect();
            let local = local.ok_or_else(|| Error::pre("subgraph edge outside its vertex set"))?;
            Graph::from_edges(vertices.len(), &local)?
        }
    };
    let lambda = cert.lambda;
    let (z, dz) = if f.n() == 0 {
        (1.0, 0.0)
    } else {
        let (z, dz) = independence_polynomial(&f)?.eval(lambda);
        (z.to_f64(), dz.to_f64())
    };
    let c = lambda / (1.0 + lambda);
    Ok(margin(cert.beta[u], cert.gamma[u], c, z, lambda * dz))
}

/// 1/(max β + max γ · Δ), the occupancy lower bound implied by a valid certificate.
pub fn certified_bound(cert: &OccupancyCertificate, max_degree: usize) -> f64 {
    1.0 / (cert.max_beta() + cert.max_gamma() * max_degree as f64)
}

/// [`certified_bound`] in exact rational arithmetic on the stored floats.
pub fn certified_bound_exact(cert: &OccupancyCertificate, max_degree: usize) -> BigRational {
    let exact = |x: f64| BigRational::from_float(x).expect("finite");
    let beta = exact(cert.max_beta());
    let gamma = exact(cert.max_gamma());
    let denom = beta + gamma * BigRational::from_integer(max_degree.into());
    if denom.is_zero() {
        return BigRational::zero();
    }
    BigRational::one() / denom
}

/// Smallest uniform β for which (β, γ) passes the induced-mode check on `g`
/// (clamped below at `floor`).
pub fn tight_beta(g: &Graph, lambda: f64, gamma: f64, floor: f64) -> Result<f64> {
    let c = lambda / (1.0 + lambda);
    let mut need = floor;
    for u in 0..g.n() {
        let (z, w) = neighborhood_terms(g, u, lambda)?;
        for s in 0..z.len() {
            need = need.max((z[s] - gamma * w[s]) / c);
        }
    }
    Ok(need)
}

/// Output of the closed-form parameter choice for one vertex.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexParams {
    pub beta: f64,
    pub gamma: f64,
    pub zstar: f64,
    pub omega: f64,
    pub tau: f64,
    /// log d / (2 log(1+λ))
    pub t0: f64,
    /// Whether β >= (1+λ)^{1+t0}/λ, the requirement for small subgraphs.
    pub small_t_ok: bool,
    /// |LHS − RHS| / RHS of the defining equation at z*.
    pub residual: f64,
}

fn check_solver_inputs(d: f64, lambda: f64, sigma: f64, r: usize, k: f64) -> Result<()> {
    check_lambda(lambda)?;
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::domain(format!("d_u = {d} must be positive")));
    }
    if !(sigma > 0.0 && sigma < 1.0) {
        return Err(Error::domain(format!("σ = {sigma} not in (0, 1)")));
    }
    if r < 3 {
        return Err(Error::domain(format!("r = {r} must be >= 3")));
    }
    if !(k >= 1.0 && k.is_finite()) {
        return Err(Error::domain(format!("k = {k} must be >= 1")));
    }
    Ok(())
}

/// Both sides of d·(λ/(1+λ))·e^{−z} = ((1−σ)/(r−2))·z/log(ωz).
fn zstar_sides(d: f64, c: f64, sigma: f64, r: usize, w: f64, z: f64) -> (f64, f64) {
    (d * c * (-z).exp(), (1.0 - sigma) / (r as f64 - 2.0) * z / (w * z).ln())
}

/// Root z* >= e/ω of d·(λ/(1+λ))·e^{−z} = ((1−σ)/(r−2))·z/log(ωz), by bisection on
/// [e/ω, log τ + 10] to absolute tolerance 1e-10.
pub fn solve_zstar(d: f64, lambda: f64, sigma: f64, r: usize, k: f64) -> Result<f64> {
    check_solver_inputs(d, lambda, sigma, r, k)?;
    let c = lambda / (1.0 + lambda);
    let w = omega(k, r);
    let tau = d * c * (r as f64 - 2.0) / (1.0 - sigma);
    let f = |z: f64| {
        let (l, rhs) = zstar_sides(d, c, sigma, r, w, z);
        l - rhs
    };
    let (mut lo, mut hi) = (std::f64::consts::E / w, tau.ln() + 10.0);
    let (f_lo, f_hi) = (f(lo), f(hi));
    if !(hi > lo) || !(f_lo > 0.0) || !(f_hi < 0.0) {
        return Err(Error::NoCrossing {
            lo,
            hi,
            f_lo,
            f_hi,
        });
    }
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Closed-form (β_u, γ_u) from z*, with diagnostics.
pub fn solve_vertex_params(d: f64, lambda: f64, sigma: f64, r: usize, k: f64) -> Result<VertexParams> {
    let z = solve_zstar(d, lambda, sigma, r, k)?;
    let w = omega(k, r);
    let l = (w * z).ln();
    if !(l > 1.0) {
        return Err(Error::domain(format!("log(ωz*) = {l} must exceed 1")));
    }
    let r2 = r as f64 - 2.0;
    let s2 = (1.0 - sigma) * (1.0 - sigma);
    let denom = (z + 1.0) * l - 1.0;
    let beta = d * r2 / s2 * l * (l - 1.0) / (z * denom);
    let gamma = r2 / s2 * l * l / denom;
    let c = lambda / (1.0 + lambda);
    let (lhs, rhs) = zstar_sides(d, c, sigma, r, w, z);
    let t0 = d.ln() / (2.0 * lambda.ln_1p());
    // β >= (1+λ)^{1+t0}/λ, compared in logs
    let small_t_ok = beta.ln() >= (1.0 + t0) * lambda.ln_1p() - lambda.ln();
    Ok(VertexParams {
        beta,
        gamma,
        zstar: z,
        omega: w,
        tau: d * c * r2 / (1.0 - sigma),
        t0,
        small_t_ok,
        residual: (lhs - rhs).abs() / rhs,
    })
}

/// g(z) = β·(λ/(1+λ))·e^{−z} + γ·((1−σ)/(r−2))·z/log(ωz).
pub fn g_function(p: &VertexParams, z: f64, lambda: f64, sigma: f64, r: usize) -> f64 {
    let c = lambda / (1.0 + lambda);
    p.beta * c * (-z).exp() + p.gamma * (1.0 - sigma) / (r as f64 - 2.0) * z / (p.omega * z).ln()
}

/// (1+ξ)²·d·(ε + r log log d / log d) with ε = log k / (r log d).
pub fn vertex_budget(d: f64, k: f64, r: usize, xi: f64) -> f64 {
    let ld = d.ln();
    let eps = k.ln() / (r as f64 * ld);
    (1.0 + xi).powi(2) * d * (eps + r as f64 * ld.ln() / ld)
}

/// Per-vertex inputs for [`auto_certify`].
#[derive(Clone, Debug)]
pub struct AutoInputs {
    pub lambda: f64,
    pub sigma: f64,
    /// `None` uses deg(u).
    pub d: Option<Vec<f64>>,
    pub r: Vec<usize>,
    pub k: Vec<f64>,
    pub mode: Mode,
}

/// Certificate from the closed forms at every vertex, then checked exhaustively.
///
/// The closed forms are only guaranteed for large degrees, so at desk scale the
/// checker verdict is the answer.
pub fn auto_certify(g: &Graph, inputs: &AutoInputs) -> Result<(OccupancyCertificate, CheckVerdict)> {
    let n = g.n();
    let d: Vec<f64> = match &inputs.d {
        Some(d) => d.clone(),
        None => (0..n).map(|v| g.degree(v) as f64).collect(),
    };
    if d.len() != n || inputs.r.len() != n || inputs.k.len() != n {
        return Err(Error::pre("per-vertex inputs do not match the vertex count"));
    }
    let mut beta = Vec::with_capacity(n);
    let mut gamma = Vec::with_capacity(n);
    for (u, &du) in d.iter().enumerate() {
        let p = solve_vertex_params(du, inputs.lambda, inputs.sigma, inputs.r[u], inputs.k[u])
            .map_err(|e| Error::pre(format!("closed forms at vertex {u}: {e}")))?;
        beta.push(p.beta);
        gamma.push(p.gamma);
    }
    let mut cert = OccupancyCertificate::new(inputs.lambda, inputs.mode, beta, gamma)?;
    cert.provenance = Provenance::Solved(SolverInputs {
        d,
        sigma: inputs.sigma,
        r: inputs.r.clone(),
        k: inputs.k.clone(),
    });
    let verdict = check_certificate(g, &cert)?;
    Ok((cert, verdict))
}
