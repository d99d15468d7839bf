//! Hypothesis checkers for the two cover-coloring theorems used downstream of
//! local occupancy, plus the median independence number bound and the list-size
//! thresholds.
//!
//! These report whether hypotheses hold. They never produce or claim a coloring.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use super::cover::CorrespondenceCover;
use crate::bounds::ReferenceValue;
use crate::error::{Error, Result};
use crate::graph::{mask_bits, Graph, Vertex};
use crate::hardcore::Scaled;
use crate::occupancy::{
    check_certificate, neighborhood_terms, CheckVerdict, Mode, OccupancyCertificate,
};

/// Largest neighborhood [`alpha_min`] enumerates.
pub const MAX_ALPHA_MIN_DEGREE: usize = 18;
/// C3 uses exact integers when ℓ and deg are integral and deg is at most this.
pub const MAX_EXACT_C3_DEGREE: f64 = 1000.0;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ListSizeCheck {
    pub v: Vertex,
    pub have: usize,
    pub need: f64,
    pub pass: bool,
}

/// Smallest Z_F(λ) over the induced neighborhood subgraphs that condition (b) covers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartitionWitness {
    pub u: Vertex,
    pub vertices: Vec<Vertex>,
    pub z: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DkpsReport {
    pub delta: usize,
    pub lambda: f64,
    pub ell: f64,
    /// Δ >= 2^6
    pub max_degree_hypothesis: bool,
    /// ℓ > log Δ
    pub ell_hypothesis: bool,
    /// (a) |L(u)| >= β_u·λ/(1+λ)·ℓ/(1 − √(7 log Δ/ℓ)) + γ_u·deg(u)
    pub list_size: Vec<ListSizeCheck>,
    pub list_size_pass: bool,
    /// (b) Z_F(λ) >= 8Δ⁴ for induced F ⊆ G[N(u)] with |F| >= ℓ/8
    pub partition_pass: bool,
    pub partition_witness: Option<PartitionWitness>,
    /// (c) whether the cover comes from a list assignment
    pub list_like: bool,
    /// Strong occupancy is needed unless the cover is list-like.
    pub required_mode: Mode,
    pub occupancy: CheckVerdict,
    pub hypotheses_verified: bool,
}

impl DkpsReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// The list-size requirement of condition (a) at one vertex. Infinite when
/// `7 log Δ >= ℓ`.
pub fn dkps_list_requirement(beta: f64, gamma: f64, lambda: f64, ell: f64, delta: f64, deg: usize) -> f64 {
    let shrink = 1.0 - (7.0 * delta.ln() / ell).max(0.0).sqrt();
    if shrink <= 0.0 {
        return f64::INFINITY;
    }
    beta * lambda / (1.0 + lambda) * ell / shrink + gamma * deg as f64
}

/// ℓ = k_max^{1/r} e^r (log 8Δ⁴)^{r−1} / λ, the choice that makes condition (b)
/// follow from the partition function lower bound.
pub fn dkps_ell(k_max: f64, r_max: usize, delta: f64, lambda: f64) -> Result<f64> {
    if r_max < 3 || !(k_max >= 1.0) || !(lambda > 0.0) || !(delta > 1.0) {
        return Err(Error::domain("need r >= 3, k >= 1, λ > 0 and Δ > 1"));
    }
    let r = r_max as f64;
    Ok(k_max.powf(1.0 / r) * r.exp() * (8.0 * delta.powi(4)).ln().powf(r - 1.0) / lambda)
}

/// d_u = deg(u) / (λ/(1+λ) · ℓ/(1 − √(7 log Δ/ℓ))), the degree scale handed to the
/// closed-form occupancy parameters.
pub fn dkps_degree_scale(deg: f64, lambda: f64, ell: f64, delta: f64) -> Result<f64> {
    let unit = dkps_list_requirement(1.0, 0.0, lambda, ell, delta, 0);
    if !unit.is_finite() {
        return Err(Error::domain(format!("7 log Δ >= ℓ = {ell}")));
    }
    Ok(deg / unit)
}

/// Checks the hypotheses (a), (b), (c) of the local-occupancy coloring theorem for
/// `cover`, with fugacity taken from `cert`.
pub fn dkps_condition_check(
    g: &Graph,
    cover: &CorrespondenceCover,
    cert: &OccupancyCertificate,
    ell: f64,
) -> Result<DkpsReport> {
    if cover.n() != g.n() || cert.beta.len() != g.n() {
        return Err(Error::pre("graph, cover and certificate disagree on the vertex count"));
    }
    if !(ell > 0.0) {
        return Err(Error::domain(format!("ℓ = {ell} must be positive")));
    }
    let delta = g.max_degree();
    let delta_f = delta as f64;
    let lambda = cert.lambda;

    let list_size: Vec<ListSizeCheck> = (0..g.n())
        .map(|v| {
            let need = dkps_list_requirement(cert.beta[v], cert.gamma[v], lambda, ell, delta_f, g.degree(v));
            let have = cover.list(v).len();
            ListSizeCheck {
                v,
                have,
                need,
                pass: have as f64 >= need,
            }
        })
        .collect();

    let min_size = (ell / 8.0).ceil().max(0.0) as u32;
    let target = 8.0 * delta_f.powi(4);
    let mut witness: Option<PartitionWitness> = None;
    for u in 0..g.n() {
        if (g.degree(u) as u32) < min_size {
            continue;
        }
        let (z, _) = neighborhood_terms(g, u, lambda)?;
        let best = (0..z.len())
            .filter(|&s| (s as u64).count_ones() >= min_size)
            .min_by(|&a, &b| z[a].total_cmp(&z[b]).then(a.cmp(&b)));
        if let Some(s) = best {
            if witness.as_ref().is_none_or(|w| z[s] < w.z) {
                let nbrs = g.neighbors(u);
                witness = Some(PartitionWitness {
                    u,
                    vertices: mask_bits(s as u64).map(|i| nbrs[i]).collect(),
                    z: z[s],
                });
            }
        }
    }
    let partition_pass = witness.as_ref().is_none_or(|w| w.z >= target);

    let list_like = cover.is_list_like(g);
    let required_mode = if list_like { Mode::Induced } else { Mode::Strong };
    let occupancy = check_certificate(
        g,
        &OccupancyCertificate {
            mode: required_mode,
            ..cert.clone()
        },
    )?;

    let max_degree_hypothesis = delta >= 64;
    let ell_hypothesis = ell > delta_f.ln();
    let list_size_pass = list_size.iter().all(|c| c.pass);
    Ok(DkpsReport {
        delta,
        lambda,
        ell,
        max_degree_hypothesis,
        ell_hypothesis,
        list_size_pass,
        list_size,
        partition_pass,
        partition_witness: witness,
        list_like,
        required_mode,
        hypotheses_verified: max_degree_hypothesis
            && ell_hypothesis
            && list_size_pass
            && partition_pass
            && occupancy.pass,
        occupancy,
    })
}

/// ᾱ from coefficient counts: the largest ℓ with `2 · #{I : |I| >= ℓ} >= i`.
fn median_of(counts: &[u32]) -> usize {
    let total: u64 = counts.iter().map(|&c| c as u64).sum();
    let mut tail = 0u64;
    for l in (0..counts.len()).rev() {
        tail += counts[l] as u64;
        if 2 * tail >= total {
            return l;
        }
    }
    0
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaMin {
    /// `None` when no S ⊆ N(v) has i(G[S]) >= t.
    pub value: Option<usize>,
    /// A minimizing S.
    pub witness: Vec<Vertex>,
}

/// min ᾱ(G[S]) over S ⊆ N(v) with i(G[S]) >= t.
///
/// Independence counts of all induced subgraphs of G[N(v)] come from one subset DP:
/// `P(S) = P(S−w) + x·P(S∖N[w])`.
pub fn alpha_min(g: &Graph, v: Vertex, t: u64) -> Result<AlphaMin> {
    let m = g.degree(v);
    if m > MAX_ALPHA_MIN_DEGREE {
        return Err(Error::guard("degree (alpha_min)", MAX_ALPHA_MIN_DEGREE, m));
    }
    let nb = g.small_neighborhood(v)?;
    let adj = nb.masks();
    let stride = m + 1;
    let mut counts = vec![0u32; (1usize << m) * stride];
    counts[0] = 1;
    let mut best: Option<(usize, usize)> = None;
    let mut consider = |s: usize, row: &[u32]| {
        let total: u64 = row.iter().map(|&c| c as u64).sum();
        if total >= t {
            let a = median_of(row);
            if best.is_none_or(|(b, _)| a < b) {
                best = Some((a, s));
            }
        }
    };
    consider(0, &counts[..stride]);
    for s in 1..(1usize << m) {
        let w = s.trailing_zeros() as usize;
        let without = s & (s - 1);
        let rest = s & !(adj[w] as usize) & !(1 << w);
        let (done, cur) = counts.split_at_mut(s * stride);
        let cur = &mut cur[..stride];
        cur.copy_from_slice(&done[without * stride..(without + 1) * stride]);
        for i in 0..m {
            cur[i + 1] += done[rest * stride + i];
        }
        consider(s, cur);
    }
    let nbrs = g.neighbors(v);
    Ok(match best {
        None => AlphaMin {
            value: None,
            witness: Vec::new(),
        },
        Some((a, s)) => AlphaMin {
            value: Some(a),
            witness: mask_bits(s as u64).map(|i| nbrs[i]).collect(),
        },
    })
}

/// log i(G) / (2r log(r k^{1/(r(r−1))} log i(G))), the lower bound on ᾱ(G) for an
/// n-vertex (k, r)-sparse graph G with i(G) independent sets.
pub fn median_bound(n_sub: usize, k: f64, r: usize, i_g: &BigUint) -> Result<f64> {
    if r < 2 {
        return Err(Error::pre(format!("r = {r} must be >= 2")));
    }
    if !(k >= 1.0) {
        return Err(Error::pre(format!("k = {k} must be >= 1")));
    }
    let min_n = (r as f64).powi(2 * r as i32);
    if (n_sub as f64) < min_n {
        return Err(Error::pre(format!("n = {n_sub} below r^(2r) = {min_n}")));
    }
    if *i_g < BigUint::from(2u32) {
        return Err(Error::pre("i(G) must be at least 2"));
    }
    let log_i = Scaled::from_biguint(i_g).ln();
    let r_f = r as f64;
    let x = r_f * k.powf(1.0 / (r_f * (r_f - 1.0))) * log_i;
    Ok(log_i / (2.0 * r_f * x.ln()))
}

/// Per-vertex verdicts of C1–C3.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BknpConditions {
    /// ε(1−ε)ℓt >= 18 log Δ + 6 log 16
    pub c1: bool,
    pub c1_lhs: f64,
    pub c1_rhs: f64,
    /// ℓ >= 36 log Δ + 12 log 16
    pub c2: bool,
    pub c2_rhs: f64,
    /// binom(deg, ℓ)/ℓ! < Δ^{−3}/8
    pub c3: bool,
    /// True when C3 was decided with exact integers.
    pub c3_exact: bool,
    /// log(binom(deg, ℓ)/ℓ!), −∞ when ℓ > deg.
    pub c3_log_lhs: f64,
    /// log(Δ^{−3}/8)
    pub c3_log_rhs: f64,
}

fn ln_binomial(n: f64, k: f64) -> f64 {
    ln_gamma(n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(n - k + 1.0)
}

fn biguint_factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn biguint_binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn as_integer(x: f64) -> Option<u64> {
    (x >= 0.0 && x.fract() == 0.0 && x < 2f64.powi(53)).then_some(x as u64)
}

/// C1–C3 at one vertex of degree `deg` in a graph of maximum degree at most `delta`.
pub fn bknp_conditions(deg: f64, delta: f64, eps: f64, ell: f64, t: f64) -> Result<BknpConditions> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::domain(format!("ε = {eps} not in (0, 1/2)")));
    }
    if !(deg >= 0.0 && delta >= deg && ell >= 0.0 && t >= 0.0) {
        return Err(Error::domain("need 0 <= deg <= Δ and ℓ, t >= 0"));
    }
    let log_delta = delta.ln();
    let log16 = 16f64.ln();
    let c1_lhs = eps * (1.0 - eps) * ell * t;
    let c1_rhs = 18.0 * log_delta + 6.0 * log16;
    let c2_rhs = 36.0 * log_delta + 12.0 * log16;
    let c3_log_rhs = -3.0 * log_delta - 8f64.ln();
    let (c3, c3_exact, c3_log_lhs) = if ell > deg {
        (true, as_integer(ell).is_some() && as_integer(deg).is_some(), f64::NEG_INFINITY)
    } else {
        let log_lhs = ln_binomial(deg, ell) - ln_gamma(ell + 1.0);
        match (as_integer(deg), as_integer(ell), as_integer(delta)) {
            (Some(d), Some(l), Some(big_delta)) if deg <= MAX_EXACT_C3_DEGREE => {
                // binom/ℓ! < 1/(8Δ³)  ⟺  8·binom·Δ³ < ℓ!
                let lhs = biguint_binomial(d, l) * 8u32 * BigUint::from(big_delta).pow(3);
                (lhs < biguint_factorial(l), true, log_lhs)
            }
            _ => (log_lhs < c3_log_rhs, false, log_lhs),
        }
    };
    Ok(BknpConditions {
        c1: c1_lhs >= c1_rhs,
        c1_lhs,
        c1_rhs,
        c2: ell >= c2_rhs,
        c2_rhs,
        c3,
        c3_exact,
        c3_log_lhs,
        c3_log_rhs,
    })
}

/// ε, ℓ(v) and t(v) for the second coloring theorem.
#[derive(Clone, Debug, PartialEq, Serialize, serde::Deserialize)]
pub struct BknpParams {
    pub eps: f64,
    pub ell: Vec<f64>,
    pub t: Vec<f64>,
}

impl BknpParams {
    /// ε = 1/4, ℓ(v) = deg(v)^{1/2+γ}, t(v) = deg(v)^{1/2−2γ}.
    pub fn instantiate(g: &Graph, gamma: f64) -> Self {
        let (ell, t) = (0..g.n())
            .map(|v| instantiated_ell_t(g.degree(v) as f64, gamma))
            .unzip();
        BknpParams { eps: 0.25, ell, t }
    }
}

/// (deg^{1/2+γ}, deg^{1/2−2γ})
pub fn instantiated_ell_t(deg: f64, gamma: f64) -> (f64, f64) {
    (deg.powf(0.5 + gamma), deg.powf(0.5 - 2.0 * gamma))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BknpVertexReport {
    pub v: Vertex,
    pub conditions: BknpConditions,
    pub alpha_min: Option<usize>,
    pub list: ListSizeCheck,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BknpReport {
    pub delta: usize,
    pub eps: f64,
    pub vertices: Vec<BknpVertexReport>,
    pub c1_pass: bool,
    pub c2_pass: bool,
    pub c3_pass: bool,
    pub list_size_pass: bool,
    pub hypotheses_verified: bool,
}

impl BknpReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// Checks C1–C3 and |L(v)| >= max{2 deg(v)/((1−ε)² α_min(v)), 2 t(v) ℓ(v)/ε} at
/// every vertex. α_min uses `t(v)` rounded up.
pub fn bknp_condition_check(g: &Graph, cover: &CorrespondenceCover, params: &BknpParams) -> Result<BknpReport> {
    let n = g.n();
    if cover.n() != n || params.ell.len() != n || params.t.len() != n {
        return Err(Error::pre("graph, cover and ℓ/t maps disagree on the vertex count"));
    }
    let delta = g.max_degree();
    let eps = params.eps;
    let mut vertices = Vec::with_capacity(n);
    for v in 0..n {
        let deg = g.degree(v);
        let (ell, t) = (params.ell[v], params.t[v]);
        let conditions = bknp_conditions(deg as f64, delta as f64, eps, ell, t)?;
        let am = alpha_min(g, v, t.ceil() as u64)?.value;
        let degree_term = match am {
            _ if deg == 0 => 0.0,
            None => 0.0,
            Some(0) => f64::INFINITY,
            Some(a) => 2.0 * deg as f64 / ((1.0 - eps).powi(2) * a as f64),
        };
        let need = degree_term.max(2.0 * t * ell / eps);
        let have = cover.list(v).len();
        vertices.push(BknpVertexReport {
            v,
            conditions,
            alpha_min: am,
            list: ListSizeCheck {
                v,
                have,
                need,
                pass: have as f64 >= need,
            },
        });
    }
    let all = |f: &dyn Fn(&BknpVertexReport) -> bool| vertices.iter().all(f);
    let c1_pass = all(&|r| r.conditions.c1);
    let c2_pass = all(&|r| r.conditions.c2);
    let c3_pass = all(&|r| r.conditions.c3);
    let list_size_pass = all(&|r| r.list.pass);
    Ok(BknpReport {
        delta,
        eps,
        c1_pass,
        c2_pass,
        c3_pass,
        list_size_pass,
        hypotheses_verified: c1_pass && c2_pass && c3_pass && list_size_pass,
        vertices,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThresholdKind {
    Dkps,
    Bknp,
}

impl std::str::FromStr for ThresholdKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dkps" => Ok(ThresholdKind::Dkps),
            "bknp" => Ok(ThresholdKind::Bknp),
            other => Err(Error::pre(format!("unknown threshold kind {other:?}"))),
        }
    }
}

/// List size sufficient for coloring, with ε_max = ε:
/// dkps: (1+μ) min{2, (1+ε)/(1−ε)} deg (ε + r log log deg / log deg),
/// bknp: (30+μ) deg (ε + r log log deg / log deg).
pub fn list_size_threshold(kind: ThresholdKind, deg: f64, eps: f64, r: usize, mu: f64) -> Result<ReferenceValue> {
    list_size_threshold_with_max(kind, deg, eps, eps, r, mu)
}

/// [`list_size_threshold`] with a separate ε_max for the dkps factor.
pub fn list_size_threshold_with_max(
    kind: ThresholdKind,
    deg: f64,
    eps: f64,
    eps_max: f64,
    r: usize,
    mu: f64,
) -> Result<ReferenceValue> {
    if !(deg > std::f64::consts::E) {
        return Err(Error::domain(format!("deg = {deg} must exceed e")));
    }
    if !(0.0..=1.0).contains(&eps) || eps > eps_max {
        return Err(Error::domain("need 0 <= ε <= ε_max"));
    }
    let base = deg * (eps + r as f64 * deg.ln().ln() / deg.ln());
    let value = match kind {
        ThresholdKind::Dkps => {
            if !(eps_max < 1.0) {
                return Err(Error::domain(format!("ε_max = {eps_max} must be < 1")));
            }
            (1.0 + mu) * 2f64.min((1.0 + eps_max) / (1.0 - eps_max)) * base
        }
        ThresholdKind::Bknp => (30.0 + mu) * base,
    };
    let mut out = ReferenceValue::new(value);
    if eps_max > 0.5 && kind == ThresholdKind::Dkps {
        out.warnings.push("ε_max > 1/2: the greedy bound deg + 1 is smaller".into());
    }
    Ok(out)
}

/// deg >= Δ^{min{2ε_max, (1+ε_max)/2}} (log 8Δ⁴)^{r_max}
pub fn l1_min_degree(deg: f64, delta: f64, eps_max: f64, r_max: usize) -> bool {
    let exponent = (2.0 * eps_max).min((1.0 + eps_max) / 2.0);
    deg >= delta.powf(exponent) * (8.0 * delta.powi(4)).ln().powi(r_max as i32)
}

/// deg >= log²Δ
pub fn m1_min_degree(deg: f64, delta: f64) -> bool {
    deg >= delta.ln().powi(2)
}
