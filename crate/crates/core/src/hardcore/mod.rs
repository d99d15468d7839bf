//! The hard-core model: exact independence polynomials, closed forms for paths
//! and cycles, and samplers.

mod poly;
mod sampler;
mod scaled;
mod transfer;

pub use poly::{
    independence_polynomial, occupancy_fraction, occupancy_fraction_exact,
    IndependencePolynomial, MAX_POLY_VERTICES,
};
pub(crate) use poly::check_lambda;
pub use sampler::{
    exact_sample, glauber_sample, glauber_with_trace, vertex_marginals, ExactSampler,
    HardCoreSampleStats, MAX_EXACT_SAMPLE_VERTICES,
};
pub use scaled::Scaled;
pub use transfer::{transfer_z, Family};

/// ᾱ(G) read off an exact polynomial.
pub fn median_independence_number(poly: &IndependencePolynomial) -> usize {
    poly.median_independence_number()
}
