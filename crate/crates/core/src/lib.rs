//! Local sparsity, the hard-core model, and local occupancy.
//!
//! The crate certifies (k, r)-local sparsity by exact clique counting, computes
//! independence polynomials and occupancy fractions, checks local occupancy
//! certificates exhaustively, extracts independent sets constructively, colors
//! correspondence covers, and builds the min-degree doubling embedding. Every
//! exponential routine has an explicit size guard.

// `!(x > 0.0)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod acceptance;
pub mod bounds;
pub mod coloring;
pub mod embedding;
pub mod error;
pub mod gen;
pub mod graph;
pub mod hardcore;
pub mod io;
pub mod occupancy;
pub mod oracle;
pub mod sparsity;

pub use error::{Error, Result};
pub use graph::{BitGraph, Graph, SmallGraph, Vertex, VertexSet};
pub use hardcore::IndependencePolynomial;
pub use sparsity::SparsityCertificate;
pub use coloring::CorrespondenceCover;
