//! Resistance distances on graphs and matrix-weighted graphs.
//!
//! Three independent routes to the resistance matrix (spectral, Moore–Penrose,
//! determinant ratios), the Kirchhoff index, spanning tree and 2-forest counts
//! with an enumeration oracle, ten equivalent tests for resistance-regularity,
//! and the block-matrix generalisation to positive-definite edge weights.
//!
//! Vertices are 0-based in the API and 1-based in every text format.

pub mod block;
pub mod corpus;
mod error;
pub mod forests;
mod graph;
pub mod linalg;
pub mod regularity;
pub mod resistance;
pub mod selftest;
mod text;

pub use error::{Error, Result};
pub use graph::{cut_vertices, laplacian, parse_graph, Graph};
pub use text::format_number;
