//! Graphs whose edge weights are symmetric positive-definite `k × k`
//! matrices: block Laplacian, block Moore–Penrose inverse, block resistance
//! and Kirchhoff index, the `L ⊠ R` and `τ` identities, and trees.
//!
//! Every scalar quantity of the unweighted modules is the `k = 1`,
//! unit-weight case of the corresponding block quantity here.

mod analysis;
mod matrix;
mod tree;
mod weighted;

pub use analysis::{
    block_kirchhoff, block_laplacian, block_pinv, block_resistance, kirchhoff_from_pinv,
    kirchhoff_from_resistance, lr_identity_residual, resistance_from_one_inverse,
    resistance_structured, tau, tau_sum_residual, BlockPinv,
};
pub use matrix::BlockMatrix;
pub use tree::{parse_rblk, reconstruct_tree, to_rblk, tree_one_inverse};
pub use weighted::{parse_mwg, MwGraph, PdWeight};
