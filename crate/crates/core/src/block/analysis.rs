use super::{BlockMatrix, MwGraph};
use crate::error::Result;
use crate::linalg::{inverse_symmetric, Matrix};

/// Block Laplacian: `L_ii = Σ_j W_ij⁻¹`, `L_ij = −W_ij⁻¹` on edges, zero otherwise.
pub fn block_laplacian(g: &MwGraph) -> BlockMatrix {
    let (n, k) = (g.n(), g.k());
    let mut l = BlockMatrix::zeros(n, k);
    for ((i, j), w) in g.weighted_edges() {
        let c = w.inverse();
        let neg = c.scale(-1.0);
        l.set_block(i, j, &neg);
        l.set_block(j, i, &neg);
        l.add_to_block(i, i, &c);
        l.add_to_block(j, j, &c);
    }
    l
}

/// `X = (L + J_n⊗I_k / n)⁻¹` and `L⁺ = X − J_n⊗I_k / n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockPinv {
    pub x: BlockMatrix,
    pub lplus: BlockMatrix,
}

pub fn block_pinv(g: &MwGraph) -> Result<BlockPinv> {
    let (n, k) = (g.n(), g.k());
    let shift = BlockMatrix::ones_kron_identity(n, k).scale(1.0 / n as f64);
    let l = block_laplacian(g);
    let x = inverse_symmetric(l.add(&shift)?.as_matrix())?;
    let x = BlockMatrix::from_matrix(x, n, k)?;
    let lplus = x.sub(&shift)?;
    Ok(BlockPinv { x, lplus })
}

/// `R_ij = G_ii + G_jj − G_ij − G_ji` for any (1)-inverse `G` of the Laplacian.
pub fn resistance_from_one_inverse(g1: &BlockMatrix) -> BlockMatrix {
    let k = g1.k();
    let r = BlockMatrix::from_blocks(g1.n(), k, |i, j| {
        if i == j {
            return Matrix::zeros(k, k);
        }
        let s = &g1.block(i, i) + &g1.block(j, j);
        let s = &s - &g1.block(i, j);
        &s - &g1.block(j, i)
    });
    symmetrize(r)
}

/// `R = X̃ (J⊗I) + (J⊗I) X̃ − X − X_Bᵀ`, evaluated with dense products.
pub fn resistance_structured(x: &BlockMatrix) -> Result<BlockMatrix> {
    let j = BlockMatrix::ones_kron_identity(x.n(), x.k());
    let xt = x.block_diagonal();
    let r = xt.mul(&j)?.add(&j.mul(&xt)?)?;
    r.sub(x)?.sub(&x.block_transpose())
}

fn symmetrize(r: BlockMatrix) -> BlockMatrix {
    let (n, k) = (r.n(), r.k());
    BlockMatrix::from_matrix(r.into_matrix().symmetrized(), n, k).expect("shape preserved")
}

/// Block resistance matrix through the Moore–Penrose route (`X`).
pub fn block_resistance(g: &MwGraph) -> Result<BlockMatrix> {
    Ok(resistance_from_one_inverse(&block_pinv(g)?.x))
}

/// Half the sum of all resistance blocks.
pub fn kirchhoff_from_resistance(r: &BlockMatrix) -> Matrix {
    r.block_total().scale(0.5).symmetrized()
}

/// `n Σ_i L⁺_ii`.
pub fn kirchhoff_from_pinv(lplus: &BlockMatrix) -> Matrix {
    lplus.block_trace().scale(lplus.n() as f64).symmetrized()
}

/// Block Kirchhoff index, `½ Σ_ij R_ij`.
pub fn block_kirchhoff(g: &MwGraph) -> Result<Matrix> {
    Ok(kirchhoff_from_resistance(&block_resistance(g)?))
}

/// `max |‖L ⊠ R‖ + 2(n−1) I_k|`.
pub fn lr_identity_residual(g: &MwGraph) -> Result<f64> {
    let l = block_laplacian(g);
    let r = block_resistance(g)?;
    let total = l.boxtimes(&r)?.block_total();
    let target = Matrix::identity(g.k()).scale(-2.0 * (g.n() as f64 - 1.0));
    Ok(total.max_abs_diff(&target))
}

/// `τ_i = 2 I_k + Σ_j L_ij R_ij`.
pub fn tau(g: &MwGraph) -> Result<Vec<Matrix>> {
    let l = block_laplacian(g);
    let r = block_resistance(g)?;
    let lr = l.boxtimes(&r)?;
    let two = Matrix::identity(g.k()).scale(2.0);
    Ok(lr.block_row_sums().iter().map(|s| &two + s).collect())
}

/// `max |Σ_i τ_i − 2 I_k|`.
pub fn tau_sum_residual(taus: &[Matrix], k: usize) -> f64 {
    let sum = taus.iter().fold(Matrix::zeros(k, k), |acc, t| &acc + t);
    sum.max_abs_diff(&Matrix::identity(k).scale(2.0))
}
