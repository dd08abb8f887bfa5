use super::{inverse_symmetric, sym_eigen, Matrix};
use crate::error::{Error, Result};

/// How to compute a Moore–Penrose inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PinvMethod {
    /// `M⁺ = Σ g(λ_k) c_k c_kᵀ` with `g(λ) = 1/λ` off the zero set, else 0.
    Eigen,
    /// `L⁺ = (L + J/n)⁻¹ − J/n`; only valid for connected-graph Laplacians.
    Shift,
}

/// Moore–Penrose inverse of a symmetric matrix.
pub fn moore_penrose(m: &Matrix, method: PinvMethod) -> Result<Matrix> {
    match method {
        PinvMethod::Eigen => pinv_eigen(m),
        PinvMethod::Shift => pinv_shift(m),
    }
}

fn pinv_eigen(m: &Matrix) -> Result<Matrix> {
    let e = sym_eigen(m)?;
    let n = m.rows();
    let mut out = Matrix::zeros(n, n);
    for k in 0..n {
        if e.is_zero(k) {
            continue;
        }
        let g = 1.0 / e.values[k];
        for i in 0..n {
            let ci = e.vectors[(i, k)] * g;
            for j in 0..n {
                out[(i, j)] += ci * e.vectors[(j, k)];
            }
        }
    }
    Ok(out.symmetrized())
}

fn pinv_shift(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let asym = m.asymmetry();
    if asym > 1e-10 * m.max_abs().max(1.0) {
        return Err(Error::NotSymmetric(asym));
    }
    let n = m.rows();
    let tol = 1e-10 * m.max_abs().max(1.0) * n as f64;
    for (row, sum) in m.row_sums().into_iter().enumerate() {
        if sum.abs() > tol {
            return Err(Error::NotLaplacian { row, sum });
        }
    }
    let shift = Matrix::ones(n).scale(1.0 / n as f64);
    let x = inverse_symmetric(&(m + &shift))?;
    Ok(&x - &shift)
}

/// Largest violation of the four Penrose conditions for `(m, p)`.
pub fn penrose_residual(m: &Matrix, p: &Matrix) -> f64 {
    let mp = m * p;
    let pm = p * m;
    let c1 = (&mp * m).max_abs_diff(m);
    let c2 = (&pm * p).max_abs_diff(p);
    let c3 = mp.max_abs_diff(&mp.transpose());
    let c4 = pm.max_abs_diff(&pm.transpose());
    c1.max(c2).max(c3).max(c4)
}
