//! Resistance distances of unweighted graphs by three independent routes,
//! the Kirchhoff index, and the identities that tie `R` to `L⁺`.

use crate::error::{Error, Result};
use crate::graph::{laplacian, Graph};
use crate::linalg::{
    adjugate, determinant, moore_penrose, principal_minor, sym_eigen, EigenPairs, Matrix,
    PinvMethod,
};

/// Which route produced a resistance matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResistanceMethod {
    /// Spectral sum over nonzero Laplacian eigenpairs.
    Eigen,
    /// `r_ij = L⁺_ii + L⁺_jj − 2 L⁺_ij`, with `L⁺` from the shifted inverse.
    Pinv,
    /// `r_ij = det L(i,j) / det L(i)`.
    Det,
}

impl ResistanceMethod {
    pub const ALL: [ResistanceMethod; 3] = [Self::Eigen, Self::Pinv, Self::Det];

    pub fn name(self) -> &'static str {
        match self {
            Self::Eigen => "eigen",
            Self::Pinv => "pinv",
            Self::Det => "det",
        }
    }
}

impl std::str::FromStr for ResistanceMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "eigen" => Ok(Self::Eigen),
            "pinv" => Ok(Self::Pinv),
            "det" => Ok(Self::Det),
            other => Err(format!(
                "unknown method {other:?} (expected eigen, pinv or det)"
            )),
        }
    }
}

/// Symmetric matrix of pairwise resistance distances with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceMatrix {
    matrix: Matrix,
    method: ResistanceMethod,
}

impl ResistanceMatrix {
    /// Wraps an existing matrix; no validation is performed.
    pub fn from_matrix(matrix: Matrix, method: ResistanceMethod) -> Self {
        ResistanceMatrix { matrix, method }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn method(&self) -> ResistanceMethod {
        self.method
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix[(i, j)]
    }

    /// Half the sum of all entries.
    pub fn kirchhoff(&self) -> f64 {
        0.5 * self.matrix.sum()
    }

    /// Largest violation of the distance-function axioms: nonnegativity,
    /// zero diagonal, symmetry and the triangle inequality. Positivity off the
    /// diagonal is checked separately by [`ResistanceMatrix::min_off_diagonal`].
    pub fn metric_violation(&self) -> f64 {
        let n = self.n();
        let r = &self.matrix;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            worst = worst.max(r[(i, i)].abs());
            for j in 0..n {
                worst = worst.max(-r[(i, j)]);
                worst = worst.max((r[(i, j)] - r[(j, i)]).abs());
                for k in 0..n {
                    worst = worst.max(r[(i, k)] - r[(i, j)] - r[(j, k)]);
                }
            }
        }
        worst
    }

    pub fn min_off_diagonal(&self) -> f64 {
        let n = self.n();
        let mut m = f64::INFINITY;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m = m.min(self.matrix[(i, j)]);
                }
            }
        }
        m
    }
}

/// Eigendecomposition of `L(G)`, checked to have exactly one zero eigenvalue.
pub fn laplacian_spectrum(g: &Graph) -> Result<EigenPairs> {
    g.require_connected()?;
    let e = sym_eigen(&laplacian(g))?;
    match e.zero_count() {
        1 => Ok(e),
        z => Err(Error::ZeroEigenvalues(z)),
    }
}

/// `L⁺` via `(L + J/n)⁻¹ − J/n`.
pub fn laplacian_pinv(g: &Graph) -> Result<Matrix> {
    g.require_connected()?;
    moore_penrose(&laplacian(g), PinvMethod::Shift)
}

/// Resistance matrix of a connected graph by the chosen route.
pub fn resistance_matrix(g: &Graph, method: ResistanceMethod) -> Result<ResistanceMatrix> {
    g.require_connected()?;
    let n = g.n();
    let matrix = match method {
        ResistanceMethod::Eigen => {
            let e = laplacian_spectrum(g)?;
            Matrix::from_fn(n, n, |i, j| {
                (0..n)
                    .filter(|&k| !e.is_zero(k))
                    .map(|k| {
                        let d = e.vectors[(i, k)] - e.vectors[(j, k)];
                        d * d / e.values[k]
                    })
                    .sum()
            })
        }
        ResistanceMethod::Pinv => {
            let lp = laplacian_pinv(g)?;
            Matrix::from_fn(n, n, |i, j| lp[(i, i)] + lp[(j, j)] - 2.0 * lp[(i, j)])
        }
        ResistanceMethod::Det => {
            let l = laplacian(g);
            // det L(i) is the spanning-tree count for every i
            let trees = principal_minor(&l, &[0])?;
            let mut r = Matrix::zeros(n, n);
            for i in 0..n {
                for j in i + 1..n {
                    let v = principal_minor(&l, &[i, j])? / trees;
                    r[(i, j)] = v;
                    r[(j, i)] = v;
                }
            }
            r
        }
    };
    Ok(ResistanceMatrix {
        matrix: clean(matrix),
        method,
    })
}

fn clean(m: Matrix) -> Matrix {
    let mut m = m.symmetrized();
    for i in 0..m.rows() {
        m[(i, i)] = 0.0;
    }
    m
}

/// `Kf(G) = n Σ_{λ≠0} 1/λ`, checked against half the sum of the
/// resistances from the shifted-inverse route.
pub fn kirchhoff_index(g: &Graph) -> Result<f64> {
    let e = laplacian_spectrum(g)?;
    let inv_sum: f64 = (0..e.len())
        .filter(|&k| !e.is_zero(k))
        .map(|k| 1.0 / e.values[k])
        .sum();
    let kf = g.n() as f64 * inv_sum;
    let half_sum = resistance_matrix(g, ResistanceMethod::Pinv)?.kirchhoff();
    if (kf - half_sum).abs() > 1e-8 * kf.max(1.0) {
        return Err(Error::Inconsistent(format!(
            "Kirchhoff index {kf} from the spectrum, {half_sum} from resistances"
        )));
    }
    Ok(kf)
}

/// Row sums `R_i = Σ_j r_ij`.
pub fn row_sums(r: &ResistanceMatrix) -> Vec<f64> {
    r.matrix.row_sums()
}

/// Recovers `L⁺` from a resistance matrix:
/// `L⁺_ij = (R_i + R_j)/(2n) − Kf/n² − r_ij/2`, with `Kf = Σ R_i / 2`.
///
/// The input is not validated.
pub fn lplus_from_resistance(r: &ResistanceMatrix) -> Matrix {
    let n = r.n();
    let nf = n as f64;
    let rows = row_sums(r);
    let kf = 0.5 * rows.iter().sum::<f64>();
    Matrix::from_fn(n, n, |i, j| {
        (rows[i] + rows[j]) / (2.0 * nf) - kf / (nf * nf) - r.get(i, j) / 2.0
    })
}

/// Largest deviation between the cofactors of `L + J/n` and
/// `t [1 + (R_i + R_j)/2 − Kf/n − n r_ij / 2]`.
pub fn cofactor_identity_residual(g: &Graph) -> Result<f64> {
    g.require_connected()?;
    let n = g.n();
    let nf = n as f64;
    let l = laplacian(g);
    let shifted = &l + &Matrix::ones(n).scale(1.0 / nf);
    let adj = adjugate(&shifted)?;

    let trees = determinant(&l.without(&[0], &[0]))?;
    let r = resistance_matrix(g, ResistanceMethod::Det)?;
    let rows = row_sums(&r);
    let kf = r.kirchhoff();

    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let predicted =
                trees * (1.0 + (rows[i] + rows[j]) / 2.0 - kf / nf - nf * r.get(i, j) / 2.0);
            // adj is the transposed cofactor matrix
            worst = worst.max((adj[(j, i)] - predicted).abs());
        }
    }
    Ok(worst)
}
