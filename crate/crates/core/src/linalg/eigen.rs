use super::Matrix;
use crate::error::{Error, Result};

/// Sweep cap for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

/// Convergence threshold on `‖offdiag(A)‖_F / ‖M‖_F`.
const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Eigenvalues in descending order with the matching orthonormal eigenvectors
/// stored as the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct EigenPairs {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl EigenPairs {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The `k`-th eigenvector.
    pub fn vector(&self, k: usize) -> Vec<f64> {
        (0..self.vectors.rows())
            .map(|i| self.vectors[(i, k)])
            .collect()
    }

    /// Tolerance below which an eigenvalue counts as zero: `n · 1e-10 · max|λ|`.
    pub fn zero_tolerance(&self) -> f64 {
        let max = self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        self.values.len() as f64 * 1e-10 * max
    }

    pub fn is_zero(&self, k: usize) -> bool {
        self.values[k].abs() <= self.zero_tolerance()
    }

    pub fn zero_count(&self) -> usize {
        (0..self.len()).filter(|&k| self.is_zero(k)).count()
    }

    /// `max_k ‖M c_k - λ_k c_k‖_∞`.
    pub fn residual(&self, m: &Matrix) -> f64 {
        let mut worst: f64 = 0.0;
        for k in 0..self.len() {
            let c = self.vector(k);
            let mc = m.mul_vec(&c);
            for (a, b) in mc.iter().zip(&c) {
                worst = worst.max((a - self.values[k] * b).abs());
            }
        }
        worst
    }
}

/// Full eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.
pub fn sym_eigen(m: &Matrix) -> Result<EigenPairs> {
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
    let mut a = m.symmetrized();
    let mut v = Matrix::identity(n);
    let norm = a.frobenius_norm();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= OFF_DIAGONAL_TOL * norm {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > OFF_DIAGONAL_TOL * norm {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = Matrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(EigenPairs { values, vectors })
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Applies the rotation annihilating `a[p][q]`, accumulating it into `v`.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.rows();

    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;

    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}
