use super::Matrix;
use crate::error::{Error, Result};

/// Relative pivot threshold for declaring a matrix singular.
const PIVOT_TOL: f64 = 1e-12;

fn check_square(m: &Matrix) -> Result<usize> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

fn row_scales(m: &Matrix) -> Vec<f64> {
    (0..m.rows())
        .map(|i| m.row(i).iter().fold(0.0_f64, |a, x| a.max(x.abs())))
        .collect()
}

/// Determinant by LU with partial pivoting. The empty matrix has determinant 1;
/// a pivot at or below `1e-12 · ‖row‖` makes the determinant exactly zero.
pub fn determinant(m: &Matrix) -> Result<f64> {
    let n = check_square(m)?;
    let mut a = m.clone();
    let mut scale = row_scales(m);
    let mut det = 1.0;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[(i, k)].abs().total_cmp(&a[(j, k)].abs()))
            .expect("non-empty pivot range");
        if a[(p, k)].abs() <= PIVOT_TOL * scale[p] || scale[p] == 0.0 {
            return Ok(0.0);
        }
        if p != k {
            swap_rows(&mut a, p, k);
            scale.swap(p, k);
            det = -det;
        }
        let pivot = a[(k, k)];
        det *= pivot;
        for i in k + 1..n {
            let f = a[(i, k)] / pivot;
            if f == 0.0 {
                continue;
            }
            for j in k..n {
                a[(i, j)] -= f * a[(k, j)];
            }
        }
    }
    Ok(det)
}

/// Inverse by Gauss–Jordan elimination with partial pivoting.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = check_square(m)?;
    let mut a = m.clone();
    let mut inv = Matrix::identity(n);
    let mut scale = row_scales(m);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[(i, k)].abs().total_cmp(&a[(j, k)].abs()))
            .expect("non-empty pivot range");
        if a[(p, k)].abs() <= PIVOT_TOL * scale[p] || scale[p] == 0.0 {
            return Err(Error::Singular);
        }
        if p != k {
            swap_rows(&mut a, p, k);
            swap_rows(&mut inv, p, k);
            scale.swap(p, k);
        }
        let pivot = a[(k, k)];
        for j in 0..n {
            a[(k, j)] /= pivot;
            inv[(k, j)] /= pivot;
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = a[(i, k)];
            if f == 0.0 {
                continue;
            }
            for j in 0..n {
                a[(i, j)] -= f * a[(k, j)];
                inv[(i, j)] -= f * inv[(k, j)];
            }
        }
    }
    Ok(inv)
}

/// Inverse of a symmetric matrix, symmetrized to remove round-off asymmetry.
pub fn inverse_symmetric(m: &Matrix) -> Result<Matrix> {
    Ok(inverse(m)?.symmetrized())
}

fn swap_rows(a: &mut Matrix, p: usize, k: usize) {
    for j in 0..a.cols() {
        let t = a[(p, j)];
        a[(p, j)] = a[(k, j)];
        a[(k, j)] = t;
    }
}

/// `det M(S)`: the determinant after deleting the rows and columns in `removed`.
/// Deleting everything leaves the empty matrix, whose determinant is 1.
pub fn principal_minor(m: &Matrix, removed: &[usize]) -> Result<f64> {
    let n = check_square(m)?;
    let mut s: Vec<usize> = removed.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    determinant(&m.without(&s, &s))
}

/// The `(i, j)` cofactor `(-1)^{i+j} det M(i|j)`, computed from the minor directly.
pub fn cofactor(m: &Matrix, i: usize, j: usize) -> Result<f64> {
    check_square(m)?;
    let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * determinant(&m.without(&[i], &[j]))?)
}

/// Adjugate. Uses `det(M) · M⁻¹` when `M` is nonsingular and falls back to
/// explicit cofactors otherwise.
pub fn adjugate(m: &Matrix) -> Result<Matrix> {
    let n = check_square(m)?;
    let det = determinant(m)?;
    if det != 0.0 {
        if let Ok(inv) = inverse(m) {
            return Ok(inv.scale(det));
        }
    }
    let mut adj = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            adj[(j, i)] = cofactor(m, i, j)?;
        }
    }
    Ok(adj)
}

/// Lower Cholesky factor; fails unless `m` is symmetric positive definite.
/// A pivot at or below `1e-12 · max diagonal` counts as failure.
pub fn cholesky(m: &Matrix) -> Result<Matrix> {
    let n = check_square(m)?;
    let floor = PIVOT_TOL * m.diag().iter().fold(0.0_f64, |a, x| a.max(x.abs()));
    let mut l = Matrix::zeros(n, n);
    for j in 0..n {
        let mut d = m[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if !(d > floor) {
            return Err(Error::Singular);
        }
        let d = d.sqrt();
        l[(j, j)] = d;
        for i in j + 1..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / d;
        }
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_laplacian() -> Matrix {
        Matrix::from_rows(&[[2.0, -1.0, -1.0], [-1.0, 2.0, -1.0], [-1.0, -1.0, 2.0]])
    }

    #[test]
    fn minors_of_triangle_laplacian() {
        let l = k3_laplacian();
        assert!((principal_minor(&l, &[0]).unwrap() - 3.0).abs() < 1e-12);
        assert!((principal_minor(&l, &[0, 1]).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(principal_minor(&l, &[]).unwrap(), determinant(&l).unwrap());
        assert_eq!(determinant(&l).unwrap(), 0.0);
        // the empty minor is 1
        assert_eq!(principal_minor(&l, &[0, 1, 2]).unwrap(), 1.0);
    }

    #[test]
    fn inverse_examples() {
        let d = inverse(&Matrix::from_rows(&[[2.0, 0.0], [0.0, 4.0]])).unwrap();
        assert_eq!(d, Matrix::from_rows(&[[0.5, 0.0], [0.0, 0.25]]));
        assert_eq!(inverse(&Matrix::identity(4)).unwrap(), Matrix::identity(4));
        // adjugate [[5,-5],[-5,7]] over det 10
        let m = Matrix::from_rows(&[[7.0, 5.0], [5.0, 5.0]]);
        let inv = inverse(&m).unwrap();
        let want = Matrix::from_rows(&[[0.5, -0.5], [-0.5, 0.7]]);
        assert!(inv.max_abs_diff(&want) < 1e-14);
        assert!((&m * &inv).max_abs_diff(&Matrix::identity(2)) < 1e-12);
    }

    #[test]
    fn singular_inverse_is_an_error() {
        assert_eq!(inverse(&k3_laplacian()), Err(Error::Singular));
        assert_eq!(inverse(&Matrix::zeros(2, 2)), Err(Error::Singular));
    }

    #[test]
    fn adjugate_of_singular_uses_cofactors() {
        // adj(L) = t·J for a connected graph Laplacian
        let adj = adjugate(&k3_laplacian()).unwrap();
        assert!(adj.max_abs_diff(&Matrix::ones(3).scale(3.0)) < 1e-12);
        let m = Matrix::from_rows(&[[7.0, 5.0], [5.0, 5.0]]);
        let want = Matrix::from_rows(&[[5.0, -5.0], [-5.0, 7.0]]);
        assert!(adjugate(&m).unwrap().max_abs_diff(&want) < 1e-12);
    }

    #[test]
    fn cholesky_accepts_pd_rejects_indefinite() {
        let pd = Matrix::from_rows(&[[4.0, 2.0], [2.0, 3.0]]);
        let l = cholesky(&pd).unwrap();
        assert!((&l * &l.transpose()).max_abs_diff(&pd) < 1e-14);
        assert!(cholesky(&Matrix::from_rows(&[[1.0, 2.0], [2.0, 1.0]])).is_err());
        assert!(cholesky(&Matrix::from_rows(&[[1.0, 1.0], [1.0, 1.0]])).is_err());
    }

    #[test]
    fn empty_determinant_is_one() {
        assert_eq!(determinant(&Matrix::zeros(0, 0)).unwrap(), 1.0);
    }
}
