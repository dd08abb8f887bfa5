//! Dense real linear algebra: the matrix type, a Jacobi symmetric
//! eigensolver, LU-based determinants and inverses, and Moore–Penrose
//! inverses by two independent routes.

mod eigen;
mod lu;
mod matrix;
mod pinv;

pub use eigen::{sym_eigen, EigenPairs, MAX_SWEEPS};
pub use lu::{
    adjugate, cholesky, cofactor, determinant, inverse, inverse_symmetric, principal_minor,
};
pub use matrix::Matrix;
pub use pinv::{moore_penrose, penrose_residual, PinvMethod};
