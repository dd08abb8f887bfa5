use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// An `nk × nk` matrix viewed as an `n × n` grid of `k × k` blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockMatrix {
    n: usize,
    k: usize,
    data: Matrix,
}

impl BlockMatrix {
    pub fn zeros(n: usize, k: usize) -> Self {
        BlockMatrix {
            n,
            k,
            data: Matrix::zeros(n * k, n * k),
        }
    }

    pub fn identity(n: usize, k: usize) -> Self {
        BlockMatrix {
            n,
            k,
            data: Matrix::identity(n * k),
        }
    }

    /// `J_n ⊗ I_k`: every block is the identity.
    pub fn ones_kron_identity(n: usize, k: usize) -> Self {
        BlockMatrix {
            n,
            k,
            data: Matrix::ones(n).kron(&Matrix::identity(k)),
        }
    }

    /// Partitions a square matrix of order `n·k` into `k × k` blocks.
    pub fn from_matrix(data: Matrix, n: usize, k: usize) -> Result<Self> {
        if data.rows() != n * k || data.cols() != n * k {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix cannot be split into {n}x{n} blocks of order {k}",
                data.rows(),
                data.cols()
            )));
        }
        Ok(BlockMatrix { n, k, data })
    }

    pub fn from_blocks(n: usize, k: usize, mut f: impl FnMut(usize, usize) -> Matrix) -> Self {
        let mut out = Self::zeros(n, k);
        for i in 0..n {
            for j in 0..n {
                out.set_block(i, j, &f(i, j));
            }
        }
        out
    }

    /// Number of block rows.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Block order.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.data
    }

    pub fn into_matrix(self) -> Matrix {
        self.data
    }

    pub fn block(&self, i: usize, j: usize) -> Matrix {
        self.data.view(i * self.k, j * self.k, self.k, self.k)
    }

    pub fn set_block(&mut self, i: usize, j: usize, b: &Matrix) {
        assert_eq!(
            (b.rows(), b.cols()),
            (self.k, self.k),
            "block order mismatch"
        );
        self.data.set_view(i * self.k, j * self.k, b);
    }

    pub fn add_to_block(&mut self, i: usize, j: usize, b: &Matrix) {
        let sum = &self.block(i, j) + b;
        self.set_block(i, j, &sum);
    }

    fn same_shape(&self, other: &BlockMatrix) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::ShapeMismatch(format!(
                "block grids {}x{} (k={}) and {}x{} (k={})",
                self.n, self.n, self.k, other.n, other.n, other.k
            )));
        }
        Ok(())
    }

    /// Blockwise product `(A ⊠ B)_ij = A_ij B_ij`.
    pub fn boxtimes(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        self.same_shape(other)?;
        Ok(Self::from_blocks(self.n, self.k, |i, j| {
            &self.block(i, j) * &other.block(i, j)
        }))
    }

    /// `‖M‖`: the sum of all blocks.
    pub fn block_total(&self) -> Matrix {
        let mut total = Matrix::zeros(self.k, self.k);
        for i in 0..self.n {
            for j in 0..self.n {
                total = &total + &self.block(i, j);
            }
        }
        total
    }

    /// Moves block `(j, i)` to `(i, j)`; the blocks themselves are not transposed.
    pub fn block_transpose(&self) -> BlockMatrix {
        Self::from_blocks(self.n, self.k, |i, j| self.block(j, i))
    }

    /// Sum of the diagonal blocks.
    pub fn block_trace(&self) -> Matrix {
        let mut total = Matrix::zeros(self.k, self.k);
        for i in 0..self.n {
            total = &total + &self.block(i, i);
        }
        total
    }

    /// Keeps the diagonal blocks and zeroes the rest.
    pub fn block_diagonal(&self) -> BlockMatrix {
        Self::from_blocks(self.n, self.k, |i, j| {
            if i == j {
                self.block(i, i)
            } else {
                Matrix::zeros(self.k, self.k)
            }
        })
    }

    /// `Σ_i M_ij` for each block column `j`.
    pub fn block_column_sums(&self) -> Vec<Matrix> {
        (0..self.n)
            .map(|j| {
                (0..self.n).fold(Matrix::zeros(self.k, self.k), |acc, i| {
                    &acc + &self.block(i, j)
                })
            })
            .collect()
    }

    /// `Σ_j M_ij` for each block row `i`.
    pub fn block_row_sums(&self) -> Vec<Matrix> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(Matrix::zeros(self.k, self.k), |acc, j| {
                    &acc + &self.block(i, j)
                })
            })
            .collect()
    }

    pub fn mul(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        self.same_shape(other)?;
        Ok(BlockMatrix {
            n: self.n,
            k: self.k,
            data: &self.data * &other.data,
        })
    }

    pub fn add(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        self.same_shape(other)?;
        Ok(BlockMatrix {
            n: self.n,
            k: self.k,
            data: &self.data + &other.data,
        })
    }

    pub fn sub(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        self.same_shape(other)?;
        Ok(BlockMatrix {
            n: self.n,
            k: self.k,
            data: &self.data - &other.data,
        })
    }

    pub fn scale(&self, s: f64) -> BlockMatrix {
        BlockMatrix {
            n: self.n,
            k: self.k,
            data: self.data.scale(s),
        }
    }

    pub fn max_abs_diff(&self, other: &BlockMatrix) -> f64 {
        self.data.max_abs_diff(&other.data)
    }
}
