use serde::{Deserialize, Serialize};

use super::io::BlockFile;
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// An `n x n` operator matrix `[T_ij]` acting on `H_1 (+) ... (+) H_n`.
///
/// Block `(i, j)` maps `H_j` into `H_i`, so it has shape `dims[i] x dims[j]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BlockFile", into = "BlockFile")]
pub struct BlockMatrix {
    dims: Vec<usize>,
    blocks: Vec<ComplexMatrix>,
}

impl BlockMatrix {
    /// `blocks` is the grid in row-major order.
    pub fn new(dims: Vec<usize>, blocks: Vec<ComplexMatrix>) -> Result<Self> {
        let n = dims.len();
        if n == 0 {
            return Err(Error::Invalid("block matrix needs at least one block".into()));
        }
        if let Some(&d) = dims.iter().find(|&&d| d == 0) {
            return Err(Error::EmptyShape { rows: d, cols: d });
        }
        if blocks.len() != n * n {
            return Err(Error::EntryCount {
                expected: n * n,
                actual: blocks.len(),
            });
        }
        for (k, b) in blocks.iter().enumerate() {
            let (i, j) = (k / n, k % n);
            let expected = (dims[i], dims[j]);
            if b.shape() != expected {
                return Err(Error::BlockShape {
                    row: i,
                    col: j,
                    expected,
                    actual: b.shape(),
                });
            }
        }
        Ok(Self { dims, blocks })
    }

    pub fn from_grid(grid: Vec<Vec<ComplexMatrix>>) -> Result<Self> {
        let n = grid.len();
        if grid.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid("block grid must be square".into()));
        }
        let dims = grid.iter().enumerate().map(|(i, row)| row[i].rows()).collect();
        Self::new(dims, grid.into_iter().flatten().collect())
    }

    /// The 2x2 operator matrix `[[A, B], [C, D]]`.
    pub fn two_by_two(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix, d: &ComplexMatrix) -> Result<Self> {
        Self::new(
            vec![a.rows(), d.rows()],
            vec![a.clone(), b.clone(), c.clone(), d.clone()],
        )
    }

    pub fn zeros(dims: Vec<usize>) -> Self {
        let blocks = dims
            .iter()
            .flat_map(|&r| dims.iter().map(move |&c| ComplexMatrix::zeros(r, c)))
            .collect();
        Self::new(dims, blocks).expect("zero blocks always conform")
    }

    /// Partitions a square matrix according to `dims`.
    pub fn split(m: &ComplexMatrix, dims: &[usize]) -> Result<Self> {
        let side = m.ensure_square("split")?;
        let total: usize = dims.iter().sum();
        if total != side {
            return Err(Error::DimensionMismatch {
                op: "split",
                left: side,
                right: total,
            });
        }
        let offsets = offsets(dims);
        let mut blocks = Vec::with_capacity(dims.len() * dims.len());
        for (i, &ri) in dims.iter().enumerate() {
            for (j, &cj) in dims.iter().enumerate() {
                blocks.push(m.submatrix(offsets[i], offsets[j], ri, cj));
            }
        }
        Self::new(dims.to_vec(), blocks)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn block(&self, i: usize, j: usize) -> &ComplexMatrix {
        &self.blocks[i * self.n() + j]
    }

    pub fn side(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Flattens the operator matrix into one square matrix of side `sum(dims)`.
    pub fn assemble(&self) -> ComplexMatrix {
        let side = self.side();
        let offsets = offsets(&self.dims);
        let mut out = ComplexMatrix::zeros(side, side);
        for i in 0..self.n() {
            for j in 0..self.n() {
                let b = self.block(i, j);
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        out[(offsets[i] + r, offsets[j] + c)] = b[(r, c)];
                    }
                }
            }
        }
        out
    }
}

/// Free-function form of [`BlockMatrix::assemble`].
pub fn assemble(b: &BlockMatrix) -> ComplexMatrix {
    b.assemble()
}

fn offsets(dims: &[usize]) -> Vec<usize> {
    dims.iter()
        .scan(0, |acc, &d| {
            let start = *acc;
            *acc += d;
            Some(start)
        })
        .collect()
}
