//! JSON file formats.
//!
//! Complex numbers are always explicit `[re, im]` pairs.
//!
//! ```text
//! matrix: {"rows": m, "cols": n, "entries": [[[re, im], ...], ...]}
//! block:  {"dims": [d1, ..., dn], "blocks": [[<matrix> | null, ...], ...]}
//! vector: {"dim": d, "entries": [[re, im], ...]}
//! ```
//!
//! A `null` block stands for the zero block of the appropriate shape.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::block::BlockMatrix;
use super::matrix::{ComplexMatrix, C64};
use super::vector::ComplexVector;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BlockFile {
    pub dims: Vec<usize>,
    pub blocks: Vec<Vec<Option<MatrixFile>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VectorFile {
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
}

impl TryFrom<MatrixFile> for ComplexMatrix {
    type Error = Error;

    fn try_from(f: MatrixFile) -> Result<Self> {
        if f.entries.len() != f.rows {
            return Err(Error::EntryCount {
                expected: f.rows,
                actual: f.entries.len(),
            });
        }
        let mut data = Vec::with_capacity(f.rows * f.cols);
        for row in &f.entries {
            if row.len() != f.cols {
                return Err(Error::EntryCount {
                    expected: f.cols,
                    actual: row.len(),
                });
            }
            data.extend(row.iter().map(|&[re, im]| C64::new(re, im)));
        }
        ComplexMatrix::new(f.rows, f.cols, data)
    }
}

impl From<ComplexMatrix> for MatrixFile {
    fn from(m: ComplexMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .entries()
                .chunks(m.cols())
                .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }
}

impl TryFrom<BlockFile> for BlockMatrix {
    type Error = Error;

    fn try_from(f: BlockFile) -> Result<Self> {
        let n = f.dims.len();
        if f.blocks.len() != n || f.blocks.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid(format!("block grid must be {n}x{n} to match dims")));
        }
        if f.dims.contains(&0) {
            return Err(Error::Invalid("block dimensions must be positive".into()));
        }
        let mut blocks = Vec::with_capacity(n * n);
        for (i, row) in f.blocks.into_iter().enumerate() {
            for (j, cell) in row.into_iter().enumerate() {
                blocks.push(match cell {
                    Some(m) => ComplexMatrix::try_from(m)?,
                    None => ComplexMatrix::zeros(f.dims[i], f.dims[j]),
                });
            }
        }
        BlockMatrix::new(f.dims, blocks)
    }
}

impl From<BlockMatrix> for BlockFile {
    fn from(b: BlockMatrix) -> Self {
        let n = b.n();
        let blocks = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let blk = b.block(i, j);
                        (blk.max_abs() != 0.0).then(|| MatrixFile::from(blk.clone()))
                    })
                    .collect()
            })
            .collect();
        Self {
            dims: b.dims().to_vec(),
            blocks,
        }
    }
}

impl TryFrom<VectorFile> for ComplexVector {
    type Error = Error;

    fn try_from(f: VectorFile) -> Result<Self> {
        if f.entries.len() != f.dim {
            return Err(Error::EntryCount {
                expected: f.dim,
                actual: f.entries.len(),
            });
        }
        ComplexVector::new(f.entries.iter().map(|&[re, im]| C64::new(re, im)).collect())
    }
}

impl From<ComplexVector> for VectorFile {
    fn from(v: ComplexVector) -> Self {
        Self {
            dim: v.dim(),
            entries: v.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<ComplexMatrix> {
    read_json(path.as_ref())
}

pub fn read_block(path: impl AsRef<Path>) -> Result<BlockMatrix> {
    read_json(path.as_ref())
}

pub fn read_vector(path: impl AsRef<Path>) -> Result<ComplexVector> {
    read_json(path.as_ref())
}

pub fn write_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(value)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_matrix_file() {
        let m: ComplexMatrix = serde_json::from_str(r#"{"rows":1,"cols":2,"entries":[[[1,2],[0,-1]]]}"#).unwrap();
        assert_eq!(m[(0, 0)], C64::new(1.0, 2.0));
        assert_eq!(m[(0, 1)], C64::new(0.0, -1.0));
    }

    #[test]
    fn rejects_ragged_matrix_file() {
        let r: std::result::Result<ComplexMatrix, _> =
            serde_json::from_str(r#"{"rows":2,"cols":2,"entries":[[[1,0],[0,0]],[[1,0]]]}"#);
        assert!(r.is_err());
    }

    #[test]
    fn null_blocks_are_zero() {
        let b: BlockMatrix = serde_json::from_str(
            r#"{"dims":[1,2],"blocks":[[{"rows":1,"cols":1,"entries":[[[3,0]]]},null],[null,null]]}"#,
        )
        .unwrap();
        assert_eq!(b.block(1, 0), &ComplexMatrix::zeros(2, 1));
        assert_eq!(b.assemble()[(0, 0)], C64::new(3.0, 0.0));
    }

    #[test]
    fn vector_file_dim_checked() {
        let r: std::result::Result<ComplexVector, _> = serde_json::from_str(r#"{"dim":3,"entries":[[1,0]]}"#);
        assert!(r.is_err());
        let v: ComplexVector = serde_json::from_str(r#"{"dim":2,"entries":[[1,0],[0,1]]}"#).unwrap();
        assert_eq!(v.entries()[1], C64::new(0.0, 1.0));
    }
}
