use serde::{Deserialize, Serialize};

use super::io::VectorFile;
use super::matrix::C64;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "VectorFile", into = "VectorFile")]
pub struct ComplexVector {
    data: Vec<C64>,
}

impl ComplexVector {
    pub fn new(data: Vec<C64>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::EmptyShape { rows: 0, cols: 1 });
        }
        if let Some(k) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite { row: k, col: 0 });
        }
        Ok(Self { data })
    }

    pub fn from_real(data: &[f64]) -> Result<Self> {
        Self::new(data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub(crate) fn from_entries_unchecked(data: Vec<C64>) -> Self {
        Self { data }
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "zero-dimensional vector");
        Self {
            data: vec![C64::new(0.0, 0.0); dim],
        }
    }

    /// Standard basis vector `e_k`.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.data[k] = C64::new(1.0, 0.0);
        v
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    /// `<x, y> = sum_k x_k conj(y_k)`, linear in the first argument.
    pub fn inner_product(&self, other: &Self) -> Result<C64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                op: "inner_product",
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self.data.iter().zip(&other.data).map(|(&a, &b)| a * b.conj()).sum())
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            data: self.data.iter().map(|&z| z * c).collect(),
        }
    }

    /// Returns `x / ||x||`, or `None` for the zero vector.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        (n > 0.0).then(|| self.scale(C64::new(1.0 / n, 0.0)))
    }
}

/// Free-function form of [`ComplexVector::inner_product`].
pub fn inner_product(x: &ComplexVector, y: &ComplexVector) -> Result<C64> {
    x.inner_product(y)
}
