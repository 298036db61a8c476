use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::rng::SplitMix64;
use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, ComplexVector, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleKind {
    /// Entries `(N(0,1) + i N(0,1)) / √2`.
    ComplexGaussian,
    /// Real entries uniform in `[0, 1)`.
    Nonnegative,
    /// `(G + G*) / 2` for complex Gaussian `G`.
    SelfAdjoint,
    /// Gram-Schmidt orthonormalization of a complex Gaussian matrix.
    Unitary,
    /// Complex Gaussian vector scaled to unit norm.
    UnitVector,
}

impl SampleKind {
    pub const ALL: [SampleKind; 5] = [
        SampleKind::ComplexGaussian,
        SampleKind::Nonnegative,
        SampleKind::SelfAdjoint,
        SampleKind::Unitary,
        SampleKind::UnitVector,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SampleKind::ComplexGaussian => "complex-gaussian",
            SampleKind::Nonnegative => "nonnegative",
            SampleKind::SelfAdjoint => "self-adjoint",
            SampleKind::Unitary => "unitary",
            SampleKind::UnitVector => "unit-vector",
        }
    }
}

impl fmt::Display for SampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

/// What to draw: kind, shape and seed. Vectors use `rows` as their dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: SampleKind,
    pub rows: usize,
    pub cols: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn square(kind: SampleKind, dim: usize, seed: u64) -> Self {
        Self {
            kind,
            rows: dim,
            cols: dim,
            seed,
        }
    }

    pub fn vector(dim: usize, seed: u64) -> Self {
        Self {
            kind: SampleKind::UnitVector,
            rows: dim,
            cols: 1,
            seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Sample {
    Matrix(ComplexMatrix),
    Vector(ComplexVector),
}

impl Sample {
    pub fn into_matrix(self) -> Option<ComplexMatrix> {
        match self {
            Sample::Matrix(m) => Some(m),
            Sample::Vector(_) => None,
        }
    }

    pub fn into_vector(self) -> Option<ComplexVector> {
        match self {
            Sample::Vector(v) => Some(v),
            Sample::Matrix(_) => None,
        }
    }
}

/// Deterministic draw: identical specs give bitwise-identical output.
pub fn sample(spec: &GenSpec) -> Result<Sample> {
    if spec.rows == 0 || spec.cols == 0 {
        return Err(Error::EmptyShape {
            rows: spec.rows,
            cols: spec.cols,
        });
    }
    let mut rng = SplitMix64::new(spec.seed);
    let (r, c) = (spec.rows, spec.cols);
    let need_square = |op| {
        if r == c {
            Ok(())
        } else {
            Err(Error::NotSquare { op, rows: r, cols: c })
        }
    };
    Ok(match spec.kind {
        SampleKind::ComplexGaussian => Sample::Matrix(gaussian_matrix(&mut rng, r, c)),
        SampleKind::Nonnegative => Sample::Matrix(nonnegative_matrix(&mut rng, r, c)),
        SampleKind::SelfAdjoint => {
            need_square("self-adjoint sample")?;
            Sample::Matrix(self_adjoint_matrix(&mut rng, r))
        }
        SampleKind::Unitary => {
            need_square("unitary sample")?;
            Sample::Matrix(unitary_matrix(&mut rng, r))
        }
        SampleKind::UnitVector => Sample::Vector(unit_vector(&mut rng, r)),
    })
}

pub(crate) fn gaussian_scalar(rng: &mut SplitMix64) -> C64 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let re = rng.normal();
    let im = rng.normal();
    C64::new(re * s, im * s)
}

pub(crate) fn gaussian_matrix(rng: &mut SplitMix64, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian_scalar(rng))
}

pub(crate) fn gaussian_vector(rng: &mut SplitMix64, dim: usize) -> ComplexVector {
    ComplexVector::from_entries_unchecked((0..dim).map(|_| gaussian_scalar(rng)).collect())
}

pub(crate) fn nonnegative_matrix(rng: &mut SplitMix64, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| C64::new(rng.next_f64(), 0.0))
}

pub(crate) fn self_adjoint_matrix(rng: &mut SplitMix64, dim: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, dim, dim);
    ComplexMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            C64::new(g[(i, i)].re, 0.0)
        } else if i < j {
            (g[(i, j)] + g[(j, i)].conj()) * 0.5
        } else {
            ((g[(j, i)] + g[(i, j)].conj()) * 0.5).conj()
        }
    })
}

pub(crate) fn unitary_matrix(rng: &mut SplitMix64, dim: usize) -> ComplexMatrix {
    loop {
        let g = gaussian_matrix(rng, dim, dim);
        let mut cols: Vec<Vec<C64>> = (0..dim).map(|j| (0..dim).map(|i| g[(i, j)]).collect()).collect();
        let mut ok = true;
        for j in 0..dim {
            // two passes of modified Gram-Schmidt
            for _ in 0..2 {
                for k in 0..j {
                    let proj: C64 = cols[j].iter().zip(&cols[k]).map(|(&a, &b)| a * b.conj()).sum();
                    let (head, tail) = cols.split_at_mut(j);
                    for (a, &b) in tail[0].iter_mut().zip(&head[k]) {
                        *a -= proj * b;
                    }
                }
            }
            let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-8 {
                ok = false;
                break;
            }
            for a in cols[j].iter_mut() {
                *a /= norm;
            }
        }
        if ok {
            return ComplexMatrix::from_fn(dim, dim, |i, j| cols[j][i]);
        }
    }
}

pub(crate) fn unit_vector(rng: &mut SplitMix64, dim: usize) -> ComplexVector {
    loop {
        if let Some(v) = gaussian_vector(rng, dim).normalized() {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vectors_are_deterministic_and_normalized() {
        let a = sample(&GenSpec::vector(3, 7)).unwrap();
        let b = sample(&GenSpec::vector(3, 7)).unwrap();
        assert_eq!(a, b);
        let v = a.into_vector().unwrap();
        assert!((v.norm() - 1.0).abs() <= 1e-14);
        assert_ne!(sample(&GenSpec::vector(3, 8)).unwrap().into_vector().unwrap(), v);
    }

    #[test]
    fn self_adjoint_is_hermitian() {
        let h = sample(&GenSpec::square(SampleKind::SelfAdjoint, 4, 1))
            .unwrap()
            .into_matrix()
            .unwrap();
        assert!(h.sub(&h.adjoint()).unwrap().frobenius_norm() <= 1e-14);
    }

    #[test]
    fn nonnegative_entries_are_real_and_nonnegative() {
        let m = sample(&GenSpec::square(SampleKind::Nonnegative, 3, 2))
            .unwrap()
            .into_matrix()
            .unwrap();
        assert!(m.entries().iter().all(|z| z.im == 0.0 && z.re >= 0.0));
    }

    #[test]
    fn unitary_is_unitary() {
        let u = sample(&GenSpec::square(SampleKind::Unitary, 5, 3))
            .unwrap()
            .into_matrix()
            .unwrap();
        let err = u
            .adjoint()
            .matmul(&u)
            .unwrap()
            .sub(&ComplexMatrix::identity(5))
            .unwrap()
            .max_abs();
        assert!(err < 1e-13);
    }

    #[test]
    fn kinds_parse_and_reject_unknown() {
        for k in SampleKind::ALL {
            assert_eq!(k.name().parse::<SampleKind>().unwrap(), k);
        }
        assert!(matches!("hermitian".parse::<SampleKind>(), Err(Error::UnknownKind(_))));
    }

    #[test]
    fn rectangular_unitary_rejected() {
        let spec = GenSpec {
            kind: SampleKind::Unitary,
            rows: 2,
            cols: 3,
            seed: 0,
        };
        assert!(sample(&spec).is_err());
    }
}
