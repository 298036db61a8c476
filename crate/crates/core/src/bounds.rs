//! Upper bounds for inner products, numerical radii of operator matrices and
//! spectral radii of sums of products, together with the classical bounds
//! they are compared against.
//!
//! Every quantity is evaluated through [`crate::spectra`]; nothing here runs
//! its own eigen-computation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{BlockMatrix, ComplexMatrix, ComplexVector, C64};
use crate::spectra::{abs_value, numerical_radius, operator_norm, spectral_radius};

/// Real square matrix stored as rows, as produced by the block bounds.
pub type RealMatrix = Vec<Vec<f64>>;

pub fn real_to_complex(m: &[Vec<f64>]) -> ComplexMatrix {
    let n = m.len();
    ComplexMatrix::from_fn(n, m.first().map_or(0, Vec::len), |i, j| C64::new(m[i][j], 0.0))
}

/// The building blocks shared by both inner-product bounds, for a pair
/// `A: H1 -> H2`, `B: H2 -> H1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairTerms {
    /// `ω(|A| + i|B*|) · ω(|A*| + i|B|)`
    pub mixed: f64,
    pub norm_a: f64,
    pub norm_b: f64,
    /// `½ ‖ |A|² + |B*|² ‖`
    pub half_square_norm: f64,
    /// `ω(BA)`
    pub omega_ba: f64,
}

impl PairTerms {
    pub fn new(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Self> {
        if a.rows() != b.cols() || a.cols() != b.rows() {
            return Err(Error::ShapeMismatch {
                op: "pair bound (A: H1->H2, B: H2->H1)",
                left: a.shape(),
                right: b.shape(),
            });
        }
        let a_adj = a.adjoint();
        let b_adj = b.adjoint();
        let i = C64::new(0.0, 1.0);

        let left = abs_value(a)?.add(&abs_value(&b_adj)?.scale(i))?;
        let right = abs_value(&a_adj)?.add(&abs_value(b)?.scale(i))?;
        let squares = a_adj.matmul(a)?.add(&b.matmul(&b_adj)?)?;

        Ok(Self {
            mixed: numerical_radius(&left)? * numerical_radius(&right)?,
            norm_a: operator_norm(a)?,
            norm_b: operator_norm(b)?,
            half_square_norm: 0.5 * operator_norm(&squares)?,
            omega_ba: numerical_radius(&b.matmul(a)?)?,
        })
    }

    /// Radicand of the first bound: `mixed + ‖A‖‖B‖ + ω(BA)`.
    pub fn norm_radicand(&self) -> f64 {
        self.mixed + self.norm_a * self.norm_b + self.omega_ba
    }

    /// Radicand of the second bound: `mixed + ½‖|A|²+|B*|²‖ + ω(BA)`.
    pub fn square_radicand(&self) -> f64 {
        self.mixed + self.half_square_norm + self.omega_ba
    }

    pub fn lemma21(&self) -> f64 {
        self.norm_radicand().sqrt()
    }

    pub fn lemma22(&self) -> f64 {
        self.square_radicand().sqrt()
    }

    /// `√((‖A‖+‖B‖)² − (‖A‖‖B‖ − ω(BA)))`, the earlier bound the first one refines.
    pub fn reference(&self) -> f64 {
        let (na, nb) = (self.norm_a, self.norm_b);
        ((na + nb).powi(2) - (na * nb - self.omega_ba)).max(0.0).sqrt()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairBoundReport {
    pub lemma21: f64,
    pub lemma22: f64,
    pub reference: f64,
}

/// Bounds on `(|<Ax,y>| + |<By,x>|) / (‖x‖‖y‖)` for `A: H1 -> H2`, `B: H2 -> H1`.
pub fn pair_bounds(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<PairBoundReport> {
    let t = PairTerms::new(a, b)?;
    Ok(PairBoundReport {
        lemma21: t.lemma21(),
        lemma22: t.lemma22(),
        reference: t.reference(),
    })
}

/// `|<Ax, y>| + |<By, x>|` with `x ∈ H1`, `y ∈ H2`.
pub fn inner_sum(a: &ComplexMatrix, b: &ComplexMatrix, x: &ComplexVector, y: &ComplexVector) -> Result<f64> {
    let ax = a.mul_vec(x)?;
    let by = b.mul_vec(y)?;
    Ok(ax.inner_product(y)?.norm() + by.inner_product(x)?.norm())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockBoundReport {
    pub alpha: RealMatrix,
    pub beta: RealMatrix,
    pub abu_omar: RealMatrix,
    pub hou: RealMatrix,
    pub omega_alpha: f64,
    pub omega_beta: f64,
    pub omega_abu_omar: f64,
    /// `‖[‖T_ij‖]‖`
    pub omega_hou: f64,
}

/// Upper-triangular bound matrices built from the two pair bounds.
fn triangular_bounds(t: &BlockMatrix) -> Result<(RealMatrix, RealMatrix)> {
    let n = t.n();
    let mut alpha = vec![vec![0.0; n]; n];
    let mut beta = vec![vec![0.0; n]; n];
    for i in 0..n {
        let w = numerical_radius(t.block(i, i))?;
        alpha[i][i] = w;
        beta[i][i] = w;
        for j in i + 1..n {
            let terms = PairTerms::new(t.block(i, j), t.block(j, i))?;
            alpha[i][j] = terms.lemma21();
            beta[i][j] = terms.lemma22();
        }
    }
    Ok((alpha, beta))
}

pub fn block_bounds(t: &BlockMatrix) -> Result<BlockBoundReport> {
    let n = t.n();
    let (alpha, beta) = triangular_bounds(t)?;
    let mut abu_omar = vec![vec![0.0; n]; n];
    let mut hou = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let norm = operator_norm(t.block(i, j))?;
            hou[i][j] = norm;
            abu_omar[i][j] = if i == j { alpha[i][i] } else { norm };
        }
    }
    Ok(BlockBoundReport {
        omega_alpha: numerical_radius(&real_to_complex(&alpha))?,
        omega_beta: numerical_radius(&real_to_complex(&beta))?,
        omega_abu_omar: numerical_radius(&real_to_complex(&abu_omar))?,
        omega_hou: operator_norm(&real_to_complex(&hou))?,
        alpha,
        beta,
        abu_omar,
        hou,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoByTwoBoundReport {
    pub cor1: f64,
    pub cor2: f64,
    /// `None` when `H1 != H2`, since `B ± C` is then undefined.
    pub hirzallah: Option<f64>,
    pub shebrawi3: f64,
}

fn check_two_by_two(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    c: &ComplexMatrix,
    d: &ComplexMatrix,
) -> Result<(usize, usize)> {
    let d1 = a.ensure_square("2x2 bound, block A")?;
    let d2 = d.ensure_square("2x2 bound, block D")?;
    if b.shape() != (d1, d2) {
        return Err(Error::ShapeMismatch {
            op: "2x2 bound, block B",
            left: b.shape(),
            right: (d1, d2),
        });
    }
    if c.shape() != (d2, d1) {
        return Err(Error::ShapeMismatch {
            op: "2x2 bound, block C",
            left: c.shape(),
            right: (d2, d1),
        });
    }
    Ok((d1, d2))
}

/// Bounds for `ω([[A, B], [C, D]])`.
pub fn two_by_two_bounds(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    c: &ComplexMatrix,
    d: &ComplexMatrix,
) -> Result<TwoByTwoBoundReport> {
    let (d1, d2) = check_two_by_two(a, b, c, d)?;
    let wa = numerical_radius(a)?;
    let wd = numerical_radius(d)?;
    let terms = PairTerms::new(b, c)?;
    let mean = 0.5 * (wa + wd);
    let gap = (wa - wd).powi(2);

    let hirzallah = if d1 == d2 {
        let plus = numerical_radius(&b.add(c)?)?;
        let minus = numerical_radius(&b.sub(c)?)?;
        Some(wa.max(wd) + 0.5 * (plus + minus))
    } else {
        None
    };

    let gram_sum = |x: &ComplexMatrix, y: &ComplexMatrix, side: usize| -> Result<f64> {
        let m = ComplexMatrix::identity(side)
            .add(&x.matmul(&x.adjoint())?)?
            .add(&y.matmul(&y.adjoint())?)?;
        operator_norm(&m)
    };
    let shebrawi3 = 0.5 * wa + 0.5 * wd + 0.25 * gram_sum(a, b, d1)? + 0.25 * gram_sum(c, d, d2)?;

    Ok(TwoByTwoBoundReport {
        cor1: mean + 0.5 * (gap + terms.norm_radicand()).sqrt(),
        cor2: mean + 0.5 * (gap + terms.square_radicand()).sqrt(),
        hirzallah,
        shebrawi3,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RowBoundReport {
    pub sh1: f64,
    pub sh2: f64,
}

/// Bounds for `ω([[A, B], [O, O]])`.
pub fn row_bounds(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<RowBoundReport> {
    a.ensure_square("row bound, block A")?;
    if b.rows() != a.rows() {
        return Err(Error::DimensionMismatch {
            op: "row bound (B.rows must equal A.rows)",
            left: a.rows(),
            right: b.rows(),
        });
    }
    let wa = numerical_radius(a)?;
    let nb = operator_norm(b)?;
    let gram = a.matmul(&a.adjoint())?.add(&b.matmul(&b.adjoint())?)?;
    Ok(RowBoundReport {
        sh1: 0.5 * (wa + (wa * wa + nb * nb).sqrt()),
        sh2: 0.5 * (operator_norm(a)? + operator_norm(&gram)?.sqrt()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelfBoundReport {
    pub c7: f64,
    pub c8: f64,
    pub kittaneh: f64,
    pub norm: f64,
}

/// Upper bounds for `ω(T)` of a single square operator.
pub fn self_bounds(t: &ComplexMatrix) -> Result<SelfBoundReport> {
    t.ensure_square("self_bounds")?;
    let t_adj = t.adjoint();
    let abs_t = abs_value(t)?;
    let abs_t_adj = abs_value(&t_adj)?;
    let w = numerical_radius(&abs_t.add(&abs_t_adj.scale(C64::new(0.0, 1.0)))?)?;
    let norm = operator_norm(t)?;
    let w_sq = numerical_radius(&t.matmul(t)?)?;
    let half = 0.5 * operator_norm(&t_adj.matmul(t)?.add(&t.matmul(&t_adj)?)?)?;
    Ok(SelfBoundReport {
        c7: 0.5 * (w * w + norm * norm + w_sq).sqrt(),
        c8: 0.5 * (w * w + half + w_sq).sqrt(),
        kittaneh: 0.5 * operator_norm(&abs_t.add(&abs_t_adj)?)?,
        norm,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralSumReport {
    pub gamma: RealMatrix,
    pub lambda: RealMatrix,
    pub omega_gamma: f64,
    pub omega_lambda: f64,
    /// `r(Σ A_i B_i)` computed directly.
    pub r_direct: f64,
}

/// Bounds for `r(Σ A_i B_i)` with `A_i: H_i -> H` and `B_i: H -> H_i`.
///
/// The bound matrices are the triangular block bounds of the operator
/// matrix `[B_i A_j]`.
pub fn spectral_sum_bounds(a_list: &[ComplexMatrix], b_list: &[ComplexMatrix]) -> Result<SpectralSumReport> {
    if a_list.is_empty() || a_list.len() != b_list.len() {
        return Err(Error::DimensionMismatch {
            op: "spectral_sum_bounds (list lengths)",
            left: a_list.len(),
            right: b_list.len(),
        });
    }
    let m = a_list[0].rows();
    for (a, b) in a_list.iter().zip(b_list) {
        if a.rows() != m || b.cols() != m || b.rows() != a.cols() {
            return Err(Error::ShapeMismatch {
                op: "spectral_sum_bounds (A_i: H_i->H, B_i: H->H_i)",
                left: a.shape(),
                right: b.shape(),
            });
        }
    }
    let dims: Vec<usize> = a_list.iter().map(ComplexMatrix::cols).collect();
    let mut blocks = Vec::with_capacity(dims.len() * dims.len());
    for b in b_list {
        for a in a_list {
            blocks.push(b.matmul(a)?);
        }
    }
    let products = BlockMatrix::new(dims, blocks)?;
    let (gamma, lambda) = triangular_bounds(&products)?;

    let mut sum = ComplexMatrix::zeros(m, m);
    for (a, b) in a_list.iter().zip(b_list) {
        sum = sum.add(&a.matmul(b)?)?;
    }
    Ok(SpectralSumReport {
        omega_gamma: numerical_radius(&real_to_complex(&gamma))?,
        omega_lambda: numerical_radius(&real_to_complex(&lambda))?,
        r_direct: spectral_radius(&sum)?,
        gamma,
        lambda,
    })
}
