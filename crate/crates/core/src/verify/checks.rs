use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, ComplexVector};
use crate::spectra::psd_power;

/// Absolute slack allowed on every inequality check.
pub const SLACK: f64 = 1e-8;

/// One evaluated inequality: `gap = bound - lhs`, so `gap >= 0` means the
/// inequality held.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub gap: f64,
    pub seed: u64,
    pub passed: bool,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, gap: f64) -> Self {
        Self {
            name: name.into(),
            gap,
            seed: 0,
            // NaN never passes
            passed: gap >= -SLACK,
        }
    }

    /// Inequality `lhs <= rhs`.
    pub fn le(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self::new(name, rhs - lhs)
    }

    /// Equality `a == b` within `tol`, either relative to `max(|a|, |b|, 1)`
    /// or absolute. The error is reported in slack units: the gap is
    /// `-SLACK * err / tol`, which passes exactly when `err <= tol`.
    pub fn close(name: impl Into<String>, a: f64, b: f64, tol: Tolerance) -> Self {
        let err = match tol {
            Tolerance::Relative(_) => (a - b).abs() / a.abs().max(b.abs()).max(1.0),
            Tolerance::Absolute(_) => (a - b).abs(),
        };
        Self::new(name, -SLACK * err / tol.value())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Tolerance {
    Relative(f64),
    Absolute(f64),
}

impl Tolerance {
    fn value(self) -> f64 {
        match self {
            Tolerance::Relative(t) | Tolerance::Absolute(t) => t,
        }
    }
}

fn same_dim(op: &'static str, a: &ComplexVector, b: &ComplexVector) -> Result<()> {
    if a.dim() == b.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            op,
            left: a.dim(),
            right: b.dim(),
        })
    }
}

/// `|<x,y>| <= ‖x‖ ‖y‖`.
pub fn check_cauchy_schwarz(x: &ComplexVector, y: &ComplexVector) -> Result<CheckResult> {
    same_dim("check_cauchy_schwarz", x, y)?;
    Ok(CheckResult::le(
        "cauchy_schwarz",
        x.inner_product(y)?.norm(),
        x.norm() * y.norm(),
    ))
}

/// `|<x,z>| |<y,z>| <= ½ ‖z‖² (|<x,y>| + ‖x‖ ‖y‖)`.
pub fn check_buzano(x: &ComplexVector, y: &ComplexVector, z: &ComplexVector) -> Result<CheckResult> {
    same_dim("check_buzano", x, y)?;
    same_dim("check_buzano", x, z)?;
    let lhs = x.inner_product(z)?.norm() * y.inner_product(z)?.norm();
    let z2 = z.norm().powi(2);
    let rhs = 0.5 * z2 * (x.inner_product(y)?.norm() + x.norm() * y.norm());
    Ok(CheckResult::le("buzano", lhs, rhs))
}

/// `|<Tx,y>|² <= <|T|^{2(1-t)} x, x> <|T*|^{2t} y, y>` for `t ∈ [0, 1]`.
pub fn check_mixed_cs(t_op: &ComplexMatrix, x: &ComplexVector, y: &ComplexVector, t: f64) -> Result<CheckResult> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfRange {
            what: "mixed Cauchy-Schwarz parameter t",
            range: "[0, 1]",
            value: t,
        });
    }
    if x.dim() != t_op.cols() || y.dim() != t_op.rows() {
        return Err(Error::ShapeMismatch {
            op: "check_mixed_cs",
            left: t_op.shape(),
            right: (y.dim(), x.dim()),
        });
    }
    let t_adj = t_op.adjoint();
    // |T|^{2s} = (T*T)^s
    let left = psd_power(&t_adj.matmul(t_op)?, 1.0 - t)?;
    let right = psd_power(&t_op.matmul(&t_adj)?, t)?;
    let lx = left.mul_vec(x)?.inner_product(x)?.re;
    let ry = right.mul_vec(y)?.inner_product(y)?.re;
    let lhs = t_op.mul_vec(x)?.inner_product(y)?.norm_sqr();
    Ok(CheckResult::le("mixed_cs", lhs, lx * ry))
}
