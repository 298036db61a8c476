//! Spectral radius through the characteristic polynomial, independent of the
//! repeated-squaring path in [`crate::spectra`].

use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, C64};

pub const ORACLE_MAX_SIDE: usize = 8;
const DK_MAX_ITERATIONS: usize = 500;
const DK_RESIDUAL: f64 = 1e-12;
const DK_ANGLE_OFFSET: f64 = 0.4;

/// Coefficients `c_0, ..., c_n` (ascending, `c_n = 1`) of `det(zI - A)` by
/// the Faddeev-LeVerrier recurrence.
pub fn characteristic_polynomial(a: &ComplexMatrix) -> Result<Vec<C64>> {
    let n = a.ensure_square("characteristic_polynomial")?;
    let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
    coeffs[n] = C64::new(1.0, 0.0);
    let identity = ComplexMatrix::identity(n);
    let mut m = ComplexMatrix::zeros(n, n);
    for k in 1..=n {
        m = a.matmul(&m)?.add(&identity.scale(coeffs[n - k + 1]))?;
        coeffs[n - k] = -a.matmul(&m)?.trace() / k as f64;
    }
    Ok(coeffs)
}

fn horner(coeffs: &[C64], z: C64) -> C64 {
    coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// `|p(z)| / Σ |c_k| |z|^k`.
fn scaled_residual(coeffs: &[C64], z: C64) -> f64 {
    let r = z.norm();
    let scale = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm());
    if scale == 0.0 {
        0.0
    } else {
        horner(coeffs, z).norm() / scale
    }
}

/// Roots of a monic polynomial by Durand-Kerner iteration.
pub fn polynomial_roots(coeffs: &[C64]) -> Result<Vec<C64>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let radius = 1.0 + coeffs[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut roots: Vec<C64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + DK_ANGLE_OFFSET;
            C64::from_polar(radius, angle)
        })
        .collect();

    // iterate until the updates stall, then judge by residual
    for _ in 0..DK_MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let zi = roots[i];
            let denom: C64 = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &zj)| zi - zj)
                .product();
            if denom.norm() == 0.0 {
                continue;
            }
            let step = horner(coeffs, zi) / denom;
            roots[i] = zi - step;
            max_step = max_step.max(step.norm() / (1.0 + zi.norm()));
        }
        if max_step < 1e-15 {
            break;
        }
    }
    if roots.iter().all(|&z| scaled_residual(coeffs, z) <= DK_RESIDUAL) {
        Ok(roots)
    } else {
        Err(Error::NoConvergence {
            what: "Durand-Kerner root finder",
            iterations: DK_MAX_ITERATIONS,
        })
    }
}

/// Largest eigenvalue modulus, from the roots of the characteristic polynomial.
pub fn oracle_spectral_radius(a: &ComplexMatrix) -> Result<f64> {
    let n = a.ensure_square("oracle_spectral_radius")?;
    if n > ORACLE_MAX_SIDE {
        return Err(Error::OracleTooLarge(n));
    }
    let roots = polynomial_roots(&characteristic_polynomial(a)?)?;
    Ok(roots.iter().map(|z| z.norm()).fold(0.0, f64::max))
}
