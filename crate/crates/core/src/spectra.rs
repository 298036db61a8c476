//! Spectral primitives: Hermitian eigendecomposition, operator norm, PSD
//! powers, `|A|`, numerical radius and spectral radius.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, C64};

const JACOBI_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;
const PSD_CLAMP: f64 = 1e-10;

const RADIUS_SAMPLES: usize = 720;
const RADIUS_REFINE: usize = 3;
const RADIUS_THETA_WIDTH: f64 = 1e-12;

const GELFAND_TOL: f64 = 1e-10;
const GELFAND_MAX_STEPS: usize = 60;
const GELFAND_UNDERFLOW: f64 = 1e-300;

/// Eigendecomposition `H = V diag(eigenvalues) V*` of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEig {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, one per column.
    pub vectors: ComplexMatrix,
}

impl HermitianEig {
    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// `V f(Λ) V*`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let v = &self.vectors;
        let n = v.rows();
        let w: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = ComplexMatrix::from_fn(n, n, |i, j| (0..n).map(|k| v[(i, k)] * v[(j, k)].conj() * w[k]).sum());
        symmetrize_in_place(&mut out);
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map(|l| l)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub numerical_radius: f64,
    pub operator_norm: f64,
    pub spectral_radius: f64,
}

fn symmetrize_in_place(m: &mut ComplexMatrix) {
    let n = m.rows();
    for i in 0..n {
        m[(i, i)] = C64::new(m[(i, i)].re, 0.0);
        for j in i + 1..n {
            let z = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
}

/// Cyclic complex Jacobi. Returns unsorted eigenvalues and, when requested,
/// the accumulated rotations.
fn jacobi(h: &ComplexMatrix, want_vectors: bool) -> Result<(Vec<f64>, Option<ComplexMatrix>)> {
    let n = h.ensure_square("hermitian_eig")?;
    let mut m = h.clone();
    symmetrize_in_place(&mut m);
    let tol = JACOBI_TOL * m.frobenius_norm();
    // row-major working copies
    let mut a = m.entries().to_vec();
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n).entries().to_vec());

    let off_mass = |a: &[C64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for z in &a[i * n + i + 1..(i + 1) * n] {
                s += 2.0 * z.norm_sqr();
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_mass(&a) <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let b = apq.norm();
                if b == 0.0 {
                    continue;
                }
                let u = apq / b;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let tau = (aqq - app) / (2.0 * b);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // U restricted to (p, q): [[c, s u], [-s conj(u), c]].
                let su = u * s;
                let su_bar = su.conj();

                for row in a.chunks_exact_mut(n) {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = akp * c - akq * su_bar;
                    row[q] = akp * su + akq * c;
                }
                let (head, tail) = a.split_at_mut(q * n);
                let row_p = &mut head[p * n..(p + 1) * n];
                let row_q = &mut tail[..n];
                for (apk, aqk) in row_p.iter_mut().zip(row_q.iter_mut()) {
                    let (x, y) = (*apk, *aqk);
                    *apk = x * c - y * su;
                    *aqk = x * su_bar + y * c;
                }
                a[p * n + p] = C64::new(app - t * b, 0.0);
                a[q * n + q] = C64::new(aqq + t * b, 0.0);
                a[p * n + q] = C64::new(0.0, 0.0);
                a[q * n + p] = C64::new(0.0, 0.0);

                if let Some(v) = v.as_mut() {
                    for row in v.chunks_exact_mut(n) {
                        let (vkp, vkq) = (row[p], row[q]);
                        row[p] = vkp * c - vkq * su_bar;
                        row[q] = vkp * su + vkq * c;
                    }
                }
            }
        }
    }
    if !converged && off_mass(&a) > tol {
        return Err(Error::NoConvergence {
            what: "Jacobi eigensolver",
            iterations: JACOBI_MAX_SWEEPS,
        });
    }
    let vectors = v.map(|v| ComplexMatrix::new(n, n, v)).transpose()?;
    Ok(((0..n).map(|i| a[i * n + i].re).collect(), vectors))
}

/// `(H + H*) / 2` first, so slightly non-Hermitian roundoff is tolerated.
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<HermitianEig> {
    let (vals, vecs) = jacobi(h, true)?;
    let vecs = vecs.expect("vectors requested");
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
    let n = vals.len();
    Ok(HermitianEig {
        eigenvalues: order.iter().map(|&k| vals[k]).collect(),
        vectors: ComplexMatrix::from_fn(n, n, |i, j| vecs[(i, order[j])]),
    })
}

/// Ascending eigenvalues only.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    let (mut vals, _) = jacobi(h, false)?;
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

/// Smallest and largest eigenvalue; closed form for sides 1 and 2.
fn extreme_eigenvalues(h: &ComplexMatrix) -> Result<(f64, f64)> {
    match h.rows() {
        1 if h.cols() == 1 => Ok((h[(0, 0)].re, h[(0, 0)].re)),
        2 if h.cols() == 2 => {
            let a = h[(0, 0)].re;
            let d = h[(1, 1)].re;
            let b = (h[(0, 1)] + h[(1, 0)].conj()) * 0.5;
            let mean = 0.5 * (a + d);
            let radius = (0.5 * (a - d)).hypot(b.norm());
            Ok((mean - radius, mean + radius))
        }
        _ => {
            let (vals, _) = jacobi(h, false)?;
            Ok(vals
                .into_iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v))))
        }
    }
}

fn lambda_max(h: &ComplexMatrix) -> Result<f64> {
    Ok(extreme_eigenvalues(h)?.1)
}

/// Largest singular value.
pub fn operator_norm(a: &ComplexMatrix) -> Result<f64> {
    let gram = if a.cols() <= a.rows() {
        a.adjoint().matmul(a)?
    } else {
        a.matmul(&a.adjoint())?
    };
    Ok(lambda_max(&gram)?.max(0.0).sqrt())
}

/// `P^s` for Hermitian PSD `P` and `s >= 0`.
///
/// Eigenvalues in `[-1e-10 * λ_max, 0)` are treated as roundoff and clamped
/// to zero. `0^0` is taken as 1, so `P^0 = I`.
pub fn psd_power(p: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    if !(s.is_finite() && s >= 0.0) {
        return Err(Error::OutOfRange {
            what: "psd_power exponent",
            range: "[0, inf)",
            value: s,
        });
    }
    let eig = hermitian_eig(p)?;
    let threshold = PSD_CLAMP * eig.max().max(0.0);
    if eig.min() < -threshold {
        return Err(Error::NotPsd {
            eigenvalue: eig.min(),
            threshold: -threshold,
        });
    }
    Ok(eig.map(|l| l.max(0.0).powf(s)))
}

/// `|A| = (A* A)^{1/2}`, square of side `A.cols()`.
pub fn abs_value(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    psd_power(&a.adjoint().matmul(a)?, 0.5)
}

/// `Re(e^{iθ} A) = cos θ Re(A) - sin θ Im(A)` from the precomputed
/// Hermitian and skew parts.
struct Rotation {
    re: ComplexMatrix,
    im: ComplexMatrix,
}

impl Rotation {
    fn new(a: &ComplexMatrix) -> Result<Self> {
        let adj = a.adjoint();
        Ok(Self {
            re: a.add(&adj)?.scale_real(0.5),
            // Im(A) = (A - A*) / 2i
            im: a.sub(&adj)?.scale(C64::new(0.0, -0.5)),
        })
    }

    fn at(&self, theta: f64) -> ComplexMatrix {
        let (s, c) = theta.sin_cos();
        let n = self.re.rows();
        ComplexMatrix::from_fn(n, n, |i, j| self.re[(i, j)] * c - self.im[(i, j)] * s)
    }

    /// `(λ_max(θ), λ_max(θ + π))`.
    fn top_pair(&self, theta: f64) -> Result<(f64, f64)> {
        let (lo, hi) = extreme_eigenvalues(&self.at(theta))?;
        Ok((hi, -lo))
    }

    fn top(&self, theta: f64) -> Result<f64> {
        lambda_max(&self.at(theta))
    }
}

fn golden_max(f: &impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while hi - lo > RADIUS_THETA_WIDTH {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
        }
    }
    Ok(if f1 >= f2 { (x1, f1) } else { (x2, f2) })
}

/// `ω(A) = max_θ λ_max(Re(e^{iθ} A))`.
///
/// The angle is sampled on a uniform grid of 720 points; the three highest
/// local maxima are then refined by golden-section search over their
/// bracketing cells.
pub fn numerical_radius(a: &ComplexMatrix) -> Result<f64> {
    a.ensure_square("numerical_radius")?;
    if a.max_abs() == 0.0 {
        return Ok(0.0);
    }
    let rot = Rotation::new(a)?;
    let step = 2.0 * PI / RADIUS_SAMPLES as f64;
    let half = RADIUS_SAMPLES / 2;
    let mut samples = vec![0.0; RADIUS_SAMPLES];
    for k in 0..half {
        let (top, opposite) = rot.top_pair(k as f64 * step)?;
        samples[k] = top;
        samples[k + half] = opposite;
    }

    let m = RADIUS_SAMPLES;
    let mut peaks: Vec<usize> = (0..m)
        .filter(|&k| {
            let prev = samples[(k + m - 1) % m];
            let next = samples[(k + 1) % m];
            samples[k] >= prev && samples[k] >= next
        })
        .collect();
    peaks.sort_by(|&i, &j| samples[j].total_cmp(&samples[i]));
    peaks.truncate(RADIUS_REFINE);

    let f = |theta: f64| rot.top(theta);
    let mut best = samples.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    for k in peaks {
        let centre = k as f64 * step;
        let (_, value) = golden_max(&f, centre - step, centre + step)?;
        best = best.max(value);
    }
    Ok(best.max(0.0))
}

/// `r(A)` by normalized repeated squaring of the Gelfand formula.
pub fn spectral_radius(a: &ComplexMatrix) -> Result<f64> {
    a.ensure_square("spectral_radius")?;
    let mut m = a.clone();
    let mut log_r = 0.0;
    let mut weight = 1.0;
    let mut small_steps = 0;
    for k in 0..=GELFAND_MAX_STEPS {
        let nk = operator_norm(&m)?;
        if nk < GELFAND_UNDERFLOW {
            return Ok(0.0);
        }
        let increment = weight * nk.ln();
        log_r += increment;
        // n_0 is the raw scale of A, not a normalized quantity, so it never
        // decides convergence; later steps must agree twice in a row.
        if k > 0 && increment.abs() < GELFAND_TOL {
            small_steps += 1;
            if small_steps == 2 {
                break;
            }
        } else {
            small_steps = 0;
        }
        let normalized = m.scale_real(1.0 / nk);
        m = normalized.matmul(&normalized)?;
        weight *= 0.5;
    }
    Ok(log_r.exp())
}

pub fn spectral_summary(a: &ComplexMatrix) -> Result<SpectralSummary> {
    Ok(SpectralSummary {
        numerical_radius: numerical_radius(a)?,
        operator_norm: operator_norm(a)?,
        spectral_radius: spectral_radius(a)?,
    })
}
