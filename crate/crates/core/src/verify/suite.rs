//! Seeded property suite over every inequality and identity the library
//! relies on.
//!
//! Trial `k` draws all of its inputs from `seed + k`, and every check owns a
//! separate stream derived from that trial seed, so a report does not depend
//! on scheduling, on which other checks were selected, or on thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{check_buzano, check_cauchy_schwarz, check_mixed_cs, CheckResult, Tolerance};
use super::oracle::{oracle_spectral_radius, ORACLE_MAX_SIDE};
use super::rng::SplitMix64;
use super::sample::{
    gaussian_matrix, gaussian_scalar, gaussian_vector, nonnegative_matrix, self_adjoint_matrix, unit_vector,
};
use crate::bounds::{
    block_bounds, inner_sum, row_bounds, self_bounds, spectral_sum_bounds, two_by_two_bounds, PairTerms,
};
use crate::error::{Error, Result};
use crate::matcore::{BlockMatrix, ComplexMatrix};
use crate::spectra::{hermitian_eigenvalues, numerical_radius, operator_norm, spectral_radius};

const MIXED_CS_PARAMETERS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];
const UNIT_VECTOR_PROBES: usize = 200;

macro_rules! checks {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(rename_all = "snake_case")]
        pub enum CheckId {
            $($variant),*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $name),*
                }
            }
        }
    };
}

checks! {
    CauchySchwarz => "cauchy_schwarz",
    Buzano => "buzano",
    MixedCs => "mixed_cs",
    Homogeneity => "homogeneity",
    AdjointSymmetry => "adjoint_symmetry",
    HermitianCollapse => "hermitian_collapse",
    Sandwich => "sandwich",
    PowerInequality => "power_inequality",
    LowerBoundConsistency => "lower_bound_consistency",
    Goldberg => "goldberg",
    SpectralRadiusCommutes => "r_ab_ba",
    OracleAgreement => "oracle_agreement",
    LemmaSoundness => "lemma_soundness",
    ReferenceChain => "remark21_chain",
    TheoremSoundness => "theorem_soundness",
    RefinementChain => "refinement_chain",
    OffDiagonalRefinement => "offdiag_refinement",
    SelfBoundChain => "self_bound_chain",
    CorollarySoundness => "corollary_soundness",
    SpectralSumSoundness => "spectral_sum_soundness",
}

impl CheckId {
    fn stream(self) -> u64 {
        Self::ALL.iter().position(|&c| c == self).expect("listed") as u64
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub trials: usize,
    /// Inclusive range of matrix sides.
    pub dims: (usize, usize),
    pub seed: u64,
    pub checks: Vec<CheckId>,
}

impl SuiteConfig {
    pub fn all_checks(trials: usize, dims: (usize, usize), seed: u64) -> Self {
        Self {
            trials,
            dims,
            seed,
            checks: CheckId::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapStats {
    pub min_gap: f64,
    pub mean_gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub trials: usize,
    pub failures: Vec<CheckResult>,
    #[serde(rename = "stats")]
    pub statistics: BTreeMap<String, GapStats>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Trial {
    rng: SplitMix64,
    lo: usize,
    hi: usize,
}

impl Trial {
    fn dim(&mut self) -> usize {
        self.rng.range_inclusive(self.lo, self.hi)
    }

    fn gaussian(&mut self, rows: usize, cols: usize) -> ComplexMatrix {
        gaussian_matrix(&mut self.rng, rows, cols)
    }

    fn square(&mut self, n: usize) -> ComplexMatrix {
        self.gaussian(n, n)
    }
}

fn run_check(check: CheckId, trial: &mut Trial) -> Result<Vec<CheckResult>> {
    use CheckId::*;
    let n = trial.dim();
    let name = check.name();
    let rel = Tolerance::Relative(1e-10);
    let mut out = Vec::new();
    match check {
        CauchySchwarz => {
            let x = gaussian_vector(&mut trial.rng, n);
            let y = gaussian_vector(&mut trial.rng, n);
            out.push(check_cauchy_schwarz(&x, &y)?);
        }
        Buzano => {
            let x = gaussian_vector(&mut trial.rng, n);
            let y = gaussian_vector(&mut trial.rng, n);
            let z = gaussian_vector(&mut trial.rng, n);
            out.push(check_buzano(&x, &y, &z)?);
        }
        MixedCs => {
            let m = trial.dim();
            let t = trial.gaussian(m, n);
            let x = gaussian_vector(&mut trial.rng, n);
            let y = gaussian_vector(&mut trial.rng, m);
            for p in MIXED_CS_PARAMETERS {
                out.push(check_mixed_cs(&t, &x, &y, p)?);
            }
        }
        Homogeneity => {
            let a = trial.square(n);
            let c = gaussian_scalar(&mut trial.rng) * 2.0;
            let ca = a.scale(c);
            let k = c.norm();
            out.push(CheckResult::close(
                name,
                numerical_radius(&ca)?,
                k * numerical_radius(&a)?,
                rel,
            ));
            out.push(CheckResult::close(
                name,
                operator_norm(&ca)?,
                k * operator_norm(&a)?,
                rel,
            ));
            out.push(CheckResult::close(
                name,
                spectral_radius(&ca)?,
                k * spectral_radius(&a)?,
                rel,
            ));
        }
        AdjointSymmetry => {
            let a = trial.square(n);
            let a_adj = a.adjoint();
            out.push(CheckResult::close(
                name,
                numerical_radius(&a_adj)?,
                numerical_radius(&a)?,
                rel,
            ));
            out.push(CheckResult::close(
                name,
                operator_norm(&a_adj)?,
                operator_norm(&a)?,
                rel,
            ));
        }
        HermitianCollapse => {
            let h = self_adjoint_matrix(&mut trial.rng, n);
            let eig = hermitian_eigenvalues(&h)?;
            let top = eig[0].abs().max(eig[eig.len() - 1].abs());
            out.push(CheckResult::close(name, numerical_radius(&h)?, top, rel));
            out.push(CheckResult::close(name, operator_norm(&h)?, top, rel));
        }
        Sandwich => {
            let a = trial.square(n);
            let w = numerical_radius(&a)?;
            let norm = operator_norm(&a)?;
            out.push(CheckResult::le(name, 0.5 * norm, w));
            out.push(CheckResult::le(name, w, norm));
            out.push(CheckResult::le(name, spectral_radius(&a)?, w));
        }
        PowerInequality => {
            let a = trial.square(n);
            let w = numerical_radius(&a)?;
            out.push(CheckResult::le(name, numerical_radius(&a.matmul(&a)?)?, w * w));
        }
        LowerBoundConsistency => {
            let a = trial.square(n);
            let w = numerical_radius(&a)?;
            let mut best: f64 = 0.0;
            for _ in 0..UNIT_VECTOR_PROBES {
                let x = unit_vector(&mut trial.rng, n);
                best = best.max(a.mul_vec(&x)?.inner_product(&x)?.norm());
            }
            out.push(CheckResult::le(name, best, w));
        }
        Goldberg => {
            let t = nonnegative_matrix(&mut trial.rng, n, n);
            out.push(CheckResult::close(
                name,
                numerical_radius(&t)?,
                operator_norm(&t.real_part()?)?,
                Tolerance::Absolute(1e-9),
            ));
        }
        SpectralRadiusCommutes => {
            let a = trial.square(n);
            let b = trial.square(n);
            out.push(CheckResult::close(
                name,
                spectral_radius(&a.matmul(&b)?)?,
                spectral_radius(&b.matmul(&a)?)?,
                Tolerance::Relative(1e-6),
            ));
        }
        OracleAgreement => {
            let a = trial.square(n.min(ORACLE_MAX_SIDE));
            out.push(CheckResult::close(
                name,
                spectral_radius(&a)?,
                oracle_spectral_radius(&a)?,
                Tolerance::Relative(1e-6),
            ));
        }
        LemmaSoundness | ReferenceChain => {
            let m = trial.dim();
            let a = trial.gaussian(m, n);
            let b = trial.gaussian(n, m);
            let terms = PairTerms::new(&a, &b)?;
            if check == LemmaSoundness {
                let x = gaussian_vector(&mut trial.rng, n);
                let y = gaussian_vector(&mut trial.rng, m);
                let lhs = inner_sum(&a, &b, &x, &y)?;
                let scale = x.norm() * y.norm();
                out.push(CheckResult::le(name, lhs, terms.lemma21() * scale));
                out.push(CheckResult::le(name, lhs, terms.lemma22() * scale));
            } else {
                out.push(CheckResult::le(name, terms.lemma21(), terms.reference()));
            }
        }
        TheoremSoundness | RefinementChain => {
            let t = random_blocks(trial)?;
            let report = block_bounds(&t)?;
            if check == TheoremSoundness {
                let w = numerical_radius(&t.assemble())?;
                out.push(CheckResult::le(name, w, report.omega_alpha));
                out.push(CheckResult::le(name, w, report.omega_beta));
            } else {
                out.push(CheckResult::le(name, report.omega_alpha, report.omega_abu_omar));
                out.push(CheckResult::le(name, report.omega_abu_omar, report.omega_hou));
                let k = report.alpha.len();
                for i in 0..k {
                    for j in i + 1..k {
                        let gamma = report.abu_omar[i][j] + report.abu_omar[j][i];
                        out.push(CheckResult::le(name, report.alpha[i][j], gamma));
                    }
                }
            }
        }
        OffDiagonalRefinement => {
            let m = trial.dim();
            let b = trial.gaussian(n, m);
            let c = trial.gaussian(m, n);
            let t = BlockMatrix::two_by_two(&ComplexMatrix::zeros(n, n), &b, &c, &ComplexMatrix::zeros(m, m))?;
            let report = block_bounds(&t)?;
            let w = numerical_radius(&t.assemble())?;
            out.push(CheckResult::le(name, w, report.omega_alpha));
            out.push(CheckResult::le(
                name,
                report.omega_alpha,
                0.5 * (operator_norm(&b)? + operator_norm(&c)?),
            ));
        }
        SelfBoundChain => {
            let t = trial.square(n);
            let r = self_bounds(&t)?;
            let w = numerical_radius(&t)?;
            out.push(CheckResult::le(name, w, r.c8));
            out.push(CheckResult::le(name, r.c8, r.c7));
            out.push(CheckResult::le(name, r.c7, r.norm));
        }
        CorollarySoundness => {
            let m = trial.dim();
            let a = trial.square(n);
            let b = trial.gaussian(n, m);
            let c = trial.gaussian(m, n);
            let d = trial.square(m);
            let r = two_by_two_bounds(&a, &b, &c, &d)?;
            let w = numerical_radius(&BlockMatrix::two_by_two(&a, &b, &c, &d)?.assemble())?;
            out.push(CheckResult::le(name, w, r.cor1));
            out.push(CheckResult::le(name, w, r.cor2));

            let z_cn = ComplexMatrix::zeros(m, n);
            let z_cm = ComplexMatrix::zeros(m, m);
            let row = row_bounds(&a, &b)?;
            let w_row = numerical_radius(&BlockMatrix::two_by_two(&a, &b, &z_cn, &z_cm)?.assemble())?;
            out.push(CheckResult::le(name, w_row, row.sh1));
        }
        SpectralSumSoundness => {
            let terms = 2 + trial.rng.range_inclusive(0, 1);
            let mut a_list = Vec::with_capacity(terms);
            let mut b_list = Vec::with_capacity(terms);
            for _ in 0..terms {
                let d = trial.rng.range_inclusive(1, trial.hi.div_ceil(2).max(1));
                a_list.push(trial.gaussian(n, d));
                b_list.push(trial.gaussian(d, n));
            }
            let r = spectral_sum_bounds(&a_list, &b_list)?;
            out.push(CheckResult::le(name, r.r_direct, r.omega_gamma));
            out.push(CheckResult::le(name, r.r_direct, r.omega_lambda));
        }
    }
    for r in &mut out {
        r.name = name.to_string();
    }
    Ok(out)
}

/// A 2x2 or 3x3 operator matrix with random complex Gaussian blocks.
fn random_blocks(trial: &mut Trial) -> Result<BlockMatrix> {
    let n = 2 + trial.rng.range_inclusive(0, 1);
    let dims: Vec<usize> = if n == 2 {
        (0..n).map(|_| trial.dim()).collect()
    } else {
        let hi = trial.hi.div_ceil(2).max(1);
        (0..n).map(|_| trial.rng.range_inclusive(1, hi)).collect()
    };
    let mut blocks = Vec::with_capacity(n * n);
    for &r in &dims {
        for &c in &dims {
            blocks.push(trial.gaussian(r, c));
        }
    }
    BlockMatrix::new(dims, blocks)
}

fn run_trial(config: &SuiteConfig, index: usize) -> Result<Vec<(CheckId, CheckResult)>> {
    let trial_seed = config.seed.wrapping_add(index as u64);
    let mut results = Vec::new();
    for &check in &config.checks {
        let mut trial = Trial {
            rng: SplitMix64::derive(trial_seed, check.stream()),
            lo: config.dims.0,
            hi: config.dims.1,
        };
        for r in run_check(check, &mut trial)? {
            results.push((check, r.with_seed(trial_seed)));
        }
    }
    Ok(results)
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.checks.is_empty() {
        return Err(Error::Invalid("at least one check is required".into()));
    }
    let (lo, hi) = config.dims;
    if lo == 0 || lo > hi {
        return Err(Error::Invalid(format!("invalid dimension range {lo}:{hi}")));
    }
    let per_trial = (0..config.trials)
        .into_par_iter()
        .map(|k| run_trial(config, k))
        .collect::<Result<Vec<_>>>()?;

    let mut failures = Vec::new();
    let mut acc: BTreeMap<CheckId, (f64, f64, usize)> = BTreeMap::new();
    for (check, result) in per_trial.into_iter().flatten() {
        let entry = acc.entry(check).or_insert((f64::INFINITY, 0.0, 0));
        entry.0 = entry.0.min(result.gap);
        entry.1 += result.gap;
        entry.2 += 1;
        if !result.passed {
            failures.push(result);
        }
    }
    let statistics = acc
        .into_iter()
        .map(|(check, (min, sum, count))| {
            (
                check.name().to_string(),
                GapStats {
                    min_gap: min,
                    mean_gap: sum / count as f64,
                },
            )
        })
        .collect();
    Ok(SuiteReport {
        trials: config.trials,
        failures,
        statistics,
    })
}

/// Outcome of comparing the first 2x2 corollary bound against the
/// `max{ω(A), ω(D)} + (ω(B+C) + ω(B−C)) / 2` bound on random square blocks.
/// Whether the former always wins is open, so this is an observation only.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cor1VsHirzallah {
    pub trials: usize,
    /// Trials where `cor1 <= hirzallah`.
    pub cor1_better: usize,
    /// Largest `cor1 - hirzallah` seen; positive means a counterexample.
    pub max_excess: f64,
}

pub fn compare_cor1_hirzallah(trials: usize, dims: (usize, usize), seed: u64) -> Result<Cor1VsHirzallah> {
    let excess = (0..trials)
        .into_par_iter()
        .map(|k| {
            let mut trial = Trial {
                rng: SplitMix64::derive(seed.wrapping_add(k as u64), u64::MAX),
                lo: dims.0,
                hi: dims.1,
            };
            let n = trial.dim();
            let blocks: Vec<ComplexMatrix> = (0..4).map(|_| trial.square(n)).collect();
            let r = two_by_two_bounds(&blocks[0], &blocks[1], &blocks[2], &blocks[3])?;
            Ok(r.cor1 - r.hirzallah.expect("square blocks"))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(Cor1VsHirzallah {
        trials,
        cor1_better: excess.iter().filter(|&&e| e <= 0.0).count(),
        max_excess: excess.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    })
}
