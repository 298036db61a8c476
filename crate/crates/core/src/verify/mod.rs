//! Randomized verification: a reproducible generator, sample families, an
//! independent spectral-radius oracle and the property suite.

mod checks;
mod oracle;
mod rng;
mod sample;
mod suite;

pub use checks::{check_buzano, check_cauchy_schwarz, check_mixed_cs, CheckResult, Tolerance, SLACK};
pub use oracle::{characteristic_polynomial, oracle_spectral_radius, polynomial_roots, ORACLE_MAX_SIDE};
pub use rng::SplitMix64;
pub use sample::{sample, GenSpec, Sample, SampleKind};
pub use suite::{compare_cor1_hirzallah, run_suite, CheckId, Cor1VsHirzallah, GapStats, SuiteConfig, SuiteReport};
