//! Published reference values recomputed from their embedded inputs.

use serde::Serialize;

use crate::bounds::{pair_bounds, real_to_complex, row_bounds, self_bounds, two_by_two_bounds};
use crate::error::Result;
use crate::matcore::{BlockMatrix, ComplexMatrix};
use crate::spectra::numerical_radius;

/// Absolute tolerance on every published constant; covers 4 to 6
/// significant-figure rounding.
pub const PUBLISHED_TOLERANCE: f64 = 5e-3;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Expected {
    pub quantity: &'static str,
    pub value: f64,
    pub tolerance: f64,
}

const fn expect(quantity: &'static str, value: f64) -> Expected {
    Expected {
        quantity,
        value,
        tolerance: PUBLISHED_TOLERANCE,
    }
}

/// A relation between two computed quantities that the case must exhibit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum Claim {
    /// `left < right` strictly.
    Less { left: &'static str, right: &'static str },
    /// `|left - right| <= tolerance`.
    Close {
        left: &'static str,
        right: &'static str,
        tolerance: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum CaseInputs {
    Pair {
        a: ComplexMatrix,
        b: ComplexMatrix,
    },
    TwoByTwo {
        blocks: [ComplexMatrix; 4],
    },
    Row {
        a: ComplexMatrix,
        b: ComplexMatrix,
    },
    SelfBound {
        t: ComplexMatrix,
    },
    /// Block matrix compared with the matrix of its blockwise numerical radii.
    Partitioned {
        t: BlockMatrix,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct PaperCase {
    pub id: &'static str,
    pub citation: &'static str,
    pub inputs: CaseInputs,
    pub expected: Vec<Expected>,
    pub claims: Vec<Claim>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpectedOutcome {
    pub quantity: &'static str,
    pub computed: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimOutcome {
    pub claim: Claim,
    /// Positive when the claim holds: `right - left` for strict ordering,
    /// `tolerance - |left - right|` for closeness.
    pub margin: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub id: &'static str,
    pub citation: &'static str,
    pub quantities: Vec<(&'static str, f64)>,
    pub expected: Vec<ExpectedOutcome>,
    pub claims: Vec<ClaimOutcome>,
    pub passed: bool,
}

impl CaseReport {
    pub fn quantity(&self, name: &str) -> Option<f64> {
        self.quantities.iter().find(|(q, _)| *q == name).map(|&(_, v)| v)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReproReport {
    pub cases: Vec<CaseReport>,
    pub passed: bool,
}

impl ReproReport {
    pub fn case(&self, id: &str) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn failed_ids(&self) -> Vec<&'static str> {
        self.cases.iter().filter(|c| !c.passed).map(|c| c.id).collect()
    }

    /// Plain table: one line per checked quantity or claim.
    pub fn table(&self) -> String {
        let mut out = String::new();
        for case in &self.cases {
            let status = if case.passed { "ok" } else { "FAIL" };
            out.push_str(&format!("{} [{status}] {}\n", case.id, case.citation));
            for e in &case.expected {
                out.push_str(&format!(
                    "  {:<14} computed {:>12.6}  expected {:>10.5} ± {:.0e}  {}\n",
                    e.quantity,
                    e.computed,
                    e.expected,
                    e.tolerance,
                    if e.passed { "ok" } else { "FAIL" }
                ));
            }
            for c in &case.claims {
                let (left, right, op) = match c.claim {
                    Claim::Less { left, right } => (left, right, "<"),
                    Claim::Close { left, right, .. } => (left, right, "≈"),
                };
                out.push_str(&format!(
                    "  {left} {op} {right}: margin {:.6}  {}\n",
                    c.margin,
                    if c.passed { "ok" } else { "FAIL" }
                ));
            }
        }
        out.push_str(if self.passed {
            "all cases passed\n"
        } else {
            "some cases FAILED\n"
        });
        out
    }
}

fn real<const N: usize>(rows: [[f64; N]; N]) -> ComplexMatrix {
    real_to_complex(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

impl PaperCase {
    fn quantities(&self) -> Result<Vec<(&'static str, f64)>> {
        Ok(match &self.inputs {
            CaseInputs::Pair { a, b } => {
                let r = pair_bounds(a, b)?;
                vec![
                    ("lemma21", r.lemma21),
                    ("lemma22", r.lemma22),
                    ("reference", r.reference),
                ]
            }
            CaseInputs::TwoByTwo { blocks: [a, b, c, d] } => {
                let r = two_by_two_bounds(a, b, c, d)?;
                let omega = numerical_radius(&BlockMatrix::two_by_two(a, b, c, d)?.assemble())?;
                let mut q = vec![("cor1", r.cor1), ("cor2", r.cor2)];
                if let Some(h) = r.hirzallah {
                    q.push(("hirzallah", h));
                }
                q.extend([("shebrawi3", r.shebrawi3), ("omega", omega)]);
                q
            }
            CaseInputs::Row { a, b } => {
                let r = row_bounds(a, b)?;
                let z_left = ComplexMatrix::zeros(b.cols(), a.cols());
                let z_right = ComplexMatrix::zeros(b.cols(), b.cols());
                let omega = numerical_radius(&BlockMatrix::two_by_two(a, b, &z_left, &z_right)?.assemble())?;
                vec![("sh1", r.sh1), ("sh2", r.sh2), ("omega", omega)]
            }
            CaseInputs::SelfBound { t } => {
                let r = self_bounds(t)?;
                vec![
                    ("omega", numerical_radius(t)?),
                    ("c7", r.c7),
                    ("c8", r.c8),
                    ("kittaneh", r.kittaneh),
                    ("norm", r.norm),
                ]
            }
            CaseInputs::Partitioned { t } => {
                let n = t.n();
                let mut radii = vec![vec![0.0; n]; n];
                for (i, row) in radii.iter_mut().enumerate() {
                    for (j, x) in row.iter_mut().enumerate() {
                        *x = numerical_radius(t.block(i, j))?;
                    }
                }
                vec![
                    ("omega", numerical_radius(&t.assemble())?),
                    ("omega_of_block_radii", numerical_radius(&real_to_complex(&radii))?),
                ]
            }
        })
    }

    pub fn evaluate(&self) -> Result<CaseReport> {
        let quantities = self.quantities()?;
        let get = |name: &str| {
            quantities
                .iter()
                .find(|(q, _)| *q == name)
                .map(|&(_, v)| v)
                .unwrap_or(f64::NAN)
        };
        let expected: Vec<ExpectedOutcome> = self
            .expected
            .iter()
            .map(|e| {
                let computed = get(e.quantity);
                ExpectedOutcome {
                    quantity: e.quantity,
                    computed,
                    expected: e.value,
                    tolerance: e.tolerance,
                    passed: (computed - e.value).abs() <= e.tolerance,
                }
            })
            .collect();
        let claims: Vec<ClaimOutcome> = self
            .claims
            .iter()
            .map(|&claim| {
                let margin = match claim {
                    Claim::Less { left, right } => get(right) - get(left),
                    Claim::Close { left, right, tolerance } => tolerance - (get(left) - get(right)).abs(),
                };
                let passed = match claim {
                    Claim::Less { .. } => margin > 0.0,
                    Claim::Close { .. } => margin >= 0.0,
                };
                ClaimOutcome { claim, margin, passed }
            })
            .collect();
        let passed = expected.iter().all(|e| e.passed) && claims.iter().all(|c| c.passed);
        Ok(CaseReport {
            id: self.id,
            citation: self.citation,
            quantities,
            expected,
            claims,
            passed,
        })
    }
}

/// Every embedded case, in reporting order.
pub fn paper_cases() -> Vec<PaperCase> {
    vec![
        PaperCase {
            id: "rem22-ex1",
            citation: "pair-bound comparison, first example: the squared-sum bound wins",
            inputs: CaseInputs::Pair {
                a: real([[4.0, 1.0], [3.0, 3.0]]),
                b: real([[4.0, 1.0], [-3.0, -1.0]]),
            },
            expected: vec![expect("lemma21", 9.567), expect("lemma22", 9.10612)],
            claims: vec![Claim::Less {
                left: "lemma22",
                right: "lemma21",
            }],
        },
        PaperCase {
            id: "rem22-ex2",
            citation: "pair-bound comparison, second example: the norm-product bound wins",
            inputs: CaseInputs::Pair {
                a: real([[2.0, 2.0], [-1.0, 2.0]]),
                b: real([[3.0, 4.0], [4.0, 1.0]]),
            },
            expected: vec![expect("lemma21", 9.02776), expect("lemma22", 9.27186)],
            claims: vec![Claim::Less {
                left: "lemma21",
                right: "lemma22",
            }],
        },
        PaperCase {
            id: "hirzallah-remark",
            citation: "2x2 operator matrix: first corollary against the max-plus-half-sum bound",
            inputs: CaseInputs::TwoByTwo {
                blocks: [
                    real([[-1.0, -2.0], [-1.0, 2.0]]),
                    real([[2.0, 1.0], [0.0, -2.0]]),
                    real([[-3.0, -1.0], [-3.0, -3.0]]),
                    real([[-2.0, 3.0], [-3.0, 0.0]]),
                ],
            },
            expected: vec![expect("hirzallah", 9.03276), expect("cor1", 6.50583)],
            claims: vec![Claim::Less {
                left: "cor1",
                right: "hirzallah",
            }],
        },
        PaperCase {
            id: "sh1-sh2-remark",
            citation: "row operator matrix [[A, B], [O, O]]: the first row bound is attained",
            inputs: CaseInputs::Row {
                a: real([[3.0, 2.0], [-1.0, -3.0]]),
                b: real([[1.0, 1.0], [1.0, -1.0]]),
            },
            expected: vec![expect("sh1", 3.19774), expect("sh2", 4.64893)],
            claims: vec![Claim::Close {
                left: "omega",
                right: "sh1",
                tolerance: PUBLISHED_TOLERANCE,
            }],
        },
        PaperCase {
            id: "shebrawi3-remark",
            citation: "2x2 operator matrix: first corollary against the identity-shifted Gram bound",
            inputs: CaseInputs::TwoByTwo {
                blocks: [
                    real([[2.0, 1.0], [-1.0, -3.0]]),
                    real([[-2.0, 0.0], [-3.0, 3.0]]),
                    real([[2.0, 1.0], [-3.0, -3.0]]),
                    real([[2.0, -3.0], [3.0, -2.0]]),
                ],
            },
            expected: vec![expect("shebrawi3", 18.454), expect("cor1", 7.41238)],
            claims: vec![Claim::Less {
                left: "cor1",
                right: "shebrawi3",
            }],
        },
        PaperCase {
            id: "kittaneh-remark",
            citation: "single operator: mixed-modulus bound against half the norm of |B| + |B*|",
            inputs: CaseInputs::SelfBound {
                t: real([[-4.0, 7.0], [-4.0, -8.0]]),
            },
            expected: vec![
                expect("omega", 8.69626),
                expect("c7", 9.74488),
                expect("kittaneh", 9.9823),
            ],
            claims: vec![
                Claim::Less {
                    left: "omega",
                    right: "c7",
                },
                Claim::Less {
                    left: "c7",
                    right: "kittaneh",
                },
            ],
        },
        PaperCase {
            id: "counterexample-4x4",
            citation: "4x4 matrix in 2x2 blocks: ω(T) exceeds ω of the matrix of blockwise radii",
            inputs: CaseInputs::Partitioned {
                t: BlockMatrix::split(
                    &real([
                        [-3.0, 2.0, -1.0, -1.0],
                        [-2.0, 2.0, 3.0, -1.0],
                        [-2.0, 3.0, 3.0, -2.0],
                        [1.0, 1.0, 0.0, -2.0],
                    ]),
                    &[2, 2],
                )
                .expect("4 = 2 + 2"),
            },
            expected: Vec::new(),
            claims: vec![Claim::Less {
                left: "omega_of_block_radii",
                right: "omega",
            }],
        },
    ]
}

pub fn run_repro() -> Result<ReproReport> {
    let cases = paper_cases()
        .iter()
        .map(PaperCase::evaluate)
        .collect::<Result<Vec<_>>>()?;
    let passed = cases.iter().all(|c| c.passed);
    Ok(ReproReport { cases, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_have_unique_ids_and_tolerances() {
        let cases = paper_cases();
        let mut ids: Vec<_> = cases.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cases.len());
        for c in &cases {
            assert!(!c.citation.is_empty());
            assert!(c.expected.iter().all(|e| e.tolerance == PUBLISHED_TOLERANCE));
        }
    }

    #[test]
    fn self_bound_case_orders_strictly() {
        let case = paper_cases().into_iter().find(|c| c.id == "kittaneh-remark").unwrap();
        let r = case.evaluate().unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.quantity("omega").unwrap() < r.quantity("c7").unwrap());
    }

    #[test]
    fn counterexample_margin_is_positive() {
        let case = paper_cases()
            .into_iter()
            .find(|c| c.id == "counterexample-4x4")
            .unwrap();
        let r = case.evaluate().unwrap();
        assert!(r.claims[0].margin > 0.01, "{r:?}");
    }

    #[test]
    fn missing_quantity_fails_rather_than_passes() {
        let mut case = paper_cases().remove(0);
        case.expected.push(expect("nonexistent", 0.0));
        assert!(!case.evaluate().unwrap().passed);
    }
}
