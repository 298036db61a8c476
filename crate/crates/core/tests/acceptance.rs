//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::Command;

use numrad::spectra::spectral_radius;
use numrad::verify::{oracle_spectral_radius, sample, GenSpec, SampleKind};
use serde_json::Value;

const TOL: f64 = 5e-3;

struct Gate {
    failed: usize,
}

impl Gate {
    fn record(&mut self, id: u32, title: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("criterion {id} PASS  {title}: {detail}"),
            Err(detail) => {
                self.failed += 1;
                println!("criterion {id} FAIL  {title}: {detail}");
            }
        }
    }
}

fn numrad(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_numrad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn case<'a>(repro: &'a Value, id: &str) -> &'a Value {
    repro["cases"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["id"] == id))
        .unwrap_or_else(|| panic!("case {id} missing"))
}

fn quantity(case: &Value, name: &str) -> f64 {
    case["quantities"]
        .as_array()
        .and_then(|qs| qs.iter().find(|q| q[0] == name))
        .and_then(|q| q[1].as_f64())
        .unwrap_or(f64::NAN)
}

/// Compare named quantities against published values within `TOL`.
fn expect_all(case: &Value, expected: &[(&str, f64)]) -> Result<String, String> {
    let mut lines = Vec::new();
    let mut ok = true;
    for &(name, value) in expected {
        let got = quantity(case, name);
        let pass = (got - value).abs() <= TOL;
        ok &= pass;
        lines.push(format!(
            "{name} {got:.5} vs {value}{}",
            if pass { "" } else { " (out of tolerance)" }
        ));
    }
    let text = lines.join(", ");
    if ok {
        Ok(text)
    } else {
        Err(text)
    }
}

fn and(a: Result<String, String>, b: Result<String, String>) -> Result<String, String> {
    match (a, b) {
        (Ok(x), Ok(y)) => Ok(format!("{x}; {y}")),
        (Ok(x) | Err(x), Ok(y) | Err(y)) => Err(format!("{x}; {y}")),
    }
}

fn strictly_less(case: &Value, left: &str, right: &str, min_margin: f64) -> Result<String, String> {
    let margin = quantity(case, right) - quantity(case, left);
    let text = format!("{left} < {right} by {margin:.6}");
    if margin > min_margin {
        Ok(text)
    } else {
        Err(text)
    }
}

fn main() {
    let mut gate = Gate { failed: 0 };

    let out = numrad(&["repro", "--json"]);
    let repro: Value = serde_json::from_slice(&out.stdout).expect("repro --json prints JSON");

    let ex1 = case(&repro, "rem22-ex1");
    let ex2 = case(&repro, "rem22-ex2");
    gate.record(
        1,
        "pair bounds on both comparison datasets",
        and(
            expect_all(ex1, &[("lemma21", 9.567), ("lemma22", 9.10612)]),
            expect_all(ex2, &[("lemma21", 9.02776), ("lemma22", 9.27186)]),
        ),
    );

    let c = case(&repro, "hirzallah-remark");
    gate.record(
        2,
        "first 2x2 corollary against max-plus-half-sum",
        expect_all(c, &[("hirzallah", 9.03276), ("cor1", 6.50583)]),
    );

    let c = case(&repro, "sh1-sh2-remark");
    let equality = {
        let (w, sh1) = (quantity(c, "omega"), quantity(c, "sh1"));
        let text = format!("ω([[A, B], [O, O]]) {w:.5} vs sh1 {sh1:.5}");
        if (w - sh1).abs() <= TOL {
            Ok(text)
        } else {
            Err(text)
        }
    };
    gate.record(
        3,
        "row bounds and attained equality",
        and(expect_all(c, &[("sh1", 3.19774), ("sh2", 4.64893)]), equality),
    );

    let c = case(&repro, "shebrawi3-remark");
    gate.record(
        4,
        "identity-shifted Gram bound against first corollary",
        expect_all(c, &[("shebrawi3", 18.454), ("cor1", 7.41238)]),
    );

    let c = case(&repro, "kittaneh-remark");
    gate.record(
        5,
        "single-operator bounds with strict ordering",
        and(
            expect_all(c, &[("omega", 8.69626), ("c7", 9.74488), ("kittaneh", 9.9823)]),
            and(
                strictly_less(c, "omega", "c7", 0.0),
                strictly_less(c, "c7", "kittaneh", 0.0),
            ),
        ),
    );

    let c = case(&repro, "counterexample-4x4");
    gate.record(
        6,
        "blockwise radii do not bound ω",
        strictly_less(c, "omega_of_block_radii", "omega", 0.0),
    );

    let out = numrad(&["verify", "--trials", "1000", "--dims", "2:5", "--seed", "42"]);
    let verify = match serde_json::from_slice::<Value>(&out.stdout) {
        Ok(report) => {
            let failures = report["failures"].as_array().map_or(usize::MAX, Vec::len);
            let checks = report["stats"].as_object().map_or(0, |s| s.len());
            let text = format!("exit {:?}, {failures} failures over {checks} checks", out.status.code());
            if out.status.success() && failures == 0 {
                Ok(text)
            } else {
                Err(text)
            }
        }
        Err(e) => Err(format!("exit {:?}, unparsable report: {e}", out.status.code())),
    };
    gate.record(7, "verify --trials 1000 --dims 2:5 --seed 42", verify);

    let mut worst: f64 = 0.0;
    let mut errors = 0;
    for k in 0..500u64 {
        let side = 1 + (k % 6) as usize;
        let a = sample(&GenSpec::square(SampleKind::ComplexGaussian, side, 1000 + k))
            .ok()
            .and_then(|s| s.into_matrix())
            .expect("square gaussian sample");
        match (spectral_radius(&a), oracle_spectral_radius(&a)) {
            (Ok(r), Ok(o)) => worst = worst.max((r - o).abs() / r.abs().max(o.abs()).max(1.0)),
            _ => errors += 1,
        }
    }
    let text = format!("worst relative difference {worst:.2e} over 500 matrices, {errors} errors");
    gate.record(
        8,
        "spectral radius against characteristic-polynomial oracle",
        if worst <= 1e-6 && errors == 0 {
            Ok(text)
        } else {
            Err(text)
        },
    );

    gate.record(
        9,
        "pair bounds are incomparable",
        and(
            strictly_less(ex2, "lemma21", "lemma22", 0.1),
            strictly_less(ex1, "lemma22", "lemma21", 0.1),
        ),
    );

    println!("{} of 9 criteria failed", gate.failed);
    if gate.failed > 0 {
        std::process::exit(1);
    }
}
