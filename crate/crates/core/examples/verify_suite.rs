//! Run the seeded property suite and print per-check gap statistics.
//!
//! cargo run --example verify_suite -- [trials] [seed]

use numrad::verify::{run_suite, SuiteConfig};

fn main() -> numrad::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);

    let start = std::time::Instant::now();
    let report = run_suite(&SuiteConfig::all_checks(trials, (2, 5), seed))?;
    println!("{trials} trials in {:.2?}", start.elapsed());
    for (name, s) in &report.statistics {
        println!(
            "{name:<26} min gap {:>12.3e}  mean gap {:>12.3e}",
            s.min_gap, s.mean_gap
        );
    }
    println!("{} failures", report.failures.len());
    for f in report.failures.iter().take(10) {
        println!("  {} gap {:.3e} seed {}", f.name, f.gap, f.seed);
    }
    Ok(())
}
