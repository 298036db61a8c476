//! Recompute the embedded reference values and print the comparison table.

fn main() -> numrad::Result<()> {
    let report = numrad::repro::run_repro()?;
    print!("{}", report.table());
    if !report.passed {
        eprintln!("out of tolerance: {:?}", report.failed_ids());
    }
    Ok(())
}
