//! How often the first 2x2 corollary beats the max-plus-half-sum bound on
//! random square blocks. An observation, not a theorem.
//!
//! cargo run --example cor1_vs_hirzallah -- [trials] [seed]

use numrad::verify::compare_cor1_hirzallah;

fn main() -> numrad::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(500);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let s = compare_cor1_hirzallah(trials, (1, 4), seed)?;
    println!("cor1 <= hirzallah in {}/{} trials", s.cor1_better, s.trials);
    println!("largest cor1 - hirzallah: {:.6}", s.max_excess);
    Ok(())
}
