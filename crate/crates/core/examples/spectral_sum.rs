//! Numerical-radius bounds on the spectral radius of Σ A_i B_i.

use numrad::bounds::spectral_sum_bounds;
use numrad::verify::{sample, GenSpec, SampleKind};

fn main() -> numrad::Result<()> {
    let gen = |rows, cols, seed| {
        let spec = GenSpec {
            kind: SampleKind::ComplexGaussian,
            rows,
            cols,
            seed,
        };
        sample(&spec).map(|s| s.into_matrix().expect("matrix kind"))
    };
    let a = vec![gen(4, 2, 1)?, gen(4, 3, 2)?, gen(4, 1, 3)?];
    let b = vec![gen(2, 4, 4)?, gen(3, 4, 5)?, gen(1, 4, 6)?];
    let r = spectral_sum_bounds(&a, &b)?;
    println!("r(Σ A_i B_i) = {:.6}", r.r_direct);
    println!("ω(gamma)     = {:.6}", r.omega_gamma);
    println!("ω(lambda)    = {:.6}", r.omega_lambda);
    Ok(())
}
