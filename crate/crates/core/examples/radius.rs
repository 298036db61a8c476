//! Numerical radius, operator norm and spectral radius of a few matrices.
//!
//! cargo run --example radius [matrix.json]

use numrad::matcore::{io::read_matrix, ComplexMatrix, C64};
use numrad::spectra::spectral_summary;

fn main() -> numrad::Result<()> {
    if let Some(path) = std::env::args().nth(1) {
        let a = read_matrix(path)?;
        println!("{:#?}", spectral_summary(&a)?);
        return Ok(());
    }

    let cases = [
        ("identity", ComplexMatrix::identity(3)),
        ("jordan", ComplexMatrix::real_rows(&[[0.0, 1.0], [0.0, 0.0]])?),
        ("rotation", ComplexMatrix::real_rows(&[[0.0, -1.0], [1.0, 0.0]])?),
        (
            "complex",
            ComplexMatrix::from_rows(&[
                vec![C64::new(1.0, 1.0), C64::new(2.0, 0.0)],
                vec![C64::new(0.0, -1.0), C64::new(-1.0, 0.5)],
            ])?,
        ),
    ];
    println!("{:<10} {:>10} {:>10} {:>10}", "matrix", "ω", "‖·‖", "r");
    for (name, a) in cases {
        let s = spectral_summary(&a)?;
        println!(
            "{name:<10} {:>10.6} {:>10.6} {:>10.6}",
            s.numerical_radius, s.operator_norm, s.spectral_radius
        );
    }
    Ok(())
}
