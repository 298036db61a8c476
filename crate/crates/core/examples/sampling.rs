//! Deterministic sample families and the polynomial-root spectral-radius
//! oracle.

use numrad::spectra::spectral_radius;
use numrad::verify::{oracle_spectral_radius, sample, GenSpec, SampleKind};

fn main() -> numrad::Result<()> {
    for kind in SampleKind::ALL {
        let spec = match kind {
            SampleKind::UnitVector => GenSpec::vector(4, 9),
            _ => GenSpec::square(kind, 4, 9),
        };
        match sample(&spec)? {
            numrad::verify::Sample::Matrix(m) => println!(
                "{kind:<17} r = {:.9}  oracle = {:.9}",
                spectral_radius(&m)?,
                oracle_spectral_radius(&m)?
            ),
            numrad::verify::Sample::Vector(v) => println!("{kind:<17} ‖x‖ = {:.15}", v.norm()),
        }
    }
    Ok(())
}
