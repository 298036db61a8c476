//! Single-operator bounds: ω(T) ≤ c8 ≤ c7 ≤ ‖T‖, and the comparison with
//! half the norm of |T| + |T*|.

use numrad::bounds::self_bounds;
use numrad::matcore::ComplexMatrix;
use numrad::spectra::numerical_radius;

fn main() -> numrad::Result<()> {
    for rows in [
        [[-4.0, 7.0], [-4.0, -8.0]],
        [[0.0, 1.0], [0.0, 0.0]],
        [[1.0, 3.0], [0.0, 2.0]],
    ] {
        let t = ComplexMatrix::real_rows(&rows)?;
        let r = self_bounds(&t)?;
        println!(
            "ω = {:.5}  c8 = {:.5}  c7 = {:.5}  kittaneh = {:.5}  ‖T‖ = {:.5}",
            numerical_radius(&t)?,
            r.c8,
            r.c7,
            r.kittaneh,
            r.norm
        );
    }
    Ok(())
}
