//! Compare the two pair bounds on |<Ax,y>| + |<By,x>|: neither dominates.

use numrad::bounds::pair_bounds;
use numrad::matcore::{BlockMatrix, ComplexMatrix};
use numrad::spectra::numerical_radius;

fn main() -> numrad::Result<()> {
    let data = [
        ([[4.0, 1.0], [3.0, 3.0]], [[4.0, 1.0], [-3.0, -1.0]]),
        ([[2.0, 2.0], [-1.0, 2.0]], [[3.0, 4.0], [4.0, 1.0]]),
    ];
    for (a, b) in data {
        let a = ComplexMatrix::real_rows(&a)?;
        let b = ComplexMatrix::real_rows(&b)?;
        let r = pair_bounds(&a, &b)?;
        let z = ComplexMatrix::zeros(2, 2);
        let sup = 2.0 * numerical_radius(&BlockMatrix::two_by_two(&z, &b, &a, &z)?.assemble())?;
        println!(
            "sup = {sup:.5}  lemma21 = {:.5}  lemma22 = {:.5}  reference = {:.5}",
            r.lemma21, r.lemma22, r.reference
        );
    }
    Ok(())
}
