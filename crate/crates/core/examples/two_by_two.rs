//! The 2x2 corollary bounds and the row bounds on small examples.

use numrad::bounds::{row_bounds, two_by_two_bounds};
use numrad::matcore::{BlockMatrix, ComplexMatrix};
use numrad::spectra::numerical_radius;

fn m(rows: [[f64; 2]; 2]) -> ComplexMatrix {
    ComplexMatrix::real_rows(&rows).expect("finite")
}

fn main() -> numrad::Result<()> {
    let a = m([[-1.0, -2.0], [-1.0, 2.0]]);
    let b = m([[2.0, 1.0], [0.0, -2.0]]);
    let c = m([[-3.0, -1.0], [-3.0, -3.0]]);
    let d = m([[-2.0, 3.0], [-3.0, 0.0]]);
    let r = two_by_two_bounds(&a, &b, &c, &d)?;
    let w = numerical_radius(&BlockMatrix::two_by_two(&a, &b, &c, &d)?.assemble())?;
    println!("ω = {w:.5}");
    println!("cor1 = {:.5}  cor2 = {:.5}", r.cor1, r.cor2);
    println!("hirzallah = {:.5?}  shebrawi3 = {:.5}", r.hirzallah, r.shebrawi3);

    let a = m([[3.0, 2.0], [-1.0, -3.0]]);
    let b = m([[1.0, 1.0], [1.0, -1.0]]);
    let z = ComplexMatrix::zeros(2, 2);
    let row = row_bounds(&a, &b)?;
    let w = numerical_radius(&BlockMatrix::two_by_two(&a, &b, &z, &z)?.assemble())?;
    println!("row: ω = {w:.5}  sh1 = {:.5}  sh2 = {:.5}", row.sh1, row.sh2);
    Ok(())
}
