//! Bounds for an n x n operator matrix from its blocks, against ω of the
//! assembled matrix.
//!
//! cargo run --example block_bounds [block.json]

use numrad::bounds::block_bounds;
use numrad::matcore::{io::read_block, BlockMatrix, ComplexMatrix};
use numrad::spectra::numerical_radius;

fn main() -> numrad::Result<()> {
    let t = match std::env::args().nth(1) {
        Some(path) => read_block(path)?,
        None => {
            let t = ComplexMatrix::real_rows(&[
                [-3.0, 2.0, -1.0, -1.0, 0.0],
                [-2.0, 2.0, 3.0, -1.0, 1.0],
                [-2.0, 3.0, 3.0, -2.0, 0.5],
                [1.0, 1.0, 0.0, -2.0, 2.0],
                [0.0, -1.0, 1.0, 0.5, 1.0],
            ])?;
            BlockMatrix::split(&t, &[2, 2, 1])?
        }
    };
    let r = block_bounds(&t)?;
    println!("ω(T)           = {:.6}", numerical_radius(&t.assemble())?);
    println!("ω(alpha)       = {:.6}", r.omega_alpha);
    println!("ω(beta)        = {:.6}", r.omega_beta);
    println!("ω(abu_omar)    = {:.6}", r.omega_abu_omar);
    println!("‖hou‖          = {:.6}", r.omega_hou);
    println!("alpha = {:.4?}", r.alpha);
    Ok(())
}
