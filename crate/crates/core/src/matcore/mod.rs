//! Dense complex matrices, vectors, block operator matrices and their JSON formats.

mod block;
pub mod io;
mod matrix;
mod vector;

pub use block::{assemble, BlockMatrix};
pub use matrix::{ComplexMatrix, C64};
pub use vector::{inner_product, ComplexVector};

pub fn adjoint(a: &ComplexMatrix) -> ComplexMatrix {
    a.adjoint()
}

pub fn real_part(a: &ComplexMatrix) -> crate::Result<ComplexMatrix> {
    a.real_part()
}

pub fn matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> crate::Result<ComplexMatrix> {
    a.matmul(b)
}
