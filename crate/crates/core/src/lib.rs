//! Numerical radius, operator norm and spectral radius of complex matrices,
//! together with upper bounds for operator matrices and a seeded suite that
//! checks them.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod matcore;
pub mod repro;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
