//! Exact rational computations with slices, decomposition classes and
//! residual groups in `gl_n` and `sl_n`.

pub mod atlas;
pub mod classes;
pub mod cli;
pub mod error;
pub mod hamiltonian;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod random;
pub mod residual;
pub mod roots;
pub mod slices;
pub mod verify;

pub use error::{LieError, Result};
