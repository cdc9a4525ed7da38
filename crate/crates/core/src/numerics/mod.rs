//! Numerical kernels shared by the spectral checks.

mod diff;
mod quadrature;
mod richardson;
mod tridiag;

pub use diff::second_derivative;
pub use quadrature::{gauss_legendre, integrate};
pub use richardson::richardson;
pub use tridiag::{sturm_count, tridiag_eigen, Tridiagonal};
