//! Graded vanishing cohomology with monodromy eigenvalues, and the
//! operations on it: join, suspension, characteristic polynomials and zeta
//! functions.

mod cyclo;
mod data;
mod root;

pub use cyclo::{char_poly, cyclotomic, poly_string, zeta, CycloFactorization, Zeta};
pub use data::{equal, join, suspend, total_rank, GradedPiece, VanishingData};
pub use root::{Eigenvalues, RootOfUnity};
