//! Independent checks for the graded computations.
//!
//! - [`pham_enumerate`] lists eigenvalue tuples of Brieskorn–Pham sums
//!   directly, without the join.
//! - [`tensor_tor_resolution`] computes `⊗` and `Tor` as homology of
//!   tensored free resolutions instead of the gcd formulas.
//! - [`milnor_groebner`] counts standard monomials of the Jacobian ideal,
//!   and [`check_isolated`] tests that ideal for zero-dimensionality.

mod enumerate;
mod groebner;
mod milnor;
mod poly;
mod resolution;

pub use enumerate::{pham_enumerate, DEFAULT_ENUMERATION_BOUND};
pub use groebner::{groebner_basis, leading_monomials, reduce};
pub use milnor::{check_isolated, milnor_groebner};
pub use poly::{degrevlex, Monomial, Poly};
pub use resolution::tensor_tor_resolution;
