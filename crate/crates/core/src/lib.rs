//! Exact computation of the vanishing cohomology of Thom–Sebastiani sums.
//!
//! The integral vanishing cohomology of `f(x) + g(y)` at a point is assembled
//! from the data of `f` and `g` alone: graded tensor products plus a
//! degree-shifted Tor term, with monodromy eigenvalues adding modulo one.
//! This crate carries the arithmetic for that (finitely generated abelian
//! groups, graded pieces with root-of-unity eigenvalues, characteristic
//! polynomials, zeta functions), the standard atoms, independent oracles
//! (tuple enumeration, free resolutions, Gröbner bases) and the expression
//! language. It is `no_std` and only needs `alloc`.
//!
//! ```
//! use sebthom_core::{atoms, graded};
//!
//! let trefoil = graded::join(&atoms::pow(2).unwrap(), &atoms::pow(3).unwrap());
//! assert_eq!(graded::total_rank(&trefoil), 2);
//! assert_eq!(graded::char_poly(&trefoil, 2).expanded_string().unwrap(), "t^2 - t + 1");
//! ```

#![no_std]

extern crate alloc;

pub mod abgroup;
pub mod atoms;
mod error;
pub mod expr;
pub mod graded;
pub mod oracle;

pub use abgroup::{FgAbGroup, IntMatrix};
pub use atoms::{AtomDef, AtomRegistry};
pub use error::{Error, Result};
pub use expr::{Expr, ParseError};
pub use graded::{CycloFactorization, GradedPiece, RootOfUnity, VanishingData, Zeta};
pub use oracle::Poly;
