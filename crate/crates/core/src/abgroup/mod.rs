//! Finitely generated abelian groups in invariant factor form.
//!
//! [`tensor`] and [`tor`] use the closed gcd formulas; the resolution-based
//! oracle in [`crate::oracle`] recomputes both from presentations.

mod group;
mod matrix;

pub use group::{direct_sum, from_presentation, tensor, tor, FgAbGroup};
pub use matrix::{snf, IntMatrix};
