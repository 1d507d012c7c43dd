use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::groebner::{divides, groebner_basis, leading_monomials};
use super::poly::{Monomial, Poly};
use crate::{Error, Result};

fn jacobian(f: &Poly) -> Vec<Poly> {
    (0..f.variables().len()).map(|i| f.partial(i)).collect()
}

/// For each variable, the least `e` with `x^e` among the leading
/// monomials, or `None` if that variable has no pure power.
fn pure_power_bounds(lms: &[Monomial], nvars: usize) -> Vec<Option<u32>> {
    (0..nvars)
        .map(|i| {
            lms.iter()
                .filter(|m| m.iter().enumerate().all(|(j, &e)| j == i || e == 0))
                .map(|m| m[i])
                .min()
        })
        .collect()
}

/// Whether the Jacobian ideal of `f` is zero-dimensional, i.e. `f` has
/// finitely many critical points in affine space.
pub fn check_isolated(f: &Poly) -> bool {
    let f = f.prune();
    let n = f.variables().len();
    let lms = leading_monomials(&groebner_basis(&jacobian(&f)));
    pure_power_bounds(&lms, n).iter().all(Option::is_some)
}

/// Milnor number `dim_Q Q[x]/(∂f/∂x1, …, ∂f/∂xn)`, counted as the standard
/// monomials of a Gröbner basis of the Jacobian ideal.
///
/// The quotient is global: if `f` has critical points away from the origin
/// their contributions are included.
pub fn milnor_groebner(f: &Poly) -> Result<u64> {
    let f = f.prune();
    if f.is_zero() {
        return Err(Error::domain("the zero polynomial has no isolated critical point"));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::NotVanishingAtOrigin(f.to_string()));
    }
    let n = f.variables().len();
    let lms = leading_monomials(&groebner_basis(&jacobian(&f)));
    let bounds: Vec<u32> = pure_power_bounds(&lms, n)
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::NonIsolated(f.to_string()))?;

    // Count exponent vectors in the box below the pure powers that no
    // leading monomial divides.
    let mut count = 0u64;
    let mut e: Monomial = vec![0; n];
    if bounds.contains(&0) {
        return Ok(0);
    }
    loop {
        if !lms.iter().any(|m| divides(m, &e)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use num_rational::BigRational;

    fn poly(vars: &[&str], terms: &[(i64, &[u32])]) -> Poly {
        Poly::from_terms(
            vars.iter().map(|s| String::from(*s)).collect(),
            terms
                .iter()
                .map(|(c, m)| (m.to_vec(), BigRational::from_integer((*c).into()))),
        )
    }

    #[test]
    fn milnor_examples() {
        let f = poly(&["x", "y"], &[(1, &[3, 0]), (1, &[0, 3])]);
        assert_eq!(milnor_groebner(&f).unwrap(), 4);
        let f = poly(&["x", "y", "z"], &[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2])]);
        assert_eq!(milnor_groebner(&f).unwrap(), 1);
        let f = poly(&["x", "y"], &[(1, &[2, 1])]);
        assert!(matches!(milnor_groebner(&f), Err(Error::NonIsolated(_))));
    }

    #[test]
    fn milnor_of_powers() {
        for a in 2..=10u32 {
            let f = poly(&["x"], &[(1, &[a])]);
            assert_eq!(milnor_groebner(&f).unwrap(), (a - 1) as u64);
        }
    }

    #[test]
    fn smooth_point_has_zero_milnor_number() {
        let f = poly(&["x", "y"], &[(1, &[1, 0]), (1, &[0, 2])]);
        assert_eq!(milnor_groebner(&f).unwrap(), 0);
        assert!(check_isolated(&f));
    }

    #[test]
    fn nonzero_constant_rejected() {
        let f = poly(&["x"], &[(1, &[2]), (1, &[0])]);
        assert!(matches!(milnor_groebner(&f), Err(Error::NotVanishingAtOrigin(_))));
    }

    #[test]
    fn isolated_examples() {
        assert!(check_isolated(&poly(&["x", "y"], &[(1, &[2, 0]), (1, &[0, 3])])));
        assert!(!check_isolated(&poly(&["x", "y"], &[(1, &[2, 2])])));
        // x^3 + x*y^3 is E7-like: Jacobian (3x^2 + y^3, 3xy^2)
        let e7 = poly(&["x", "y"], &[(1, &[3, 0]), (1, &[1, 3])]);
        assert!(check_isolated(&e7));
        assert_eq!(milnor_groebner(&e7).unwrap(), 7);
    }

    #[test]
    fn thom_sebastiani_product() {
        // (x^3 + x*y^3) + (z^2 + w^4): 7 * 3
        let f = poly(
            &["w", "x", "y", "z"],
            &[(1, &[0, 3, 0, 0]), (1, &[0, 1, 3, 0]), (1, &[0, 0, 0, 2]), (1, &[4, 0, 0, 0])],
        );
        assert_eq!(milnor_groebner(&f).unwrap(), 21);
    }

    #[test]
    fn quadratic_mixing() {
        // x^2 + x*y + y^3: Morse at the origin and again at (-1/12, 1/6);
        // the global count sees both.
        let f = poly(&["x", "y"], &[(1, &[2, 0]), (1, &[1, 1]), (1, &[0, 3])]);
        assert_eq!(milnor_groebner(&f).unwrap(), 2);
    }
}
