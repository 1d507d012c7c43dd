use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent vector, one entry per variable of the owning polynomial.
pub type Monomial = Vec<u32>;

/// Graded reverse lexicographic order, variables ranked in list order.
pub fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Multivariate polynomial with rational coefficients.
///
/// Zero coefficients are never stored. Equality compares the variable list
/// too, so `x` over `[x]` and `x` over `[x, y]` differ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    variables: Vec<String>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(variables: Vec<String>) -> Self {
        Poly {
            variables,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial; like terms are combined and zeros dropped.
    /// Panics if an exponent vector has the wrong length.
    pub fn from_terms<I>(variables: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(variables);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: BigRational) {
        assert_eq!(
            monomial.len(),
            self.variables.len(),
            "exponent vector length differs from variable count"
        );
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> BigRational {
        let zero = vec![0; self.variables.len()];
        self.terms.get(&zero).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Variables that occur with positive exponent in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.variables.len())
            .filter(|&i| self.terms.keys().any(|m| m[i] > 0))
            .collect()
    }

    /// Restricts the variable list to `keep` (indices, in the new order).
    /// Terms using a dropped variable panic; callers pass a superset of the
    /// support.
    pub fn restrict(&self, keep: &[usize]) -> Poly {
        let variables = keep.iter().map(|&i| self.variables[i].clone()).collect();
        let terms = self.terms.iter().map(|(m, c)| {
            debug_assert!(
                (0..m.len()).all(|i| m[i] == 0 || keep.contains(&i)),
                "restrict drops a variable in use"
            );
            (keep.iter().map(|&i| m[i]).collect(), c.clone())
        });
        Poly::from_terms(variables, terms)
    }

    /// Drops variables that no term uses.
    pub fn prune(&self) -> Poly {
        self.restrict(&self.support())
    }

    pub fn partial(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.variables.clone());
        for (m, c) in &self.terms {
            if m[var] == 0 {
                continue;
            }
            let mut d = m.clone();
            d[var] -= 1;
            out.add_term(d, c * BigRational::from_integer(BigInt::from(m[var])));
        }
        out
    }

    /// Leading monomial and coefficient under degrevlex.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| degrevlex(a, b))
    }

    /// Terms in decreasing degrevlex order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|(a, _), (b, _)| degrevlex(b, a));
        t
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                Poly {
                    variables: self.variables.clone(),
                    terms: self.terms.iter().map(|(m, c)| (m.clone(), c * &inv)).collect(),
                }
            }
        }
    }

    /// Sum of two polynomials over the same variable list.
    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.variables, other.variables, "variable lists differ");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Renames variables by position.
    pub fn with_variables(&self, variables: Vec<String>) -> Poly {
        assert_eq!(variables.len(), self.variables.len());
        Poly {
            variables,
            terms: self.terms.clone(),
        }
    }

    /// Re-embeds into a larger variable list given by name. Every current
    /// variable must appear in `variables`.
    pub fn embed(&self, variables: &[String]) -> Poly {
        let index: Vec<usize> = self
            .variables
            .iter()
            .map(|v| {
                variables
                    .iter()
                    .position(|w| w == v)
                    .expect("embedding target lacks a variable")
            })
            .collect();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; variables.len()];
            for (i, &k) in m.iter().enumerate() {
                e[index[i]] = k;
            }
            (e, c.clone())
        });
        Poly::from_terms(variables.to_vec(), terms)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Terms in decreasing degrevlex order, e.g. `3/2*x^2*y - y^3 + 1`. The zero
/// polynomial prints as `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let is_const = m.iter().all(|&e| e == 0);
            let mut need_star = false;
            if is_const || !mag.is_one() {
                write_rational(f, &mag)?;
                need_star = true;
            }
            for (v, &e) in self.variables.iter().zip(m) {
                if e == 0 {
                    continue;
                }
                if need_star {
                    f.write_str("*")?;
                }
                f.write_str(v)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                need_star = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({self})", self.variables.join(","))
    }
}
