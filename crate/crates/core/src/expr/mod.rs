//! Input language: atom expressions and polynomials.
//!
//! ```text
//! expr  := func | poly
//! func  := "join(" expr "," expr ")" | "suspend(" expr "," int ")"
//!        | "pow(" int ")" | "quad(" int ")" | "pham(" int ("," int)* ")"
//!        | "atom(" "\"" name "\"" ")"
//! poly  := ["+"|"-"] term (("+"|"-") term)*
//! term  := factor (["*"] factor)*
//! factor:= int ["/" int] | ident ["^" int]
//! ```

mod ast;
mod parse;

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

pub use ast::Expr;
pub use parse::{parse, parse_poly, ParseError, ParseErrorKind};

use crate::atoms::{pham, pow, quad, AtomRegistry};
use crate::graded::{join, suspend, VanishingData};
use crate::oracle::Poly;
use crate::{Error, Result};

/// Variable-disjoint summands of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub summands: Vec<Poly>,
}

/// Splits `p` into summands over pairwise disjoint variable sets: the
/// connected components of the graph on variables where each monomial links
/// the variables it contains. Summands come in order of their first
/// variable, each over its own variables only.
pub fn split_disjoint(p: &Poly) -> Result<SplitResult> {
    let p = p.prune();
    if p.is_zero() {
        return Err(Error::domain("cannot split the zero polynomial"));
    }
    if !p.constant_term().is_zero() {
        return Err(Error::NotVanishingAtOrigin(p.to_string()));
    }
    let n = p.variables().len();

    // union-find over variable indices
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for m in p.terms().keys() {
        let mut used = (0..n).filter(|&i| m[i] > 0);
        if let Some(first) = used.next() {
            for other in used {
                let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                parent[a.max(b)] = a.min(b);
            }
        }
    }

    let mut components: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        components.entry(root).or_default().push(i);
    }
    let summands = components
        .into_values()
        .map(|vars| {
            let terms = p
                .terms()
                .iter()
                .filter(|(m, _)| vars.iter().any(|&i| m[i] > 0))
                .map(|(m, c)| (m.clone(), c.clone()));
            Poly::from_terms(p.variables().to_vec(), terms).restrict(&vars)
        })
        .collect();
    Ok(SplitResult { summands })
}

/// Exponents of a polynomial whose split summands are all `c * x^a`.
pub(crate) fn pure_power_exponents(p: &Poly) -> Result<Vec<i64>> {
    split_disjoint(p)?
        .summands
        .iter()
        .map(|s| {
            let single = s.num_terms() == 1 && s.variables().len() == 1;
            match s.terms().keys().next() {
                Some(m) if single => Ok(m[0] as i64),
                _ => Err(Error::UnsupportedSummand(s.to_string())),
            }
        })
        .collect()
}

/// Evaluates an expression to vanishing data. Polynomials must split into
/// pure powers `c * x^a`; the coefficients do not affect the result.
pub fn eval(e: &Expr, atoms: &AtomRegistry) -> Result<VanishingData> {
    match e {
        Expr::Join(a, b) => Ok(join(&eval(a, atoms)?, &eval(b, atoms)?)),
        Expr::Suspend(inner, m) => suspend(&eval(inner, atoms)?, *m),
        Expr::Pow(a) => pow(*a),
        Expr::Quad(m) => quad(*m),
        Expr::Pham(list) => pham(list),
        Expr::AtomRef(name) => atoms.resolve(name).cloned(),
        Expr::PolyLiteral(p) => pham(&pure_power_exponents(p)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;

    fn poly(src: &str) -> Poly {
        parse_poly(src).unwrap()
    }

    fn shown(r: &SplitResult) -> Vec<String> {
        r.summands.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn split_examples() {
        assert_eq!(shown(&split_disjoint(&poly("x^2 + y^3")).unwrap()), ["x^2", "y^3"]);
        assert_eq!(
            shown(&split_disjoint(&poly("x^2 + x*y + y^3")).unwrap()),
            ["y^3 + x^2 + x*y"]
        );
        let r = split_disjoint(&poly("x1^2 + x2^3 + y*z + y^2")).unwrap();
        assert_eq!(shown(&r), ["x1^2", "x2^3", "y^2 + y*z"]);
        assert_eq!(r.summands[2].variables(), ["y", "z"]);
    }

    #[test]
    fn split_rejects_constant_and_zero() {
        assert!(matches!(split_disjoint(&poly("x^2 + 1")), Err(Error::NotVanishingAtOrigin(_))));
        assert!(matches!(split_disjoint(&poly("x - x")), Err(Error::Domain(_))));
    }

    #[test]
    fn eval_examples() {
        let reg = AtomRegistry::new();
        let e = |s: &str| eval(&parse(s).unwrap(), &reg);
        assert_eq!(e("x^2+y^3").unwrap(), pham(&[2, 3]).unwrap());
        assert_eq!(e("join(quad(1), quad(1))").unwrap(), quad(2).unwrap());
        assert!(matches!(e("x^2 + x*y"), Err(Error::UnsupportedSummand(s)) if s == "x^2 + x*y"));
        assert_eq!(e("-7*b^5 + 1/3*a^2").unwrap(), pham(&[2, 5]).unwrap());
        assert!(matches!(e("atom(\"nope\")"), Err(Error::UnknownAtom(_))));
        assert!(matches!(e("x + y^2"), Err(Error::Domain(_))));
    }

    #[test]
    fn brieskorn_exponents() {
        let e = parse("suspend(join(pham(3,4), x^5), 2)").unwrap();
        assert_eq!(e.brieskorn_exponents(), Some(alloc::vec![3, 4, 5, 2, 2]));
        assert_eq!(parse("join(atom(\"a\"), pow(2))").unwrap().brieskorn_exponents(), None);
        assert_eq!(parse("x^2*y").unwrap().brieskorn_exponents(), None);
    }
}
