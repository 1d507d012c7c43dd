use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::oracle::Poly;

/// Parsed input: a compositional expression over atoms, or a raw
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Join(Box<Expr>, Box<Expr>),
    Suspend(Box<Expr>, i64),
    Pow(i64),
    Quad(i64),
    Pham(Vec<i64>),
    AtomRef(String),
    PolyLiteral(Poly),
}

impl Expr {
    pub fn join(a: Expr, b: Expr) -> Expr {
        Expr::Join(Box::new(a), Box::new(b))
    }

    pub fn suspend(e: Expr, m: i64) -> Expr {
        Expr::Suspend(Box::new(e), m)
    }

    /// Exponent list of an equivalent Brieskorn–Pham polynomial, if the
    /// expression is built only from powers, quadrics, Pham sums, joins,
    /// suspensions and pure-power polynomials.
    pub fn brieskorn_exponents(&self) -> Option<Vec<i64>> {
        match self {
            Expr::Pow(a) => Some(vec![*a]),
            Expr::Quad(m) => Some(vec![2; usize::try_from(*m).ok()?]),
            Expr::Pham(list) => Some(list.clone()),
            Expr::Join(a, b) => {
                let mut l = a.brieskorn_exponents()?;
                l.extend(b.brieskorn_exponents()?);
                Some(l)
            }
            Expr::Suspend(e, m) => {
                let mut l = e.brieskorn_exponents()?;
                l.extend(core::iter::repeat_n(2, usize::try_from(*m).ok()?));
                Some(l)
            }
            Expr::PolyLiteral(p) => super::pure_power_exponents(p).ok(),
            Expr::AtomRef(_) => None,
        }
    }

    /// Names of every referenced atom, in order of appearance.
    pub fn atom_refs(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Join(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
            Expr::Suspend(e, _) => e.collect_atoms(out),
            Expr::AtomRef(name) => out.push(name),
            _ => {}
        }
    }
}

/// Source syntax; `parse(e.to_string()) == e`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Join(a, b) => write!(f, "join({a}, {b})"),
            Expr::Suspend(e, m) => write!(f, "suspend({e}, {m})"),
            Expr::Pow(a) => write!(f, "pow({a})"),
            Expr::Quad(m) => write!(f, "quad({m})"),
            Expr::Pham(list) => {
                f.write_str("pham(")?;
                for (i, a) in list.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::AtomRef(name) => {
                f.write_str("atom(\"")?;
                for c in name.chars() {
                    if c == '"' || c == '\\' {
                        f.write_str("\\")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("\")")
            }
            Expr::PolyLiteral(p) => write!(f, "{p}"),
        }
    }
}
