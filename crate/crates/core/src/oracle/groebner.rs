//! Buchberger's algorithm over the rationals, degrevlex only.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{degrevlex, Monomial, Poly};

/// Terms sorted by decreasing monomial.
#[derive(Clone, Debug, PartialEq)]
struct Sparse(Vec<(Monomial, BigRational)>);

impl Sparse {
    fn from_poly(p: &Poly) -> Self {
        Sparse(
            p.sorted_terms()
                .into_iter()
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    fn lm(&self) -> &Monomial {
        &self.0[0].0
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.0.first() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.0 {
                    *c *= &inv;
                }
            }
        }
    }

    /// `self - coeff * x^shift * g`.
    fn sub_scaled(&self, coeff: &BigRational, shift: &[u32], g: &Sparse) -> Sparse {
        let mut out = Vec::with_capacity(self.0.len() + g.0.len());
        let mut a = self.0.iter().peekable();
        let mut b = g.0.iter().map(|(m, c)| (mul_mono(m, shift), c * coeff)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((ma, _)), Some((mb, _))) => degrevlex(ma, mb),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (m, c) = b.next().unwrap();
                    out.push((m, -c));
                }
                Ordering::Equal => {
                    let (m, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = ca - cb;
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                }
            }
        }
        Sparse(out)
    }

    fn to_poly(&self, template: &Poly) -> Poly {
        Poly::from_terms(template.variables().to_vec(), self.0.iter().cloned())
    }
}

fn mul_mono(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn lcm_mono(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Fully reduces `p` modulo `basis` (every term, not only the leading one).
fn normal_form(p: &Sparse, basis: &[Sparse]) -> Sparse {
    let mut rest = p.clone();
    let mut done = Vec::new();
    while let Some((m, c)) = rest.0.first().cloned() {
        match basis.iter().find(|g| divides(g.lm(), &m)) {
            Some(g) => {
                let shift: Monomial = m.iter().zip(g.lm()).map(|(x, y)| x - y).collect();
                let coeff = c / &g.0[0].1;
                rest = rest.sub_scaled(&coeff, &shift, g);
            }
            None => {
                done.push(rest.0.remove(0));
            }
        }
    }
    Sparse(done)
}

fn s_poly(f: &Sparse, g: &Sparse) -> Sparse {
    let l = lcm_mono(f.lm(), g.lm());
    let sf: Monomial = l.iter().zip(f.lm()).map(|(x, y)| x - y).collect();
    let sg: Monomial = l.iter().zip(g.lm()).map(|(x, y)| x - y).collect();
    let zero = Sparse(Vec::new());
    let a = zero.sub_scaled(&(-f.0[0].1.recip()), &sf, f);
    a.sub_scaled(&g.0[0].1.recip(), &sg, g)
}

/// Reduced Gröbner basis under degrevlex, monic, sorted by increasing
/// leading monomial. All inputs must share one variable list; zero
/// polynomials are ignored and an empty ideal gives an empty basis.
pub fn groebner_basis(ideal: &[Poly]) -> Vec<Poly> {
    let Some(template) = ideal.first() else {
        return Vec::new();
    };
    for p in ideal {
        assert_eq!(
            p.variables(),
            template.variables(),
            "ideal generators must share a variable list"
        );
    }

    let mut basis: Vec<Sparse> = Vec::new();
    for p in ideal {
        let mut s = Sparse::from_poly(p);
        if !s.is_zero() {
            s.make_monic();
            basis.push(s);
        }
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while let Some(&(i, j)) = pending.iter().next() {
        pending.remove(&(i, j));
        if coprime(basis[i].lm(), basis[j].lm()) {
            continue;
        }
        let l = lcm_mono(basis[i].lm(), basis[j].lm());
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].lm(), &l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let mut h = normal_form(&s_poly(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        let n = basis.len();
        basis.push(h);
        for k in 0..n {
            pending.insert((k, n));
        }
    }

    // Minimal basis: drop elements whose leading monomial another divides.
    let mut minimal: Vec<Sparse> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && divides(h.lm(), g.lm()) && (h.lm() != g.lm() || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }

    // Reduced basis: tails reduced against the other elements.
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Sparse> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &minimal[idx];
        let head = Sparse(alloc::vec![g.0[0].clone()]);
        let tail = normal_form(&Sparse(g.0[1..].to_vec()), &others);
        let mut r = head;
        r.0.extend(tail.0);
        r.make_monic();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| degrevlex(a.lm(), b.lm()));
    reduced.iter().map(|g| g.to_poly(template)).collect()
}

/// Leading monomials of a Gröbner basis.
pub fn leading_monomials(basis: &[Poly]) -> Vec<Monomial> {
    basis
        .iter()
        .filter_map(|g| g.leading_term().map(|(m, _)| m.clone()))
        .collect()
}

/// Normal form of `p` modulo a Gröbner basis.
pub fn reduce(p: &Poly, basis: &[Poly]) -> Poly {
    let b: Vec<Sparse> = basis.iter().map(Sparse::from_poly).collect();
    normal_form(&Sparse::from_poly(p), &b).to_poly(p)
}
