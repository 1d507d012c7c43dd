use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::{snf, IntMatrix};
use crate::{Error, Result};

/// A finitely generated abelian group `Z^r ⊕ Z/d1 ⊕ … ⊕ Z/dk` in invariant
/// factor form: every `di >= 2` and `d1 | d2 | … | dk`.
///
/// The fields are private so that every value is canonical, which makes the
/// derived `Eq` an isomorphism test.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<BigUint>,
}

impl FgAbGroup {
    /// The trivial group.
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_orders(0, [BigUint::from(order)])
    }

    /// `Z^rank ⊕ Z/o1 ⊕ Z/o2 ⊕ …` for arbitrary positive orders (order 0 is
    /// read as a free summand). The result is re-canonicalized.
    pub fn from_orders<I: IntoIterator<Item = BigUint>>(rank: usize, orders: I) -> Self {
        let mut free_rank = rank;
        let mut torsion = Vec::new();
        for o in orders {
            if o.is_zero() {
                free_rank += 1;
            } else {
                torsion.push(o);
            }
        }
        FgAbGroup {
            free_rank,
            torsion: canonical_chain(torsion),
        }
    }

    /// Checked constructor: `torsion` must already be an invariant factor
    /// chain.
    pub fn new(free_rank: usize, torsion: Vec<BigUint>) -> Result<Self> {
        for (i, d) in torsion.iter().enumerate() {
            if *d < BigUint::from(2u8) {
                return Err(Error::validation(
                    None,
                    "torsion",
                    alloc::format!("invariant factor {d} at position {i} is below 2"),
                ));
            }
            if i > 0 && !d.is_multiple_of(&torsion[i - 1]) {
                return Err(Error::validation(
                    None,
                    "torsion",
                    alloc::format!(
                        "{} does not divide {d}: invariant factors must form a divisor chain",
                        torsion[i - 1]
                    ),
                ));
            }
        }
        Ok(FgAbGroup { free_rank, torsion })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        self.torsion.iter().product()
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Z^2 + Z/2 + Z/4`, or `0` for the trivial group.
impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        match self.free_rank {
            0 => {}
            1 => {
                f.write_str("Z")?;
                first = false;
            }
            r => {
                write!(f, "Z^{r}")?;
                first = false;
            }
        }
        for d in &self.torsion {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "Z/{d}")?;
            first = false;
        }
        Ok(())
    }
}

/// Turns any list of positive orders into the invariant factor chain of their
/// direct sum, by repeatedly replacing pairs with `(gcd, lcm)`.
fn canonical_chain(mut orders: Vec<BigUint>) -> Vec<BigUint> {
    orders.retain(|d| !d.is_one());
    let n = orders.len();
    for i in 0..n {
        for j in i + 1..n {
            let (g, l) = {
                let (a, b) = (&orders[i], &orders[j]);
                if b.is_multiple_of(a) {
                    continue;
                }
                let g = a.gcd(b);
                let l = a / &g * b;
                (g, l)
            };
            orders[i] = g;
            orders[j] = l;
        }
    }
    orders.retain(|d| !d.is_one());
    orders
}

/// Cokernel of `relations` (one relation per row) on `generators` generators.
pub fn from_presentation(relations: &IntMatrix, generators: usize) -> Result<FgAbGroup> {
    if relations.rows() > 0 && relations.cols() != generators {
        return Err(Error::Dimension {
            expected: generators,
            found: relations.cols(),
        });
    }
    let invariants = snf(relations);
    let nonzero: Vec<BigUint> = invariants
        .into_iter()
        .filter(|d| !d.is_zero())
        .map(|d| d.magnitude().clone())
        .collect();
    let free_rank = generators - nonzero.len();
    let torsion = nonzero.into_iter().filter(|d| !d.is_one()).collect();
    Ok(FgAbGroup { free_rank, torsion })
}

pub fn direct_sum(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    FgAbGroup::from_orders(
        g.free_rank + h.free_rank,
        g.torsion.iter().chain(&h.torsion).cloned(),
    )
}

pub fn tensor(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    let mut orders = Vec::new();
    for d in &g.torsion {
        orders.extend(core::iter::repeat_n(d.clone(), h.free_rank));
    }
    for e in &h.torsion {
        orders.extend(core::iter::repeat_n(e.clone(), g.free_rank));
    }
    orders.extend(pairwise_gcds(g, h));
    FgAbGroup::from_orders(g.free_rank * h.free_rank, orders)
}

pub fn tor(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    FgAbGroup::from_orders(0, pairwise_gcds(g, h))
}

fn pairwise_gcds<'a>(g: &'a FgAbGroup, h: &'a FgAbGroup) -> impl Iterator<Item = BigUint> + 'a {
    g.torsion
        .iter()
        .flat_map(move |d| h.torsion.iter().map(move |e| d.gcd(e)))
}

impl FgAbGroup {
    /// Relation matrix of the standard presentation: one generator per free
    /// summand and per invariant factor, one relation `di * e` per factor.
    pub fn presentation(&self) -> IntMatrix {
        let k = self.torsion.len();
        let n = self.free_rank + k;
        let mut m = IntMatrix::zeros(k, n);
        for (i, d) in self.torsion.iter().enumerate() {
            m[(i, self.free_rank + i)] = BigInt::from(d.clone());
        }
        m
    }

    /// Torsion invariants as machine integers, if they all fit.
    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(ToPrimitive::to_u64).collect()
    }
}
