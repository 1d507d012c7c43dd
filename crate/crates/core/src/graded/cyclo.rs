use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::data::VanishingData;
use super::root::{Eigenvalues, RootOfUnity};

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic index must be positive");
    // t^n - 1 divided by every Φ_d with d | n, d < n.
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = div_exact(&p, &cyclotomic(d));
    }
    p
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division by a monic polynomial that is known to be exact.
fn div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut rem = num.to_vec();
    let mut q = vec![BigInt::zero(); num.len() - dn];
    for k in (0..q.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// A polynomial written as `∏ Φ_d(t)^e_d`, possibly times leftover linear
/// factors `(t - λ)` for eigenvalues `λ` that do not fill out whole Galois
/// orbits. Without residual the polynomial has integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycloFactorization {
    pub factors: BTreeMap<u64, u64>,
    pub residual: Option<Eigenvalues>,
}

impl CycloFactorization {
    /// Groups a multiset of roots of unity into full Galois orbits.
    ///
    /// For each order `m`, the exponent of `Φ_m` is the least multiplicity
    /// among the primitive `m`-th roots; what is left over goes to the
    /// residual.
    pub fn from_roots(roots: &Eigenvalues) -> Self {
        let mut by_order: BTreeMap<u64, Vec<(RootOfUnity, usize)>> = BTreeMap::new();
        for (&r, &c) in roots.counts() {
            by_order.entry(r.denominator()).or_default().push((r, c));
        }
        let mut factors = BTreeMap::new();
        let mut residual = Eigenvalues::new();
        for (m, present) in by_order {
            let orbit = euler_phi(m) as usize;
            let e = if present.len() == orbit {
                present.iter().map(|&(_, c)| c).min().unwrap_or(0)
            } else {
                0
            };
            if e > 0 {
                factors.insert(m, e as u64);
            }
            for (r, c) in present {
                residual.insert(r, c - e);
            }
        }
        CycloFactorization {
            factors,
            residual: (!residual.is_empty()).then_some(residual),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.residual.is_none()
    }

    pub fn degree(&self) -> u64 {
        let cyclo: u64 = self.factors.iter().map(|(&d, &e)| euler_phi(d) * e).sum();
        cyclo + self.residual.as_ref().map_or(0, |r| r.len() as u64)
    }

    /// Integer coefficients, constant term first. `None` when a residual is
    /// present.
    pub fn expand(&self) -> Option<Vec<BigInt>> {
        if self.residual.is_some() {
            return None;
        }
        let mut p = vec![BigInt::one()];
        for (&d, &e) in &self.factors {
            let phi = cyclotomic(d);
            for _ in 0..e {
                p = mul(&p, &phi);
            }
        }
        Some(p)
    }

    /// `t^2 - t + 1` style rendering of [`expand`](Self::expand).
    pub fn expanded_string(&self) -> Option<String> {
        self.expand().map(|c| poly_string(&c, "t"))
    }
}

/// `Phi6(t)`, `Phi1(t)^2*Phi3(t)`, `1` for the empty product; a residual is
/// appended as `prod(t - e(k/m))[...]`.
impl fmt::Display for CycloFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(&d, &e)| {
                if e == 1 {
                    alloc::format!("Phi{d}(t)")
                } else {
                    alloc::format!("Phi{d}(t)^{e}")
                }
            })
            .collect();
        if let Some(r) = &self.residual {
            let mut s = String::from("prod(t - e(λ)) over [");
            for (i, root) in r.iter().enumerate() {
                if i > 0 {
                    s.push_str(", ");
                }
                let _ = write!(s, "{root}");
            }
            s.push(']');
            parts.push(s);
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Renders integer coefficients (constant first) as a polynomial in `var`.
pub fn poly_string(coeffs: &[BigInt], var: &str) -> String {
    let mut s = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let show_coeff = k == 0 || !mag.is_one();
        if show_coeff {
            let _ = write!(s, "{mag}");
        }
        match k {
            0 => {}
            1 => s.push_str(var),
            _ => {
                let _ = write!(s, "{var}^{k}");
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Characteristic polynomial of the monodromy on the free part of degree
/// `degree`. An absent degree gives the empty product.
pub fn char_poly(v: &VanishingData, degree: i64) -> CycloFactorization {
    match v.piece(degree) {
        Some(p) => CycloFactorization::from_roots(p.eigenvalues()),
        None => CycloFactorization::default(),
    }
}

/// Monodromy zeta function
/// `ζ(t) = ∏_j det(1 - t·h | H^j(F; Q))^((-1)^(j+1))` on unreduced cohomology.
///
/// Unreduced `H^j` is the piece of degree `j + 1`, with one extra eigenvalue
/// `1` in `j = 0`. Degrees `<= 0` are included with the same sign rule.
///
/// Factors are stored after cancellation. In both halves the index `d = 1`
/// stands for `(1 - t)` and `d >= 2` for `Φ_d(t)`, which equals
/// `∏ (1 - λt)` over the primitive `d`-th roots `λ`. Residual eigenvalues
/// `λ` stand for `(1 - λt)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Zeta {
    pub numerator: CycloFactorization,
    pub denominator: CycloFactorization,
}

pub fn zeta(v: &VanishingData) -> Zeta {
    let mut net: BTreeMap<RootOfUnity, i64> = BTreeMap::new();
    *net.entry(RootOfUnity::ONE).or_default() -= 1;
    for (degree, piece) in v.pieces() {
        // unreduced degree j = degree - 1 has sign (-1)^(j+1) = (-1)^degree
        let sign = if degree.rem_euclid(2) == 0 { 1 } else { -1 };
        for (&r, &c) in piece.eigenvalues().counts() {
            *net.entry(r).or_default() += sign * c as i64;
        }
    }
    let mut num = Eigenvalues::new();
    let mut den = Eigenvalues::new();
    for (r, c) in net {
        match c.cmp(&0) {
            core::cmp::Ordering::Greater => num.insert(r, c as usize),
            core::cmp::Ordering::Less => den.insert(r, c.unsigned_abs() as usize),
            core::cmp::Ordering::Equal => {}
        }
    }
    Zeta {
        numerator: CycloFactorization::from_roots(&num),
        denominator: CycloFactorization::from_roots(&den),
    }
}

impl Zeta {
    fn half_string(c: &CycloFactorization) -> (String, usize) {
        let mut parts: Vec<String> = Vec::new();
        for (&d, &e) in &c.factors {
            let base = if d == 1 {
                String::from("(1 - t)")
            } else {
                alloc::format!("Phi{d}(t)")
            };
            if e == 1 {
                parts.push(base);
            } else {
                parts.push(alloc::format!("{base}^{e}"));
            }
        }
        if let Some(r) = &c.residual {
            for root in r.iter() {
                parts.push(alloc::format!("(1 - e({root})t)"));
            }
        }
        let n = parts.len();
        (parts.join("*"), n)
    }
}

/// `(1 - t)/Phi2(t)`, `1/((1 - t)*Phi2(t))`.
impl fmt::Display for Zeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, nn) = Self::half_string(&self.numerator);
        let (den, dn) = Self::half_string(&self.denominator);
        match (nn, dn) {
            (0, 0) => f.write_str("1"),
            (_, 0) => f.write_str(&num),
            (0, 1) => write!(f, "1/{den}"),
            (0, _) => write!(f, "1/({den})"),
            (_, 1) => write!(f, "{num}/{den}"),
            (_, _) => write!(f, "{num}/({den})"),
        }
    }
}
