use alloc::collections::btree_map::{self, BTreeMap};
use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use crate::Error;

/// The root of unity `exp(2πi k/m)`, stored as the reduced fraction `k/m`
/// with `0 <= k < m`. The eigenvalue `1` is `0/1`.
///
/// Ordering is by denominator, then numerator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { num: 1, den: 2 };

    /// `k/m` reduced modulo one. Panics if `m == 0`.
    pub fn new(k: i64, m: u64) -> Self {
        assert!(m != 0, "root of unity with zero denominator");
        let k = (k as i128).rem_euclid(m as i128) as u64;
        Self::reduced(k, m)
    }

    fn reduced(k: u64, m: u64) -> Self {
        let g = k.gcd(&m);
        RootOfUnity {
            num: k / g,
            den: m / g,
        }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    /// Multiplicative order of the root.
    pub fn denominator(self) -> u64 {
        self.den
    }

    /// `(-1)^m`.
    pub fn sign_power(m: u64) -> RootOfUnity {
        if m.is_multiple_of(2) {
            Self::ONE
        } else {
            Self::MINUS_ONE
        }
    }

    /// Galois conjugate `exp(2πi a k/m)`, for `a` prime to the order.
    pub fn pow(self, a: u64) -> RootOfUnity {
        let k = (self.num as u128 * a as u128) % self.den as u128;
        Self::reduced(k as u64, self.den)
    }
}

impl Ord for RootOfUnity {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.den, self.num).cmp(&(other.den, other.num))
    }
}

impl PartialOrd for RootOfUnity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Product of the two eigenvalues: the fractions add modulo one.
///
/// Panics if the common denominator exceeds `u64`.
impl core::ops::Mul for RootOfUnity {
    type Output = RootOfUnity;

    fn mul(self, other: RootOfUnity) -> RootOfUnity {
        let l = (self.den as u128).lcm(&(other.den as u128));
        let k = (self.num as u128 * (l / self.den as u128)
            + other.num as u128 * (l / other.den as u128))
            % l;
        let l = u64::try_from(l).expect("eigenvalue order overflows u64");
        Self::reduced(k as u64, l)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Strict parse of `"k/m"`: the fraction must already be reduced and lie in
/// `[0, 1)`. Anything else (decimals, bare integers other than `0/1`,
/// unreduced fractions) is refused, since only finite-order monodromy is
/// representable.
impl FromStr for RootOfUnity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |msg: &str| {
            Error::validation(None, "eigenvalues", alloc::format!("\"{s}\": {msg}"))
        };
        let (k, m) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| bad("expected a root of unity written as a fraction k/m"))?;
        let k: u64 = k
            .trim()
            .parse()
            .map_err(|_| bad("numerator is not a non-negative integer"))?;
        let m: u64 = m
            .trim()
            .parse()
            .map_err(|_| bad("denominator is not a positive integer"))?;
        if m == 0 {
            return Err(bad("zero denominator"));
        }
        if k >= m {
            return Err(bad("fraction is outside [0, 1)"));
        }
        if k.gcd(&m) != 1 {
            return Err(bad("fraction is not reduced"));
        }
        Ok(RootOfUnity { num: k, den: m })
    }
}

/// A finite multiset of roots of unity.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Eigenvalues {
    counts: BTreeMap<RootOfUnity, usize>,
    len: usize,
}

impl Eigenvalues {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, root: RootOfUnity, count: usize) {
        if count > 0 {
            *self.counts.entry(root).or_default() += count;
            self.len += count;
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn multiplicity(&self, root: RootOfUnity) -> usize {
        self.counts.get(&root).copied().unwrap_or(0)
    }

    /// Distinct roots with multiplicities, in `(denominator, numerator)`
    /// order.
    pub fn counts(&self) -> btree_map::Iter<'_, RootOfUnity, usize> {
        self.counts.iter()
    }

    /// Every element with repetition, sorted.
    pub fn iter(&self) -> impl Iterator<Item = RootOfUnity> + '_ {
        self.counts
            .iter()
            .flat_map(|(&r, &c)| core::iter::repeat_n(r, c))
    }

    /// `{ a * b : a in self, b in other }` with multiplicities.
    pub fn convolve(&self, other: &Eigenvalues) -> Eigenvalues {
        let mut out = Eigenvalues::new();
        for (&a, &ca) in &self.counts {
            for (&b, &cb) in &other.counts {
                out.insert(a * b, ca * cb);
            }
        }
        out
    }

    /// Every element multiplied by `root`.
    pub fn rotate(&self, root: RootOfUnity) -> Eigenvalues {
        let mut out = Eigenvalues::new();
        for (&a, &c) in &self.counts {
            out.insert(a * root, c);
        }
        out
    }

    pub fn union(&self, other: &Eigenvalues) -> Eigenvalues {
        let mut out = self.clone();
        for (&r, &c) in &other.counts {
            out.insert(r, c);
        }
        out
    }
}

impl FromIterator<RootOfUnity> for Eigenvalues {
    fn from_iter<T: IntoIterator<Item = RootOfUnity>>(iter: T) -> Self {
        let mut out = Eigenvalues::new();
        for r in iter {
            out.insert(r, 1);
        }
        out
    }
}

impl fmt::Debug for Eigenvalues {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.counts.iter().map(|(r, c)| {
                if *c == 1 {
                    r.to_string()
                } else {
                    alloc::format!("{r} x{c}")
                }
            }))
            .finish()
    }
}
