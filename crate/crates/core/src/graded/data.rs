use alloc::collections::BTreeMap;
use core::fmt;

use super::root::{Eigenvalues, RootOfUnity};
use crate::abgroup::{direct_sum, tensor, tor, FgAbGroup};
use crate::{Error, Result};

/// One degree of vanishing cohomology: the group, and the monodromy
/// eigenvalues on its free part.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedPiece {
    group: FgAbGroup,
    eigenvalues: Eigenvalues,
}

impl GradedPiece {
    /// Fails unless there is exactly one eigenvalue per free generator.
    pub fn new(group: FgAbGroup, eigenvalues: Eigenvalues) -> Result<Self> {
        if eigenvalues.len() != group.free_rank() {
            return Err(Error::validation(
                None,
                "eigenvalues",
                alloc::format!(
                    "{} eigenvalues given for free rank {}",
                    eigenvalues.len(),
                    group.free_rank()
                ),
            ));
        }
        Ok(GradedPiece { group, eigenvalues })
    }

    /// A torsion group with no monodromy data.
    pub fn torsion(group: FgAbGroup) -> Result<Self> {
        Self::new(group, Eigenvalues::new())
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn eigenvalues(&self) -> &Eigenvalues {
        &self.eigenvalues
    }

    pub fn is_trivial(&self) -> bool {
        self.group.is_trivial() && self.eigenvalues.is_empty()
    }
}

impl fmt::Debug for GradedPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.group, self.eigenvalues)
    }
}

/// Vanishing cohomology at a point, graded so that degree `i` holds the
/// reduced cohomology of the Milnor fibre in degree `i - 1`.
///
/// Only nontrivial pieces are stored, so derived equality is the `equal`
/// relation on normalized data.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VanishingData {
    pieces: BTreeMap<i64, GradedPiece>,
}

impl VanishingData {
    /// The zero object: vanishing cohomology of a smooth point.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(degree: i64, piece: GradedPiece) -> Self {
        let mut v = Self::empty();
        v.put(degree, piece);
        v
    }

    /// Builds from `(degree, piece)` pairs. Trivial pieces are dropped;
    /// a repeated degree is an error.
    pub fn from_pieces<I: IntoIterator<Item = (i64, GradedPiece)>>(pieces: I) -> Result<Self> {
        let mut v = Self::empty();
        let mut seen = alloc::collections::BTreeSet::new();
        for (degree, piece) in pieces {
            if !seen.insert(degree) {
                return Err(Error::validation(
                    Some(degree),
                    "degree",
                    "degree listed more than once",
                ));
            }
            v.put(degree, piece);
        }
        Ok(v)
    }

    fn put(&mut self, degree: i64, piece: GradedPiece) {
        if !piece.is_trivial() {
            self.pieces.insert(degree, piece);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn piece(&self, degree: i64) -> Option<&GradedPiece> {
        self.pieces.get(&degree)
    }

    /// Nontrivial pieces in increasing degree.
    pub fn pieces(&self) -> impl Iterator<Item = (i64, &GradedPiece)> {
        self.pieces.iter().map(|(&d, p)| (d, p))
    }

    pub fn has_torsion(&self) -> bool {
        self.pieces.values().any(|p| !p.group.is_free())
    }
}

impl fmt::Debug for VanishingData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pieces.iter()).finish()
    }
}

#[derive(Default)]
struct Accumulator {
    pieces: BTreeMap<i64, (FgAbGroup, Eigenvalues)>,
}

impl Accumulator {
    fn add(&mut self, degree: i64, group: FgAbGroup, eigenvalues: Eigenvalues) {
        if group.is_trivial() && eigenvalues.is_empty() {
            return;
        }
        let slot = self.pieces.entry(degree).or_default();
        slot.0 = direct_sum(&slot.0, &group);
        slot.1 = slot.1.union(&eigenvalues);
    }

    fn finish(self) -> VanishingData {
        let mut out = VanishingData::empty();
        for (degree, (group, eigenvalues)) in self.pieces {
            let piece = GradedPiece::new(group, eigenvalues)
                .expect("free ranks and eigenvalue counts are both multiplicative");
            out.put(degree, piece);
        }
        out
    }
}

/// Vanishing cohomology of `f(x) + g(y)` from that of `f` and `g`.
///
/// Degree `i` receives `v[a] ⊗ w[b]` for `a + b = i`, carrying the pairwise
/// products of eigenvalues, and `Tor(v[c], w[d])` for `c + d = i + 1`.
/// Tor terms are torsion and carry no eigenvalues.
pub fn join(v: &VanishingData, w: &VanishingData) -> VanishingData {
    let mut acc = Accumulator::default();
    for (&a, p) in &v.pieces {
        for (&b, q) in &w.pieces {
            acc.add(
                a + b,
                tensor(&p.group, &q.group),
                p.eigenvalues.convolve(&q.eigenvalues),
            );
            acc.add(a + b - 1, tor(&p.group, &q.group), Eigenvalues::new());
        }
    }
    acc.finish()
}

/// Join with the nondegenerate quadric in `m` variables: degrees shift up by
/// `m` and the monodromy picks up a factor `(-1)^m`.
pub fn suspend(v: &VanishingData, m: i64) -> Result<VanishingData> {
    if m < 1 {
        return Err(Error::domain(alloc::format!(
            "suspension order must be at least 1, got {m}"
        )));
    }
    let sign = RootOfUnity::sign_power(m as u64);
    let mut out = VanishingData::empty();
    for (&d, p) in &v.pieces {
        out.put(
            d + m,
            GradedPiece {
                group: p.group.clone(),
                eigenvalues: p.eigenvalues.rotate(sign),
            },
        );
    }
    Ok(out)
}

/// Sum of free ranks over all degrees (the Milnor number for an isolated
/// hypersurface singularity).
pub fn total_rank(v: &VanishingData) -> usize {
    v.pieces.values().map(|p| p.group.free_rank()).sum()
}

pub fn equal(v: &VanishingData, w: &VanishingData) -> bool {
    v == w
}
