//! Vanishing data of the standard singularities, and user-defined atoms.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::abgroup::FgAbGroup;
use crate::graded::{join, Eigenvalues, GradedPiece, RootOfUnity, VanishingData};
use crate::{Error, Result};

/// `x^a`: the Milnor fibre is `a` points permuted cyclically, so degree 1
/// carries `Z^(a-1)` with every nontrivial `a`-th root of unity.
pub fn pow(a: i64) -> Result<VanishingData> {
    if a < 2 {
        return Err(Error::domain(alloc::format!(
            "pow exponent must be at least 2, got {a}"
        )));
    }
    let a = a as u64;
    let eigenvalues: Eigenvalues = (1..a).map(|k| RootOfUnity::new(k as i64, a)).collect();
    let piece = GradedPiece::new(FgAbGroup::free(a as usize - 1), eigenvalues)?;
    Ok(VanishingData::single(1, piece))
}

/// `y1^2 + … + ym^2`: `Z` in degree `m` with eigenvalue `(-1)^m`.
pub fn quad(m: i64) -> Result<VanishingData> {
    if m < 1 {
        return Err(Error::domain(alloc::format!(
            "quad needs at least one variable, got {m}"
        )));
    }
    let eigenvalues: Eigenvalues = core::iter::once(RootOfUnity::sign_power(m as u64)).collect();
    let piece = GradedPiece::new(FgAbGroup::free(1), eigenvalues)?;
    Ok(VanishingData::single(m, piece))
}

/// Brieskorn–Pham `x1^a1 + … + xn^an`, as the left fold of joins of
/// [`pow`].
pub fn pham(exponents: &[i64]) -> Result<VanishingData> {
    let (first, rest) = exponents
        .split_first()
        .ok_or_else(|| Error::domain("pham needs at least one exponent"))?;
    let mut acc = pow(*first)?;
    for &a in rest {
        acc = join(&acc, &pow(a)?);
    }
    Ok(acc)
}

/// A named, validated piece of vanishing data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomDef {
    pub name: String,
    pub data: VanishingData,
}

/// One piece of an atom as written in a document, before validation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PieceSpec {
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<BigUint>,
    pub eigenvalues: Vec<String>,
}

impl AtomDef {
    /// Validates raw pieces. Errors name the offending degree and field.
    pub fn from_specs(name: impl Into<String>, specs: &[PieceSpec]) -> Result<Self> {
        let name = name.into();
        if name.trim().is_empty() {
            return Err(Error::validation(None, "name", "atom name is empty"));
        }
        let mut pieces = Vec::with_capacity(specs.len());
        for spec in specs {
            let at = |e: Error| match e {
                Error::Validation { field, message, .. } => Error::Validation {
                    degree: Some(spec.degree),
                    field,
                    message,
                },
                other => other,
            };
            let group = FgAbGroup::new(spec.free_rank, spec.torsion.clone()).map_err(at)?;
            let eigenvalues = spec
                .eigenvalues
                .iter()
                .map(|s| s.parse::<RootOfUnity>())
                .collect::<Result<Eigenvalues>>()
                .map_err(at)?;
            pieces.push((spec.degree, GradedPiece::new(group, eigenvalues).map_err(at)?));
        }
        Ok(AtomDef {
            name,
            data: VanishingData::from_pieces(pieces)?,
        })
    }

    /// Inverse of [`from_specs`](Self::from_specs) on normalized data.
    pub fn to_specs(&self) -> Vec<PieceSpec> {
        self.data
            .pieces()
            .map(|(degree, p)| PieceSpec {
                degree,
                free_rank: p.group().free_rank(),
                torsion: p.group().torsion().to_vec(),
                eigenvalues: p.eigenvalues().iter().map(|r| alloc::format!("{r}")).collect(),
            })
            .collect()
    }
}

/// Named atoms available to `atom("name")` references.
#[derive(Clone, Debug, Default)]
pub struct AtomRegistry {
    atoms: BTreeMap<String, AtomDef>,
}

impl AtomRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an atom, returning the one it replaced.
    pub fn insert(&mut self, atom: AtomDef) -> Option<AtomDef> {
        self.atoms.insert(atom.name.clone(), atom)
    }

    pub fn get(&self, name: &str) -> Option<&AtomDef> {
        self.atoms.get(name)
    }

    pub fn resolve(&self, name: &str) -> Result<&VanishingData> {
        self.get(name)
            .map(|a| &a.data)
            .ok_or_else(|| Error::UnknownAtom(name.into()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &AtomDef> {
        self.atoms.values()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }
}
