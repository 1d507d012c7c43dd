//! JSON form of vanishing data and atom files.
//!
//! ```json
//! {"pieces": [{"degree": 2, "group": {"free_rank": 2, "torsion": []},
//!              "eigenvalues": ["1/6", "5/6"]}]}
//! ```
//!
//! Pieces are sorted by degree, eigenvalues by (denominator, numerator),
//! torsion in divisor-chain order. Torsion invariants that do not fit in a
//! `u64` are written as decimal strings.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use sebthom_core::atoms::PieceSpec;
use sebthom_core::{AtomDef, FgAbGroup, VanishingData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Natural {
    Small(u64),
    Big(String),
}

impl Natural {
    fn from_big(n: &BigUint) -> Self {
        match u64::try_from(n) {
            Ok(v) => Natural::Small(v),
            Err(_) => Natural::Big(n.to_string()),
        }
    }

    fn to_big(&self) -> Result<BigUint, String> {
        match self {
            Natural::Small(v) => Ok(BigUint::from(*v)),
            Natural::Big(s) => s
                .parse()
                .map_err(|_| format!("torsion entry \"{s}\" is not a non-negative integer")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<Natural>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceDoc {
    pub degree: i64,
    pub group: GroupDoc,
    #[serde(default)]
    pub eigenvalues: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DataDoc {
    pub pieces: Vec<PieceDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomDoc {
    pub name: String,
    pub pieces: Vec<PieceDoc>,
}

impl From<&FgAbGroup> for GroupDoc {
    fn from(g: &FgAbGroup) -> Self {
        GroupDoc {
            free_rank: g.free_rank(),
            torsion: g.torsion().iter().map(Natural::from_big).collect(),
        }
    }
}

impl From<&VanishingData> for DataDoc {
    fn from(v: &VanishingData) -> Self {
        DataDoc {
            pieces: v
                .pieces()
                .map(|(degree, p)| PieceDoc {
                    degree,
                    group: p.group().into(),
                    eigenvalues: p.eigenvalues().iter().map(|r| r.to_string()).collect(),
                })
                .collect(),
        }
    }
}

impl From<&AtomDef> for AtomDoc {
    fn from(a: &AtomDef) -> Self {
        AtomDoc {
            name: a.name.clone(),
            pieces: DataDoc::from(&a.data).pieces,
        }
    }
}

/// Converts document pieces to unvalidated specs. Only the torsion number
/// syntax is checked here; everything else is left to
/// [`AtomDef::from_specs`].
pub fn to_specs(pieces: &[PieceDoc]) -> Result<Vec<PieceSpec>, (i64, String)> {
    pieces
        .iter()
        .map(|p| {
            let torsion = p
                .group
                .torsion
                .iter()
                .map(Natural::to_big)
                .collect::<Result<_, _>>()
                .map_err(|e| (p.degree, e))?;
            Ok(PieceSpec {
                degree: p.degree,
                free_rank: p.group.free_rank,
                torsion,
                eigenvalues: p.eigenvalues.clone(),
            })
        })
        .collect()
}
