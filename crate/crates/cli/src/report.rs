//! The result document of `eval` and `verify`, in JSON and text form.

use std::fmt::Write as _;

use serde::Serialize;

use sebthom_core::graded::{char_poly, total_rank, zeta};
use sebthom_core::{CycloFactorization, VanishingData};

use crate::json::DataDoc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiPower {
    pub order: u64,
    pub exponent: u64,
}

/// A product of cyclotomic polynomials plus leftover eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorsDoc {
    pub factors: Vec<PhiPower>,
    pub residual: Vec<String>,
}

impl From<&CycloFactorization> for FactorsDoc {
    fn from(c: &CycloFactorization) -> Self {
        FactorsDoc {
            factors: c
                .factors
                .iter()
                .map(|(&order, &exponent)| PhiPower { order, exponent })
                .collect(),
            residual: c
                .residual
                .as_ref()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .unwrap_or_default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharPolyDoc {
    pub degree: i64,
    #[serde(flatten)]
    pub factorization: FactorsDoc,
    /// Expanded integer polynomial; absent when a residual is present.
    pub polynomial: Option<String>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaDoc {
    pub numerator: FactorsDoc,
    pub denominator: FactorsDoc,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

/// One oracle comparison. Both values are filled in only on mismatch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub oracle: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found: Option<String>,
}

impl Check {
    /// `expected` is the join computation, `found` the oracle's answer.
    pub fn compare(oracle: &str, expected: String, found: String) -> Check {
        let same = expected == found;
        Check {
            oracle: oracle.to_string(),
            status: if same { Status::Match } else { Status::Mismatch },
            expected: (!same).then_some(expected),
            found: (!same).then_some(found),
        }
    }

    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn mismatches(&self) -> usize {
        self.checks.iter().filter(|c| !c.is_match()).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub input: String,
    pub data: DataDoc,
    pub milnor: usize,
    pub char_polys: Vec<CharPolyDoc>,
    pub zeta: ZetaDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

impl Report {
    pub fn new(input: &str, data: &VanishingData) -> Report {
        let char_polys = data
            .pieces()
            .filter(|(_, p)| p.group().free_rank() > 0)
            .map(|(degree, _)| {
                let c = char_poly(data, degree);
                CharPolyDoc {
                    degree,
                    factorization: FactorsDoc::from(&c),
                    polynomial: c.expanded_string(),
                    text: c.to_string(),
                }
            })
            .collect();
        let z = zeta(data);
        Report {
            input: input.to_string(),
            data: data.into(),
            milnor: total_rank(data),
            char_polys,
            zeta: ZetaDoc {
                numerator: (&z.numerator).into(),
                denominator: (&z.denominator).into(),
                text: z.to_string(),
            },
            verification: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input   {}", self.input);
        let _ = writeln!(out, "milnor  {}", self.milnor);
        let _ = writeln!(out, "zeta    {}", self.zeta.text);
        out.push('\n');
        out.push_str(&data_table(&self.data, Some(&self.char_polys)));
        if let Some(v) = &self.verification {
            out.push('\n');
            out.push_str(&verification_text(v));
        }
        out
    }
}

fn group_text(g: &crate::json::GroupDoc) -> String {
    let mut parts = Vec::new();
    match g.free_rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    for t in &g.torsion {
        match t {
            crate::json::Natural::Small(d) => parts.push(format!("Z/{d}")),
            crate::json::Natural::Big(d) => parts.push(format!("Z/{d}")),
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let head: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&head).chain(rows) {
        let mut line = String::new();
        for (i, (cell, w)) in row.iter().zip(&width).enumerate() {
            if i + 1 == row.len() {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<w$}  ");
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// The per-degree table; the char poly column is shown when given.
pub fn data_table(data: &DataDoc, char_polys: Option<&[CharPolyDoc]>) -> String {
    if data.pieces.is_empty() {
        return "(no vanishing cohomology)\n".into();
    }
    let rows: Vec<Vec<String>> = data
        .pieces
        .iter()
        .map(|p| {
            let mut row = vec![
                p.degree.to_string(),
                group_text(&p.group),
                if p.eigenvalues.is_empty() {
                    "-".into()
                } else {
                    p.eigenvalues.join(" ")
                },
            ];
            if let Some(cps) = char_polys {
                let cp = cps.iter().find(|c| c.degree == p.degree);
                row.push(match cp {
                    Some(c) => match &c.polynomial {
                        Some(poly) if poly != &c.text => format!("{} = {poly}", c.text),
                        _ => c.text.clone(),
                    },
                    None => "1".into(),
                });
            }
            row
        })
        .collect();
    if char_polys.is_some() {
        table(&["degree", "group", "eigenvalues", "char poly"], &rows)
    } else {
        table(&["degree", "group", "eigenvalues"], &rows)
    }
}

fn verification_text(v: &Verification) -> String {
    let rows: Vec<Vec<String>> = v
        .checks
        .iter()
        .map(|c| {
            let status = match (&c.status, &c.expected, &c.found) {
                (Status::Match, ..) => "match".to_string(),
                (Status::Mismatch, Some(e), Some(f)) => format!("MISMATCH: join {e}, oracle {f}"),
                (Status::Mismatch, ..) => "MISMATCH".to_string(),
            };
            vec![c.oracle.clone(), status]
        })
        .collect();
    let mut out = format!("verification (seed {})\n", v.seed);
    if rows.is_empty() {
        out.push_str("(no applicable oracles)\n");
    } else {
        out.push_str(&table(&["oracle", "result"], &rows));
    }
    out
}
