//! Independent recomputation of an evaluated expression.
//!
//! | oracle                  | applies to                  | compares              |
//! |-------------------------|-----------------------------|-----------------------|
//! | `pham-enumeration`      | Brieskorn-type expressions  | groups and eigenvalues|
//! | `milnor-groebner`       | polynomial literals         | total rank            |
//! | `tensor-tor-resolution` | joins involving torsion     | groups per degree     |
//! | `join-shuffle`          | two or more join factors    | groups and eigenvalues|
//!
//! The shuffle check refolds the join factors in a seeded random order,
//! with `suspend(e, m)` read as `join(e, quad(m))` and a pure-power
//! polynomial as the join of its powers.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sebthom_core::abgroup::{direct_sum, FgAbGroup};
use sebthom_core::atoms::{pow, quad};
use sebthom_core::expr::eval;
use sebthom_core::graded::{join, total_rank};
use sebthom_core::oracle::{check_isolated, milnor_groebner, pham_enumerate, tensor_tor_resolution};
use sebthom_core::{AtomRegistry, Error, Expr, VanishingData};

use crate::json::DataDoc;
use crate::report::{Check, Verification};

pub const DEFAULT_SEED: u64 = 1729;

pub struct Options {
    pub max_enum: u64,
    pub seed: u64,
}

/// Rejects polynomial literals with a non-isolated critical locus. Run
/// before evaluation so that such input fails as non-isolated rather than
/// as an unsupported summand.
pub fn precheck(expr: &Expr) -> Result<(), Error> {
    if let Expr::PolyLiteral(p) = expr {
        if !check_isolated(p) {
            return Err(Error::NonIsolated(p.to_string()));
        }
    }
    Ok(())
}

fn compact(v: &VanishingData) -> String {
    serde_json::to_string(&DataDoc::from(v)).expect("data serializes")
}

/// Groups only, as `degree: group` pairs.
fn groups_text(groups: &BTreeMap<i64, FgAbGroup>) -> String {
    let parts: Vec<String> = groups
        .iter()
        .filter(|(_, g)| !g.is_trivial())
        .map(|(d, g)| format!("{d}: {g}"))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("; ")
    }
}

fn groups_of(v: &VanishingData) -> BTreeMap<i64, FgAbGroup> {
    v.pieces().map(|(d, p)| (d, p.group().clone())).collect()
}

/// Join groups assembled from the resolution oracle.
fn resolution_join_groups(v: &VanishingData, w: &VanishingData) -> BTreeMap<i64, FgAbGroup> {
    let mut out: BTreeMap<i64, FgAbGroup> = BTreeMap::new();
    let mut add = |d: i64, g: FgAbGroup| {
        let e = out.entry(d).or_insert_with(FgAbGroup::zero);
        *e = direct_sum(e, &g);
    };
    for (a, p) in v.pieces() {
        for (b, q) in w.pieces() {
            let (t, r) = tensor_tor_resolution(p.group(), q.group());
            add(a + b, t);
            add(a + b - 1, r);
        }
    }
    out
}

/// Join factors of `e`, flattening joins and polynomial sums and splitting
/// suspensions.
fn factors(e: &Expr, atoms: &AtomRegistry, out: &mut Vec<VanishingData>) -> Result<(), Error> {
    match e {
        Expr::Join(a, b) => {
            factors(a, atoms, out)?;
            factors(b, atoms, out)
        }
        Expr::Suspend(inner, m) => {
            factors(inner, atoms, out)?;
            out.push(quad(*m)?);
            Ok(())
        }
        Expr::PolyLiteral(_) => {
            // a pure-power sum is the join of its summands
            let exps = e
                .brieskorn_exponents()
                .ok_or_else(|| Error::Domain(format!("{e} is not a sum of pure powers")))?;
            for a in exps {
                out.push(pow(a)?);
            }
            Ok(())
        }
        leaf => {
            out.push(eval(leaf, atoms)?);
            Ok(())
        }
    }
}

/// Resolution checks for every join node whose operands carry torsion.
fn torsion_joins(
    e: &Expr,
    atoms: &AtomRegistry,
    checks: &mut Vec<Check>,
) -> Result<VanishingData, Error> {
    match e {
        Expr::Join(a, b) => {
            let v = torsion_joins(a, atoms, checks)?;
            let w = torsion_joins(b, atoms, checks)?;
            let joined = join(&v, &w);
            if v.has_torsion() || w.has_torsion() {
                checks.push(Check::compare(
                    "tensor-tor-resolution",
                    groups_text(&groups_of(&joined)),
                    groups_text(&resolution_join_groups(&v, &w)),
                ));
            }
            Ok(joined)
        }
        Expr::Suspend(inner, m) => {
            let v = torsion_joins(inner, atoms, checks)?;
            sebthom_core::graded::suspend(&v, *m)
        }
        leaf => eval(leaf, atoms),
    }
}

/// Runs every applicable oracle against `data`, the evaluation of `expr`.
pub fn verify(
    expr: &Expr,
    data: &VanishingData,
    atoms: &AtomRegistry,
    opts: &Options,
) -> Result<Verification, Error> {
    let mut checks = Vec::new();

    if let Some(exps) = expr.brieskorn_exponents() {
        let enumerated = pham_enumerate(&exps, opts.max_enum)?;
        checks.push(Check::compare("pham-enumeration", compact(data), compact(&enumerated)));
    }

    if let Expr::PolyLiteral(p) = expr {
        let mu = milnor_groebner(p)?;
        checks.push(Check::compare(
            "milnor-groebner",
            total_rank(data).to_string(),
            mu.to_string(),
        ));
    }

    torsion_joins(expr, atoms, &mut checks)?;

    let mut parts = Vec::new();
    factors(expr, atoms, &mut parts)?;
    if parts.len() >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        parts.shuffle(&mut rng);
        let refolded = parts
            .iter()
            .skip(1)
            .fold(parts[0].clone(), |acc, v| join(&acc, v));
        checks.push(Check::compare("join-shuffle", compact(data), compact(&refolded)));
    }

    Ok(Verification {
        seed: opts.seed,
        checks,
    })
}
