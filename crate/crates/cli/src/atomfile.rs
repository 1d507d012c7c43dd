//! Loading `.atom.json` files into a registry.
//!
//! Two layouts are accepted: an atom document `{"name": .., "pieces": [..]}`
//! and a report as printed by `eval --format json`, whose `data.pieces` is
//! used. Without a `name` the file stem is the atom name.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use sebthom_core::{AtomDef, AtomRegistry};

use crate::error::CliError;
use crate::json::{to_specs, DataDoc, PieceDoc};

pub const ATOM_EXTENSION: &str = ".atom.json";

#[derive(Deserialize)]
struct AnyDoc {
    name: Option<String>,
    pieces: Option<Vec<PieceDoc>>,
    data: Option<DataDoc>,
}

fn stem(path: &Path) -> String {
    let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    file.strip_suffix(ATOM_EXTENSION)
        .or_else(|| file.strip_suffix(".json"))
        .unwrap_or(&file)
        .to_string()
}

/// Parses and validates one atom file.
pub fn load_atom(path: &Path) -> Result<AtomDef, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_atom(&text, &stem(path)).map_err(|message| CliError::AtomFile {
        path: path.to_owned(),
        message,
    })
}

/// Parses atom JSON; `default_name` is used when the document has none.
pub fn parse_atom(text: &str, default_name: &str) -> Result<AtomDef, String> {
    let doc: AnyDoc = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let pieces = match (doc.pieces, doc.data) {
        (Some(p), _) => p,
        (None, Some(d)) => d.pieces,
        (None, None) => return Err("missing field `pieces`".into()),
    };
    let specs = to_specs(&pieces).map_err(|(d, m)| format!("degree {d}: torsion: {m}"))?;
    let name = doc.name.unwrap_or_else(|| default_name.to_string());
    AtomDef::from_specs(name, &specs).map_err(|e| e.to_string())
}

/// Expands directories to their `*.atom.json` entries, sorted by name.
/// Plain file paths are kept as given, whatever their extension.
pub fn expand_paths(paths: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let entries = fs::read_dir(p).map_err(|source| CliError::Io {
                path: p.clone(),
                source,
            })?;
            let mut found: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.is_file() && f.to_string_lossy().ends_with(ATOM_EXTENSION))
                .collect();
            found.sort();
            out.extend(found);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Loads every atom under `paths`. A name defined by two files is an error.
pub fn load_registry(paths: &[PathBuf]) -> Result<AtomRegistry, CliError> {
    let mut registry = AtomRegistry::new();
    let mut origin: BTreeMap<String, PathBuf> = BTreeMap::new();
    for path in expand_paths(paths)? {
        let atom = load_atom(&path)?;
        if let Some(first) = origin.get(&atom.name) {
            return Err(CliError::DuplicateAtom {
                name: atom.name,
                first: first.clone(),
                second: path,
            });
        }
        origin.insert(atom.name.clone(), path);
        registry.insert(atom);
    }
    Ok(registry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sebthom_core::graded::total_rank;

    #[test]
    fn stems() {
        assert_eq!(stem(Path::new("a/b/torsion-demo.atom.json")), "torsion-demo");
        assert_eq!(stem(Path::new("x.json")), "x");
        assert_eq!(stem(Path::new("plain")), "plain");
    }

    #[test]
    fn atom_document() {
        let a = parse_atom(
            r#"{"name": "t", "pieces": [{"degree": 1, "group": {"free_rank": 0, "torsion": [2, 4]}}]}"#,
            "ignored",
        )
        .unwrap();
        assert_eq!(a.name, "t");
        assert_eq!(total_rank(&a.data), 0);
        assert!(a.data.has_torsion());
    }

    #[test]
    fn report_document_uses_default_name() {
        let a = parse_atom(
            r#"{"input": "pow(3)", "data": {"pieces": [{"degree": 1, "group": {"free_rank": 2, "torsion": []}, "eigenvalues": ["1/3", "2/3"]}]}, "milnor": 2}"#,
            "cube",
        )
        .unwrap();
        assert_eq!(a.name, "cube");
        assert_eq!(a.data, sebthom_core::atoms::pow(3).unwrap());
    }

    #[test]
    fn errors_name_degree_and_field() {
        let bad_chain = r#"{"name": "b", "pieces": [{"degree": 3, "group": {"free_rank": 0, "torsion": [4, 2]}}]}"#;
        let e = parse_atom(bad_chain, "b").unwrap_err();
        assert!(e.starts_with("degree 3: torsion:"), "{e}");
        assert!(e.contains("divisor chain"), "{e}");

        let wrong_count = r#"{"name": "c", "pieces": [{"degree": 2, "group": {"free_rank": 2}, "eigenvalues": ["1/2"]}]}"#;
        let e = parse_atom(wrong_count, "c").unwrap_err();
        assert!(e.starts_with("degree 2: eigenvalues:"), "{e}");

        let bad_number = r#"{"pieces": [{"degree": 5, "group": {"free_rank": 0, "torsion": ["x"]}}]}"#;
        assert!(parse_atom(bad_number, "d").unwrap_err().starts_with("degree 5: torsion:"));

        assert!(parse_atom("{}", "e").unwrap_err().contains("pieces"));
        assert!(parse_atom("[", "e").unwrap_err().starts_with("invalid JSON"));
    }
}
