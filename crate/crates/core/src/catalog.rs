//! Named symmetric spaces shipped as JSON documents.
//!
//! Simply connected entries use the fundamental weights as basis of `X`;
//! adjoint entries use the simple roots. Further entries can be loaded from a
//! directory of documents in the same format.

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::satake::{spherical_lattice, IRootDatum, SphericalLattice};
use crate::schema::InputDocument;

macro_rules! entries {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../data/catalog/", $name, ".json")))),*]
    };
}

const BUILTIN: &[(&str, &str)] = entries![
    "AI.ad.1",
    "AI.ad.2",
    "AI.ad.3",
    "AI.sl.2",
    "AI.sl.3",
    "AI.sl.4",
    "AII.sl.4",
    "AIII.sl.3",
    "AIII.sl.4",
    "AIII.sl.4.b2",
    "group.A1",
    "group.A2",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    SimplyConnected,
    Adjoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub flavor: Flavor,
    pub document: InputDocument,
}

impl CatalogEntry {
    pub fn from_document(document: InputDocument) -> Result<Self> {
        let name = document
            .name
            .clone()
            .ok_or_else(|| Error::Schema("catalog entries need a name".into()))?;
        let flavor = match document.flavor.as_deref() {
            Some("simply_connected") => Flavor::SimplyConnected,
            Some("adjoint") => Flavor::Adjoint,
            other => return Err(Error::Schema(format!("unknown lattice flavor {other:?}"))),
        };
        Ok(Self {
            name,
            description: document.description.clone().unwrap_or_default(),
            flavor,
            document,
        })
    }

    pub fn iroot_datum(&self) -> Result<IRootDatum> {
        self.document.iroot_datum()
    }
}

/// Names of the built-in entries, sorted.
pub fn names() -> Vec<&'static str> {
    BUILTIN.iter().map(|(n, _)| *n).collect()
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    let (_, text) = BUILTIN
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownSpace(name.to_string()))?;
    CatalogEntry::from_document(InputDocument::from_json(text)?)
}

pub fn get(name: &str) -> Result<IRootDatum> {
    entry(name)?.iroot_datum()
}

pub fn spherical(name: &str) -> Result<Arc<SphericalLattice>> {
    Ok(Arc::new(spherical_lattice(&get(name)?)?))
}

/// Every `*.json` document in `dir`, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<CatalogEntry>> {
    let read = |e: std::io::Error| Error::Schema(format!("{}: {e}", dir.display()));
    let mut out = Vec::new();
    for item in std::fs::read_dir(dir).map_err(read)? {
        let path = item.map_err(read)?.path();
        if path.extension().is_some_and(|e| e == "json") {
            let text = std::fs::read_to_string(&path).map_err(read)?;
            out.push(CatalogEntry::from_document(InputDocument::from_json(&text)?)?);
        }
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::IntMat;

    #[test]
    fn every_entry_builds() {
        for name in names() {
            let e = entry(name).unwrap();
            assert_eq!(e.name, name);
            let ird = e.iroot_datum().unwrap();
            let sl = spherical_lattice(&ird).unwrap();
            assert!(!sl.cartan_type().is_empty(), "{name}");
            assert!(ird.t_coefficients().is_ok(), "{name}");
        }
    }

    #[test]
    fn rank_one_split() {
        let ird = get("AI.sl.2").unwrap();
        assert!(ird.black().is_empty());
        assert_eq!(ird.satake().tau, vec![0]);
        assert_eq!(ird.theta(), &IntMat::from_i64_rows(&[&[-1]]));
    }

    #[test]
    fn group_case() {
        let ird = get("group.A1").unwrap();
        assert_eq!(ird.satake().tau, vec![1, 0]);
        assert!(ird.black().is_empty());
        assert_eq!(ird.theta(), &Matrix::from_i64_rows(&[&[0, -1], &[-1, 0]]));
    }

    #[test]
    fn unknown_names() {
        assert_eq!(get("nope"), Err(Error::UnknownSpace("nope".into())));
    }

    #[test]
    fn t_coefficients_with_a_black_node() {
        let t = get("AIII.sl.4.b2").unwrap().t_coefficients().unwrap();
        assert_eq!(t.get(0, 1), 1.into());
        assert_eq!(t.get(2, 1), 1.into());
        let t = get("AII.sl.4").unwrap().t_coefficients().unwrap();
        assert_eq!(t.get(1, 0), 1.into());
        assert_eq!(t.get(1, 2), 1.into());
    }
}
