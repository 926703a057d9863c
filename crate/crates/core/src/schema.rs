//! The JSON input format shared by the catalog files and the command line.
//!
//! Node labels are 1-based. Matrices are lists of rows; each simple root and
//! coroot is one row. Integers may be JSON numbers or decimal strings.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::root_datum::RootDatum;
use crate::satake::{build_iroot_datum, IRootDatum, SatakeData};
use crate::{Int, IntMat, IntVec};

/// An arbitrary-precision integer that serializes as a JSON number when it
/// fits in `i64` and as a string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JsonInt(pub Int);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct IntVisitor;
        impl Visitor<'_> for IntVisitor {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(Int::from(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(Int::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
                Int::from_str(v.trim()).map(JsonInt).map_err(E::custom)
            }
        }
        d.deserialize_any(IntVisitor)
    }
}

pub fn to_json_vec(v: &IntVec) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

pub fn to_json_rows(m: &IntMat) -> Vec<Vec<JsonInt>> {
    m.row_vectors().iter().map(to_json_vec).collect()
}

fn from_json_vec(v: &[JsonInt]) -> IntVec {
    v.iter().map(|x| x.0.clone()).collect()
}

fn to_labels(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn from_labels(v: &[usize], n: usize) -> Result<Vec<usize>> {
    v.iter()
        .map(|&l| if l == 0 || l > n { Err(Error::BadLabel(l)) } else { Ok(l - 1) })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootDatumDoc {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<Vec<JsonInt>>>,
    pub simple_roots: Vec<Vec<JsonInt>>,
    pub simple_coroots: Vec<Vec<JsonInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SatakeDoc {
    #[serde(rename = "I_bullet")]
    pub i_bullet: Vec<usize>,
    pub tau: Vec<usize>,
    #[serde(rename = "tau_X")]
    pub tau_x: Vec<Vec<JsonInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidDoc {
    pub generators: Vec<Vec<JsonInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    #[serde(rename = "J1")]
    pub j1: Vec<usize>,
    #[serde(rename = "J2")]
    pub j2: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flavor: Option<String>,
    pub root_datum: RootDatumDoc,
    pub satake: SatakeDoc,
    #[serde(rename = "I_circ_prime", default, skip_serializing_if = "Option::is_none")]
    pub i_circ_prime: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoid: Option<MonoidDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairDoc>,
}

fn matrix(rows: &[Vec<JsonInt>], cols: usize, what: &str) -> Result<IntMat> {
    if let Some(r) = rows.iter().find(|r| r.len() != cols) {
        return Err(Error::Schema(format!(
            "{what}: row of length {} where {cols} was expected",
            r.len()
        )));
    }
    Ok(Matrix::from_rows(
        rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect(),
        cols,
    ))
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn root_datum(&self) -> Result<RootDatum> {
        let rd = &self.root_datum;
        let rank = rd.rank;
        let roots = matrix(&rd.simple_roots, rank, "simple_roots")?.row_vectors();
        let coroots = matrix(&rd.simple_coroots, rank, "simple_coroots")?.row_vectors();
        let datum = RootDatum::new(rank, roots, coroots)?;
        if let Some(c) = &rd.cartan {
            let n = datum.size();
            if c.len() != n || matrix(c, n, "cartan")? != *datum.cartan() {
                return Err(Error::InvalidRootDatum(
                    "cartan does not match the pairing of the simple coroots and roots".into(),
                ));
            }
        }
        Ok(datum)
    }

    pub fn iroot_datum(&self) -> Result<IRootDatum> {
        let datum = self.root_datum()?;
        let n = datum.size();
        let s = &self.satake;
        let satake = SatakeData {
            black: from_labels(&s.i_bullet, n)?,
            tau: from_labels(&s.tau, n)?,
            tau_x: matrix(&s.tau_x, datum.rank(), "tau_X")?,
            white_representatives: self
                .i_circ_prime
                .as_ref()
                .map(|v| from_labels(v, n))
                .transpose()?,
        };
        if s.tau_x.len() != datum.rank() {
            return Err(Error::Schema(format!(
                "tau_X has {} rows, expected {}",
                s.tau_x.len(),
                datum.rank()
            )));
        }
        build_iroot_datum(datum, satake)
    }

    /// Monoid generators in `X`-coordinates, if present.
    pub fn monoid_generators(&self) -> Option<Vec<IntVec>> {
        self.monoid
            .as_ref()
            .map(|m| m.generators.iter().map(|g| from_json_vec(g)).collect())
    }

    /// The pair `(J1, J2)` as 0-based node indices, if present.
    pub fn pair(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        let n = self.root_datum.simple_roots.len();
        self.pair
            .as_ref()
            .map(|p| Ok((from_labels(&p.j1, n)?, from_labels(&p.j2, n)?)))
            .transpose()
    }

    /// The document describing an existing datum.
    pub fn from_iroot_datum(ird: &IRootDatum) -> Self {
        let datum = ird.datum();
        Self {
            name: None,
            description: None,
            flavor: None,
            root_datum: RootDatumDoc {
                rank: datum.rank(),
                cartan: Some(to_json_rows(datum.cartan())),
                simple_roots: datum.simple_roots().iter().map(to_json_vec).collect(),
                simple_coroots: datum.simple_coroots().iter().map(to_json_vec).collect(),
            },
            satake: SatakeDoc {
                i_bullet: to_labels(ird.black()),
                tau: to_labels(&ird.satake().tau),
                tau_x: to_json_rows(&ird.satake().tau_x),
            },
            i_circ_prime: Some(to_labels(ird.white_prime())),
            monoid: None,
            pair: None,
        }
    }
}

/// Parses a vector written as a JSON array.
pub fn parse_vector(text: &str) -> Result<IntVec> {
    let v: Vec<JsonInt> = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    Ok(Vector::new(v.into_iter().map(|x| x.0).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const RANK_ONE: &str = r#"{
        "root_datum": {"rank": 1, "cartan": [[2]], "simple_roots": [[2]], "simple_coroots": [[1]]},
        "satake": {"I_bullet": [], "tau": [1], "tau_X": [[1]]}
    }"#;

    #[test]
    fn parses_and_round_trips() {
        let doc = InputDocument::from_json(RANK_ONE).unwrap();
        let ird = doc.iroot_datum().unwrap();
        assert_eq!(ird.theta(), &IntMat::from_i64_rows(&[&[-1]]));
        let again = InputDocument::from_iroot_datum(&ird);
        let back = again.iroot_datum().unwrap();
        assert_eq!(back.theta(), ird.theta());
        assert_eq!(back.white_prime(), ird.white_prime());
        assert_eq!(back.datum(), ird.datum());
    }

    #[test]
    fn big_integers_use_strings() {
        let big = JsonInt(Int::from(i64::MAX) * 4);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, "\"36893488147419103228\"");
        let back: JsonInt = serde_json::from_str(&s).unwrap();
        assert_eq!(back, big);
        assert_eq!(serde_json::to_string(&JsonInt(Int::from(-3))).unwrap(), "-3");
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(InputDocument::from_json("{}"), Err(Error::Schema(_))));
        let bad = RANK_ONE.replace("\"cartan\": [[2]]", "\"cartan\": [[3]]");
        assert!(InputDocument::from_json(&bad).unwrap().iroot_datum().is_err());
        let bad = RANK_ONE.replace("\"tau\": [1]", "\"tau\": [2]");
        assert_eq!(
            InputDocument::from_json(&bad).unwrap().iroot_datum(),
            Err(Error::BadLabel(2))
        );
    }
}
