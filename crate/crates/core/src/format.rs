//! The JSON algebra file format: scalar values travel as exact strings,
//! unlisted brackets are zero, and parsing ends in full validation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{parse_scalar, FieldSpec};
use crate::leibniz::LeibnizAlgebra;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    /// Basis name -> exact scalar literal; omitted coordinates are zero.
    pub value: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<AlgebraFile> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("algebra file serializes");
        s.push('\n');
        s
    }

    /// Parses and validates into an algebra.
    pub fn to_algebra(&self) -> Result<LeibnizAlgebra> {
        self.field.validate()?;
        if self.basis.len() != self.dim {
            return Err(Error::Format(format!(
                "dim is {} but {} basis names are listed",
                self.dim,
                self.basis.len()
            )));
        }
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, n) in self.basis.iter().enumerate() {
            if index.insert(n.as_str(), i).is_some() {
                return Err(Error::Format(format!("duplicate basis name {n:?}")));
            }
        }
        let n = self.dim;
        let mut constants = vec![self.field.zero(); n * n * n];
        let mut seen = std::collections::BTreeSet::new();
        for entry in &self.brackets {
            let i = *index
                .get(entry.left.as_str())
                .ok_or_else(|| Error::Format(format!("unknown basis name {:?}", entry.left)))?;
            let j = *index
                .get(entry.right.as_str())
                .ok_or_else(|| Error::Format(format!("unknown basis name {:?}", entry.right)))?;
            if !seen.insert((i, j)) {
                return Err(Error::Format(format!(
                    "bracket [{}, {}] listed twice",
                    entry.left, entry.right
                )));
            }
            for (name, literal) in &entry.value {
                let k = *index
                    .get(name.as_str())
                    .ok_or_else(|| Error::Format(format!("unknown basis name {name:?}")))?;
                constants[(i * n + j) * n + k] = parse_scalar(literal, &self.field)?;
            }
        }
        LeibnizAlgebra::validate(constants, self.field, self.basis.clone())
    }

    /// Exports an algebra; only nonzero brackets and coordinates appear.
    pub fn from_algebra(name: &str, g: &LeibnizAlgebra) -> AlgebraFile {
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = g.bracket_basis(i, j);
                let value: BTreeMap<String, String> = (0..n)
                    .filter(|&k| !v[k].is_zero())
                    .map(|k| (g.basis_names()[k].clone(), v[k].to_string()))
                    .collect();
                if !value.is_empty() {
                    brackets.push(BracketEntry {
                        left: g.basis_names()[i].clone(),
                        right: g.basis_names()[j].clone(),
                        value,
                    });
                }
            }
        }
        AlgebraFile {
            name: name.to_string(),
            field: g.field(),
            dim: n,
            basis: g.basis_names().to_vec(),
            brackets,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_catalog_entries() {
        for name in crate::catalog::names() {
            let e = crate::catalog::get(name, FieldSpec::Rational).unwrap();
            let file = AlgebraFile::from_algebra(name, &e.algebra);
            let parsed = file.to_algebra().unwrap();
            assert_eq!(parsed, e.algebra, "{name}");
            // and through JSON text
            let again = AlgebraFile::from_json(&file.to_json()).unwrap().to_algebra().unwrap();
            assert_eq!(again, e.algebra, "{name}");
        }
    }

    #[test]
    fn invalid_bracket_is_rejected_with_triple() {
        let text = r#"{
            "name": "bad",
            "field": {"kind": "rational"},
            "dim": 1,
            "basis": ["x"],
            "brackets": [{"left": "x", "right": "x", "value": {"x": "1"}}]
        }"#;
        let err = AlgebraFile::from_json(text).unwrap().to_algebra().unwrap_err();
        assert!(matches!(
            err,
            Error::LeibnizIdentityViolation { i: 0, j: 0, k: 0, .. }
        ));
    }

    #[test]
    fn rejects_structural_problems() {
        let base = r#"{"name":"g","field":{"kind":"rational"},"dim":2,"basis":["x","x"]}"#;
        assert!(AlgebraFile::from_json(base).unwrap().to_algebra().is_err());

        let wrong_dim = r#"{"name":"g","field":{"kind":"rational"},"dim":3,"basis":["x","y"]}"#;
        assert!(AlgebraFile::from_json(wrong_dim).unwrap().to_algebra().is_err());

        let unknown = r#"{"name":"g","field":{"kind":"rational"},"dim":1,"basis":["x"],
            "brackets":[{"left":"q","right":"x","value":{}}]}"#;
        assert!(AlgebraFile::from_json(unknown).unwrap().to_algebra().is_err());

        let dup = r#"{"name":"g","field":{"kind":"rational"},"dim":2,"basis":["x","y"],
            "brackets":[{"left":"x","right":"y","value":{}},{"left":"x","right":"y","value":{}}]}"#;
        assert!(AlgebraFile::from_json(dup).unwrap().to_algebra().is_err());
    }

    #[test]
    fn empty_zero_dimensional_file_is_valid() {
        let text = r#"{"name":"zero","field":{"kind":"rational"},"dim":0,"basis":[]}"#;
        let g = AlgebraFile::from_json(text).unwrap().to_algebra().unwrap();
        assert_eq!(g.dim(), 0);
    }

    #[test]
    fn prime_field_file() {
        let text = r#"{
            "name": "n2mod5",
            "field": {"kind": "prime", "p": 5},
            "dim": 2,
            "basis": ["x", "y"],
            "brackets": [{"left": "x", "right": "x", "value": {"y": "1/2"}}]
        }"#;
        let g = AlgebraFile::from_json(text).unwrap().to_algebra().unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(g.bracket_basis(0, 0)[1].to_string(), "3");
    }
}
