//! The JSON algebra file format.
//!
//! ```json
//! {"dim": 3, "name": "heis3",
//!  "brackets": [{"i": 1, "j": 2, "coeffs": [[3, "1"]]}],
//!  "metric": {"gram": [["1","0","0"], ["0","1","0"], ["0","0","1"]]},
//!  "subalgebras": [{"name": "center", "basis": [["0","0","1"]]}]}
//! ```
//!
//! Indices are 1-based, rationals are strings, unlisted brackets are zero.

use std::collections::{BTreeMap, HashSet};

use liegeo_core::{format_scalar, parse_scalar, LieAlgebra, Matrix, Metric, MetricLieAlgebra, Scalar, Subspace, Vector};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<MetricEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subalgebras: Vec<SubalgebraEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricEntry {
    pub gram: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubalgebraEntry {
    pub name: String,
    pub basis: Vec<Vec<String>>,
}

/// A malformed or invalid file, with the JSON path of the offending field.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct FileError {
    pub path: String,
    pub message: String,
}

fn err(path: impl Into<String>, message: impl Into<String>) -> FileError {
    FileError { path: path.into(), message: message.into() }
}

/// A validated file turned into domain objects. The algebra has not been
/// checked for the Jacobi identity.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub algebra: LieAlgebra,
    pub metric: Option<Metric>,
    pub subalgebras: BTreeMap<String, Subspace>,
}

impl Parsed {
    pub fn metric_algebra(&self) -> MetricLieAlgebra {
        let metric = self.metric.clone().unwrap_or_else(|| Metric::standard(self.algebra.dim()));
        MetricLieAlgebra::new(self.algebra.clone(), metric).expect("validated dimensions")
    }
}

fn rational(s: &str, path: impl FnOnce() -> String) -> Result<Scalar, FileError> {
    parse_scalar(s).ok_or_else(|| err(path(), format!("invalid rational {s:?}")))
}

pub fn parse(bytes: &[u8]) -> Result<AlgebraFile, FileError> {
    let text = std::str::from_utf8(bytes).map_err(|e| err("$", format!("input is not UTF-8: {e}")))?;
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: AlgebraFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        err(if path == "." { "$".to_string() } else { path }, e.into_inner().to_string())
    })?;
    file.validate()?;
    Ok(file)
}

pub fn parse_domain(bytes: &[u8]) -> Result<Parsed, FileError> {
    parse(bytes)?.to_domain()
}

impl AlgebraFile {
    pub fn validate(&self) -> Result<(), FileError> {
        self.to_domain().map(|_| ())
    }

    pub fn to_domain(&self) -> Result<Parsed, FileError> {
        let n = self.dim;
        if n == 0 {
            return Err(err("dim", "dimension must be at least 1"));
        }
        let mut builder = LieAlgebra::builder(n);
        if let Some(name) = &self.name {
            builder = builder.name(name.clone());
        }
        let mut pairs = HashSet::new();
        for (b, entry) in self.brackets.iter().enumerate() {
            let p = |f: &str| format!("brackets[{b}].{f}");
            if entry.i == 0 || entry.i > n {
                return Err(err(p("i"), format!("index {} out of range 1..={n}", entry.i)));
            }
            if entry.j == 0 || entry.j > n {
                return Err(err(p("j"), format!("index {} out of range 1..={n}", entry.j)));
            }
            if entry.i >= entry.j {
                return Err(err(p("i"), format!("need i < j, got i = {}, j = {}", entry.i, entry.j)));
            }
            if !pairs.insert((entry.i, entry.j)) {
                return Err(err(format!("brackets[{b}]"), format!("duplicate entry for ({}, {})", entry.i, entry.j)));
            }
            let mut ks = HashSet::new();
            let mut terms = Vec::new();
            for (c, (k, value)) in entry.coeffs.iter().enumerate() {
                if *k == 0 || *k > n {
                    return Err(err(format!("brackets[{b}].coeffs[{c}][0]"), format!("index {k} out of range 1..={n}")));
                }
                if !ks.insert(*k) {
                    return Err(err(format!("brackets[{b}].coeffs[{c}][0]"), format!("duplicate index {k}")));
                }
                terms.push((*k, rational(value, || format!("brackets[{b}].coeffs[{c}][1]"))?));
            }
            builder = builder.bracket(entry.i, entry.j, &terms).map_err(|e| err(p("i"), e.to_string()))?;
        }
        let algebra = builder.build_unchecked();

        let metric = match &self.metric {
            None => None,
            Some(m) => {
                if m.gram.len() != n {
                    return Err(err("metric.gram", format!("expected {n} rows, found {}", m.gram.len())));
                }
                let mut rows = Vec::with_capacity(n);
                for (r, row) in m.gram.iter().enumerate() {
                    if row.len() != n {
                        return Err(err(format!("metric.gram[{r}]"), format!("expected {n} entries, found {}", row.len())));
                    }
                    let parsed = row
                        .iter()
                        .enumerate()
                        .map(|(c, s)| rational(s, || format!("metric.gram[{r}][{c}]")))
                        .collect::<Result<Vec<_>, _>>()?;
                    rows.push(Vector::new(parsed));
                }
                let gram = Matrix::from_rows(&rows, n);
                Some(Metric::new(gram).map_err(|e| err("metric.gram", e.to_string()))?)
            }
        };

        let mut subalgebras = BTreeMap::new();
        for (s, entry) in self.subalgebras.iter().enumerate() {
            if entry.name.is_empty() {
                return Err(err(format!("subalgebras[{s}].name"), "name must be nonempty"));
            }
            let mut vs = Vec::new();
            for (v, coords) in entry.basis.iter().enumerate() {
                if coords.len() != n {
                    return Err(err(format!("subalgebras[{s}].basis[{v}]"), format!("expected {n} entries, found {}", coords.len())));
                }
                let parsed = coords
                    .iter()
                    .enumerate()
                    .map(|(c, x)| rational(x, || format!("subalgebras[{s}].basis[{v}][{c}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                vs.push(Vector::new(parsed));
            }
            let space = Subspace::span(n, vs);
            if space.dim() != entry.basis.len() {
                return Err(err(format!("subalgebras[{s}].basis"), "basis vectors are linearly dependent"));
            }
            if subalgebras.insert(entry.name.clone(), space).is_some() {
                return Err(err(format!("subalgebras[{s}].name"), format!("duplicate name {:?}", entry.name)));
            }
        }
        Ok(Parsed { algebra, metric, subalgebras })
    }

    pub fn from_domain(algebra: &LieAlgebra, metric: Option<&Metric>, subalgebras: &[(String, Subspace)]) -> Self {
        let mut grouped: BTreeMap<(usize, usize), Vec<(usize, String)>> = BTreeMap::new();
        for (i, j, k, c) in algebra.nonzero_constants() {
            grouped.entry((i, j)).or_default().push((k, format_scalar(c)));
        }
        let brackets = grouped.into_iter().map(|((i, j), coeffs)| BracketEntry { i, j, coeffs }).collect();
        let strings = |v: &Vector| v.coords().iter().map(format_scalar).collect::<Vec<_>>();
        let metric = metric.map(|m| MetricEntry { gram: m.gram().row_vectors().iter().map(strings).collect() });
        let subalgebras = subalgebras
            .iter()
            .map(|(name, s)| SubalgebraEntry { name: name.clone(), basis: s.basis().iter().map(strings).collect() })
            .collect();
        AlgebraFile { dim: algebra.dim(), name: algebra.name().map(str::to_string), brackets, metric, subalgebras }
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use liegeo_core::{filiform::catalog, frac};

    #[test]
    fn heisenberg_file() {
        let p = parse_domain(br#"{"dim":3,"brackets":[{"i":1,"j":2,"coeffs":[[3,"1"]]}]}"#).unwrap();
        assert_eq!(p.algebra, catalog::heis3());
        assert!(p.metric.is_none());
    }

    #[test]
    fn half_in_gram() {
        let p = parse_domain(br#"{"dim":2,"metric":{"gram":[["1","1/2"],["1/2","1"]]}}"#).unwrap();
        assert_eq!(p.metric.unwrap().gram().get(0, 1), &frac(1, 2));
    }

    #[test]
    fn error_paths() {
        let cases: &[(&[u8], &str)] = &[
            (br#"{"dim":3,"brackets":[{"i":2,"j":2,"coeffs":[]}]}"#, "brackets[0].i"),
            (br#"{"dim":3,"brackets":[{"i":1,"j":4,"coeffs":[]}]}"#, "brackets[0].j"),
            (br#"{"dim":3,"brackets":[{"i":1,"j":2,"coeffs":[[3,"x"]]}]}"#, "brackets[0].coeffs[0][1]"),
            (br#"{"dim":3,"brackets":[{"i":1,"j":2,"coeffs":[[9,"1"]]}]}"#, "brackets[0].coeffs[0][0]"),
            (br#"{"dim":2,"metric":{"gram":[["1","2"],["2","1"]]}}"#, "metric.gram"),
            (br#"{"dim":2,"metric":{"gram":[["1","0"],["1","1"]]}}"#, "metric.gram"),
            (br#"{"dim":2,"subalgebras":[{"name":"a","basis":[["1"]]}]}"#, "subalgebras[0].basis[0]"),
            (br#"{"dim":2,"brackets":[{"i":"one","j":2,"coeffs":[]}]}"#, "brackets[0].i"),
            (br#"{"dim":0}"#, "dim"),
            (br#"{"dim":2,"extra":1}"#, "extra"),
            (br#""nope""#, "$"),
        ];
        for (input, path) in cases {
            let e = parse(input).unwrap_err();
            assert_eq!(&e.path, path, "{e}");
        }
        assert!(parse(b"{not json").is_err());
    }

    #[test]
    fn round_trip() {
        for name in catalog::NAMES {
            let params: Vec<String> = match *name {
                "Ln" | "cd2f" => vec!["6".into()],
                "LC" => vec!["2".into(), "-1/3".into(), "5".into()],
                _ => vec![],
            };
            let e = catalog::lookup(name, &params).unwrap();
            let file = AlgebraFile::from_domain(&e.algebra, e.metric.as_ref(), &e.subalgebras);
            let text = file.to_json();
            let again = parse(text.as_bytes()).unwrap();
            assert_eq!(again, file);
            assert_eq!(parse(again.to_json().as_bytes()).unwrap(), again);
            let d = again.to_domain().unwrap();
            assert_eq!(d.algebra, e.algebra);
        }
    }
}
