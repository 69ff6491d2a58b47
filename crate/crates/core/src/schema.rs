//! JSON input files.
//!
//! A space file holds exactly one of three descriptions:
//!
//! ```json
//! {"complex": {"vertices": ["a", "b", "c"], "facets": [["a", "b"], ["b", "c"], ["c", "a"]]}}
//! {"profile": {"0": ["1"], "3": ["x_3"]}, "name": "S^3"}
//! {"builtin": "sphere", "params": [3]}
//! ```
//!
//! Builtin parameters are integers, strings, or nested builtin objects
//! (`{"builtin": "product", "params": [{"builtin": "sphere", "params": [1]}, ...]}`).
//! Vertex labels may be strings or integers. An optional `"name"` labels
//! the space in reports.
//!
//! An endomorphism file gives one square matrix per cohomology degree;
//! entries are integers or `"p/q"` strings and unlisted degrees act as the
//! identity:
//!
//! ```json
//! {"degree_blocks": {"3": [[2]]}}
//! ```
//!
//! Malformed JSON or a schema violation is an [`Error::Parse`]; a well-formed
//! file describing an invalid object is an [`Error::InvalidInput`] or
//! [`Error::Shape`].

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::qlinalg::{QMatrix, Rational};
use crate::spaces::{BuiltinSpace, CohomologyEndomorphism, CohomologyProfile, SimplicialComplex};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceFile {
    complex: Option<ComplexFile>,
    profile: Option<BTreeMap<String, Vec<String>>>,
    builtin: Option<String>,
    params: Option<Vec<Value>>,
    name: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    vertices: Vec<Label>,
    facets: Vec<Vec<Label>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Label {
    Text(String),
    Int(i64),
}

impl From<Label> for String {
    fn from(label: Label) -> String {
        match label {
            Label::Text(s) => s,
            Label::Int(i) => i.to_string(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EndomorphismFile {
    degree_blocks: BTreeMap<String, Vec<Vec<Rational>>>,
}

/// A parsed space file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceDescription {
    Complex {
        name: String,
        complex: SimplicialComplex,
    },
    Profile(CohomologyProfile),
    Builtin {
        name: Option<String>,
        space: BuiltinSpace,
    },
}

impl SpaceDescription {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: SpaceFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let given = [
            file.complex.is_some(),
            file.profile.is_some(),
            file.builtin.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            return Err(Error::Parse(
                "space file needs exactly one of \"complex\", \"profile\", \"builtin\"".into(),
            ));
        }
        if file.params.is_some() && file.builtin.is_none() {
            return Err(Error::Parse(
                "\"params\" is only valid with \"builtin\"".into(),
            ));
        }

        if let Some(c) = file.complex {
            let complex = SimplicialComplex::new(
                c.vertices.into_iter().map(String::from),
                c.facets
                    .into_iter()
                    .map(|f| f.into_iter().map(String::from).collect::<Vec<_>>()),
            )?;
            return Ok(SpaceDescription::Complex {
                name: file.name.unwrap_or_else(|| "complex".into()),
                complex,
            });
        }
        if let Some(p) = file.profile {
            let entries = p
                .into_iter()
                .map(|(k, labels)| {
                    k.trim().parse::<usize>().map(|k| (k, labels)).map_err(|_| {
                        Error::Parse(format!(
                            "profile degree {k:?} is not a non-negative integer"
                        ))
                    })
                })
                .collect::<Result<_>>()?;
            let profile =
                CohomologyProfile::new(file.name.unwrap_or_else(|| "profile".into()), entries)?;
            return Ok(SpaceDescription::Profile(profile));
        }
        let mut tokens = vec![file.builtin.expect("checked above")];
        flatten_params(file.params.unwrap_or_default(), &mut tokens)?;
        Ok(SpaceDescription::Builtin {
            name: file.name,
            space: BuiltinSpace::parse(&tokens)?,
        })
    }

    pub fn name(&self) -> String {
        match self {
            SpaceDescription::Complex { name, .. } => name.clone(),
            SpaceDescription::Profile(p) => p.name().to_string(),
            SpaceDescription::Builtin { name, space } => {
                name.clone().unwrap_or_else(|| space.display_name())
            }
        }
    }

    pub fn profile(&self) -> CohomologyProfile {
        match self {
            SpaceDescription::Complex { name, complex } => complex.cohomology(name.clone()),
            SpaceDescription::Profile(p) => p.clone(),
            SpaceDescription::Builtin { space, .. } => space.profile().with_name(self.name()),
        }
    }
}

fn flatten_params(params: Vec<Value>, tokens: &mut Vec<String>) -> Result<()> {
    for p in params {
        match p {
            Value::Number(n) => tokens.push(n.to_string()),
            Value::String(s) => tokens.push(s),
            Value::Object(mut obj) => {
                let Some(Value::String(name)) = obj.remove("builtin") else {
                    return Err(Error::Parse(
                        "nested parameter needs a \"builtin\" name".into(),
                    ));
                };
                let nested = match obj.remove("params") {
                    None => Vec::new(),
                    Some(Value::Array(v)) => v,
                    Some(_) => return Err(Error::Parse("\"params\" must be an array".into())),
                };
                if !obj.is_empty() {
                    return Err(Error::Parse("unexpected keys in nested builtin".into()));
                }
                tokens.push(name);
                flatten_params(nested, tokens)?;
            }
            other => {
                return Err(Error::Parse(format!(
                    "unsupported builtin parameter {other}"
                )))
            }
        }
    }
    Ok(())
}

/// Parses an endomorphism file against the profile it acts on.
pub fn parse_endomorphism(
    text: &str,
    profile: &CohomologyProfile,
) -> Result<CohomologyEndomorphism> {
    let file: EndomorphismFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut blocks = BTreeMap::new();
    for (k, rows) in file.degree_blocks {
        let degree = k.trim().parse::<usize>().map_err(|_| {
            Error::Parse(format!("block degree {k:?} is not a non-negative integer"))
        })?;
        blocks.insert(degree, QMatrix::from_rows(rows)?);
    }
    CohomologyEndomorphism::new(profile, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_file() {
        let d = SpaceDescription::from_json(
            r#"{"complex": {"vertices": ["a", "b", "c"], "facets": [["a","b"],["b","c"],["c","a"]]}}"#,
        )
        .unwrap();
        assert_eq!(d.profile().betti_numbers(), vec![1, 1]);
        assert_eq!(d.name(), "complex");
    }

    #[test]
    fn integer_vertex_labels() {
        let d = SpaceDescription::from_json(
            r#"{"complex": {"vertices": [0, 1, 2], "facets": [[0, 1, 2]]}, "name": "disk"}"#,
        )
        .unwrap();
        assert_eq!(d.profile().betti_numbers(), vec![1]);
        assert_eq!(d.profile().name(), "disk");
    }

    #[test]
    fn profile_file() {
        let d = SpaceDescription::from_json(r#"{"profile": {"0": ["1"], "3": ["x_3"]}}"#).unwrap();
        assert_eq!(d.profile().labels(3), ["x_3"]);
    }

    #[test]
    fn builtin_files() {
        let d = SpaceDescription::from_json(r#"{"builtin": "sphere", "params": [3]}"#).unwrap();
        assert_eq!(d.profile().name(), "S^3");
        let t2 = SpaceDescription::from_json(
            r#"{"builtin": "product", "params": [{"builtin": "sphere", "params": [1]}, {"builtin": "sphere", "params": ["1"]}]}"#,
        )
        .unwrap();
        assert_eq!(t2.profile().betti_numbers(), vec![1, 2, 1]);
        let flat =
            SpaceDescription::from_json(r#"{"builtin": "product", "params": ["point", "cp", 2]}"#)
                .unwrap();
        assert_eq!(flat.profile().betti_numbers(), vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "not json",
            "{}",
            r#"{"builtin": "point", "profile": {"0": ["1"]}}"#,
            r#"{"profile": {"zero": ["1"]}}"#,
            r#"{"complex": {"vertices": ["a"]}}"#,
            r#"{"builtin": "sphere", "params": [[3]]}"#,
            r#"{"profile": {"0": ["1"]}, "params": [1]}"#,
            r#"{"shape": "torus"}"#,
        ] {
            assert!(
                matches!(SpaceDescription::from_json(bad), Err(Error::Parse(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn validation_errors() {
        for bad in [
            r#"{"complex": {"vertices": ["a", "b"], "facets": [["a", "x"]]}}"#,
            r#"{"complex": {"vertices": ["a"], "facets": []}}"#,
            r#"{"builtin": "torus"}"#,
            r#"{"builtin": "sphere", "params": [0]}"#,
            r#"{"profile": {"0": ["1"], "2": ["1"]}}"#,
        ] {
            assert!(
                matches!(
                    SpaceDescription::from_json(bad),
                    Err(Error::InvalidInput(_))
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn endomorphism_files() {
        let s3 = BuiltinSpace::Sphere(3).profile();
        let f = parse_endomorphism(r#"{"degree_blocks": {"3": [[2]]}}"#, &s3).unwrap();
        assert_eq!(
            f.block(3).unwrap(),
            &QMatrix::from_int_rows(&[[2]]).unwrap()
        );
        assert!(f.block(0).unwrap().is_identity());

        let f = parse_endomorphism(r#"{"degree_blocks": {"3": [["-1/2"]]}}"#, &s3).unwrap();
        assert_eq!(
            f.block(3).unwrap().get(0, 0),
            &"-1/2".parse::<Rational>().unwrap()
        );

        let wrong = parse_endomorphism(r#"{"degree_blocks": {"3": [[1, 0], [0, 1]]}}"#, &s3);
        assert!(matches!(wrong, Err(Error::Shape(_))));
        let ragged = parse_endomorphism(r#"{"degree_blocks": {"3": [[1], [0, 1]]}}"#, &s3);
        assert!(matches!(ragged, Err(Error::Shape(_))));
        let junk = parse_endomorphism(r#"{"degree_blocks": {"3": [["two"]]}}"#, &s3);
        assert!(matches!(junk, Err(Error::Parse(_))));
    }
}
