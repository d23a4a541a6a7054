//! JSON input and output for arrangements, normal systems and invariants.
//!
//! Scalars are strings in the field text form (`"2/3"`, `"1+1*sqrt(2)"`);
//! plain JSON integers are accepted too. A file is read over the rationals
//! unless some entry lies in `Q(√d)`, in which case every entry is lifted to
//! that field.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::arrangement::{ConcurrencySignMap, HyperplaneArrangement};
use crate::cycles::CycleInvariantSet;
use crate::error::{Error, Result};
use crate::field::{FieldTag, FieldValue, OrderedField, QuadExt, Rational};
use crate::normal::NormalSystem;
use crate::sphere::AntipodalArrangement;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    k: Option<usize>,
    m: Option<usize>,
    points: Option<Vec<Vec<Value>>>,
    vectors: Option<Vec<Vec<Value>>>,
    coeffs: Option<Vec<Vec<Value>>>,
    constants: Option<Vec<Value>>,
}

/// A parsed input file, not yet validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document<T> {
    Sphere {
        k: usize,
        points: Vec<Vec<T>>,
    },
    Normal {
        m: usize,
        vectors: Vec<Vec<T>>,
    },
    Arrangement {
        m: usize,
        coeffs: Vec<Vec<T>>,
        constants: Vec<T>,
    },
}

impl<T: OrderedField> Document<T> {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Sphere { .. } => "antipodal arrangement",
            Document::Normal { .. } => "normal system",
            Document::Arrangement { .. } => "hyperplane arrangement",
        }
    }

    /// The vectors whose general position is checked; for an arrangement,
    /// its normals.
    pub fn vectors(&self) -> &[Vec<T>] {
        match self {
            Document::Sphere { points, .. } => points,
            Document::Normal { vectors, .. } => vectors,
            Document::Arrangement { coeffs, .. } => coeffs,
        }
    }

    /// The sphere view used by the cycle invariants.
    pub fn antipodal(&self) -> Result<AntipodalArrangement<T>> {
        match self {
            Document::Sphere { k, points } => AntipodalArrangement::new(*k, points.clone()),
            Document::Normal { m, vectors } => NormalSystem::new(*m, vectors.clone())?.as_arrangement(),
            Document::Arrangement { m, coeffs, .. } => NormalSystem::new(*m, coeffs.clone())?.as_arrangement(),
        }
    }

    /// The normal system: the file itself, the normals of an arrangement, or
    /// the points of a sphere file read in `F^{k+1}`.
    pub fn normal_system(&self) -> Result<NormalSystem<T>> {
        match self {
            Document::Sphere { k, points } => NormalSystem::new(k + 1, points.clone()),
            Document::Normal { m, vectors } => NormalSystem::new(*m, vectors.clone()),
            Document::Arrangement { m, coeffs, .. } => NormalSystem::new(*m, coeffs.clone()),
        }
    }

    pub fn arrangement(&self) -> Result<HyperplaneArrangement<T>> {
        match self {
            Document::Arrangement { m, coeffs, constants } => {
                let ha = HyperplaneArrangement::new(coeffs.clone(), constants.clone())?;
                if ha.m() != *m {
                    return Err(Error::Dimension(format!("declared m={m} but rows have length {}", ha.m())));
                }
                Ok(ha)
            }
            other => Err(Error::Invalid(format!(
                "expected a hyperplane arrangement, found a {}",
                other.kind()
            ))),
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Document<U> {
        let row = |r: &Vec<T>| r.iter().map(&f).collect::<Vec<U>>();
        match self {
            Document::Sphere { k, points } => Document::Sphere {
                k: *k,
                points: points.iter().map(row).collect(),
            },
            Document::Normal { m, vectors } => Document::Normal {
                m: *m,
                vectors: vectors.iter().map(row).collect(),
            },
            Document::Arrangement { m, coeffs, constants } => Document::Arrangement {
                m: *m,
                coeffs: coeffs.iter().map(row).collect(),
                constants: row(constants),
            },
        }
    }

    /// Validates the object the file describes.
    pub fn validate(&self) -> Result<()> {
        match self {
            Document::Sphere { .. } => self.antipodal().map(|_| ()),
            Document::Normal { .. } => self.normal_system().map(|_| ()),
            Document::Arrangement { .. } => self.arrangement().map(|_| ()),
        }
    }
}

/// A document over whichever field its entries require.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyDocument {
    Rational(Document<Rational>),
    Quadratic(Document<QuadExt>),
}

/// Runs a field-generic computation on an [`AnyDocument`].
pub trait DocumentVisitor {
    type Output;
    fn visit<T: OrderedField>(self, doc: &Document<T>) -> Self::Output;
}

impl AnyDocument {
    pub fn accept<V: DocumentVisitor>(&self, v: V) -> V::Output {
        match self {
            AnyDocument::Rational(d) => v.visit(d),
            AnyDocument::Quadratic(d) => v.visit(d),
        }
    }

    /// The document over `Q(sqrt d)`; rational entries are embedded.
    pub fn to_quadratic(&self) -> Document<QuadExt> {
        match self {
            AnyDocument::Rational(d) => d.map(|x| QuadExt::rational(x.clone())),
            AnyDocument::Quadratic(d) => d.clone(),
        }
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            AnyDocument::Rational(_) => FieldTag::Rational,
            AnyDocument::Quadratic(d) => {
                let d = d.vectors().iter().flatten().find_map(QuadExt::d);
                d.map_or(FieldTag::Rational, FieldTag::Quadratic)
            }
        }
    }
}

fn scalar(v: &Value) -> Result<FieldValue> {
    match v {
        Value::String(s) => Ok(s.parse()?),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(FieldValue::Rational(Rational::from_i64(i))),
            None => Err(Error::Parse(format!("non-integer JSON number {n}; write it as a string"))),
        },
        other => Err(Error::Parse(format!("expected a field value, found {other}"))),
    }
}

fn matrix(rows: &[Vec<Value>]) -> Result<Vec<Vec<FieldValue>>> {
    rows.iter().map(|r| r.iter().map(scalar).collect()).collect()
}

fn detect(values: &[&FieldValue]) -> Result<Option<u64>> {
    let mut d = None;
    for v in values {
        if let FieldTag::Quadratic(e) = v.tag() {
            match d {
                None => d = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::Parse(format!("entries mix sqrt({prev}) and sqrt({e})")));
                }
                _ => {}
            }
        }
    }
    Ok(d)
}

fn convert<T: OrderedField>(rows: &[Vec<FieldValue>]) -> Result<Vec<Vec<T>>> {
    rows.iter()
        .map(|r| r.iter().map(|v| T::from_field_value(v).map_err(Error::from)).collect())
        .collect()
}

fn build<T: OrderedField>(shape: &Shape, rows: &[Vec<FieldValue>], constants: &[FieldValue]) -> Result<Document<T>> {
    let rows = convert::<T>(rows)?;
    Ok(match *shape {
        Shape::Sphere(k) => Document::Sphere { k, points: rows },
        Shape::Normal(m) => Document::Normal { m, vectors: rows },
        Shape::Arrangement(m) => Document::Arrangement {
            m,
            coeffs: rows,
            constants: convert::<T>(&[constants.to_vec()])?.remove(0),
        },
    })
}

enum Shape {
    Sphere(usize),
    Normal(usize),
    Arrangement(usize),
}

/// Parses any of the three object files.
pub fn parse_document(text: &str) -> Result<AnyDocument> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let missing = |what: &str| Error::Parse(format!("missing field `{what}`"));
    let (shape, rows, constants) = match raw {
        RawDocument {
            k: Some(k),
            m: None,
            points: Some(p),
            vectors: None,
            coeffs: None,
            constants: None,
        } => (Shape::Sphere(k), matrix(&p)?, Vec::new()),
        RawDocument {
            k: None,
            m: Some(m),
            points: None,
            vectors: Some(v),
            coeffs: None,
            constants: None,
        } => (Shape::Normal(m), matrix(&v)?, Vec::new()),
        RawDocument {
            k: None,
            m: Some(m),
            points: None,
            vectors: None,
            coeffs,
            constants,
        } => {
            let c = coeffs.ok_or_else(|| missing("coeffs"))?;
            let k = constants.ok_or_else(|| missing("constants"))?;
            (
                Shape::Arrangement(m),
                matrix(&c)?,
                k.iter().map(scalar).collect::<Result<_>>()?,
            )
        }
        _ => {
            return Err(Error::Parse(
                "expected {\"k\", \"points\"}, {\"m\", \"vectors\"} or {\"m\", \"coeffs\", \"constants\"}".into(),
            ))
        }
    };
    let expected = match shape {
        Shape::Sphere(k) => k + 1,
        Shape::Normal(m) | Shape::Arrangement(m) => m,
    };
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != expected) {
        return Err(Error::Dimension(format!(
            "row {} has {} entries, expected {expected}",
            i + 1,
            r.len()
        )));
    }
    let all: Vec<&FieldValue> = rows.iter().flatten().chain(&constants).collect();
    match detect(&all)? {
        None => Ok(AnyDocument::Rational(build(&shape, &rows, &constants)?)),
        Some(_) => Ok(AnyDocument::Quadratic(build(&shape, &rows, &constants)?)),
    }
}

fn strings<T: OrderedField>(row: &[T]) -> Value {
    Value::Array(row.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn document_to_json<T: OrderedField>(doc: &Document<T>) -> Value {
    match doc {
        Document::Sphere { k, points } => json!({"k": k, "points": points.iter().map(|r| strings(r)).collect::<Vec<_>>()}),
        Document::Normal { m, vectors } => json!({"m": m, "vectors": vectors.iter().map(|r| strings(r)).collect::<Vec<_>>()}),
        Document::Arrangement { m, coeffs, constants } => json!({
            "m": m,
            "coeffs": coeffs.iter().map(|r| strings(r)).collect::<Vec<_>>(),
            "constants": strings(constants),
        }),
    }
}

pub fn arrangement_to_json<T: OrderedField>(ha: &HyperplaneArrangement<T>) -> Value {
    document_to_json(&Document::Arrangement {
        m: ha.m(),
        coeffs: ha.coeffs().to_vec(),
        constants: ha.constants().to_vec(),
    })
}

pub fn normal_system_to_json<T: OrderedField>(ns: &NormalSystem<T>) -> Value {
    document_to_json(&Document::Normal {
        m: ns.m(),
        vectors: ns.vectors().to_vec(),
    })
}

/// `{"1,2,3": 1, ...}` with 1-based keys in sorted order.
pub fn sign_map_to_json(map: &ConcurrencySignMap) -> Value {
    let entries: Map<String, Value> = map
        .signs
        .iter()
        .map(|(k, v)| {
            let key: Vec<String> = k.iter().map(|i| (i + 1).to_string()).collect();
            (key.join(","), json!(v))
        })
        .collect();
    Value::Object(entries)
}

pub fn sign_map_from_json(value: &Value) -> Result<ConcurrencySignMap> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("sign map must be an object".into()))?;
    let mut signs = BTreeMap::new();
    for (k, v) in obj {
        let key = k
            .split(',')
            .map(|p| match p.trim().parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(Error::Parse(format!("bad sign map key {k:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let s = match v.as_i64() {
            Some(1) => 1,
            Some(-1) => -1,
            _ => return Err(Error::Parse(format!("sign for {k:?} must be 1 or -1"))),
        };
        signs.insert(key, s);
    }
    Ok(ConcurrencySignMap { signs })
}

/// `{"A={} P1+": "(2 4 6 5 3)", ...}`, in key order.
pub fn cycles_to_json(set: &CycleInvariantSet) -> Value {
    let entries: Map<String, Value> = set
        .iter()
        .map(|(k, c)| (k.to_string(), Value::String(c.to_string())))
        .collect();
    Value::Object(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_fields() {
        let doc = parse_document(r#"{"m": 2, "vectors": [["1", "0"], [0, 1], ["1", "1+1*sqrt(2)"]]}"#).unwrap();
        assert_eq!(doc.tag(), FieldTag::Quadratic(2));
        let doc = parse_document(r#"{"k": 1, "points": [["1", "0"], ["0", "1/2"]]}"#).unwrap();
        assert!(matches!(doc, AnyDocument::Rational(Document::Sphere { k: 1, .. })));
        assert!(parse_document(r#"{"m": 2, "vectors": [["1+1*sqrt(2)", "0"], ["1+1*sqrt(3)", "1"]]}"#).is_err());
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_document("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_document(r#"{"m": 2}"#), Err(Error::Parse(_))));
        assert!(matches!(
            parse_document(r#"{"m": 2, "vectors": [["1"]]}"#),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            parse_document(r#"{"m": 1, "vectors": [[0.5]]}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn arrangement_round_trip() {
        let text = r#"{"m": 2, "coeffs": [["1", "1"], ["-1", "0"], ["0", "-1"]], "constants": ["1", "0", "0"]}"#;
        let AnyDocument::Rational(doc) = parse_document(text).unwrap() else {
            panic!("expected rationals")
        };
        let ha = doc.arrangement().unwrap();
        let back = parse_document(&arrangement_to_json(&ha).to_string()).unwrap();
        assert_eq!(back, AnyDocument::Rational(doc));
        let map = crate::arrangement::concurrency_sign_map(&ha).unwrap();
        let js = sign_map_to_json(&map);
        assert_eq!(js.to_string(), r#"{"1,2,3":1}"#);
        assert_eq!(sign_map_from_json(&js).unwrap(), map);
    }
}
