//! Tabulated example data: the two six-line normal systems `U1`, `U2`, the
//! four-pair standard arrangement, and their derived tables.
//!
//! The data files live in `fixtures/` next to this crate and are compiled
//! in, so verification needs no file system access.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Deserialize;

use crate::combinat::combinations;
use crate::cycles::{all_cycle_invariants, LineCycle};
use crate::error::{Error, Result};
use crate::field::{OrderedField, Rational};
use crate::formats::{parse_document, AnyDocument, Document};
use crate::linalg::Matrix;
use crate::normal::NormalSystem;
use crate::sphere::AntipodalArrangement;
use crate::symbols::{compatible_symbols, Symbol};

const SOURCES: [(&str, &str); 9] = [
    ("U1", include_str!("../fixtures/U1.json")),
    ("U2", include_str!("../fixtures/U2.json")),
    ("S4-standard", include_str!("../fixtures/S4.json")),
    ("U1-equations", include_str!("../fixtures/U1-equations.json")),
    ("U2-equations", include_str!("../fixtures/U2-equations.json")),
    ("U1-cycles", include_str!("../fixtures/U1-cycles.json")),
    ("U2-cycles", include_str!("../fixtures/U2-cycles.json")),
    ("S4-symbols", include_str!("../fixtures/S4-symbols.json")),
    ("S4-dictionary", include_str!("../fixtures/S4-dictionary.json")),
];

/// Fixtures carrying derived data that [`verify_fixture`] recomputes.
pub const VERIFIABLE: [&str; 6] = [
    "U1-equations",
    "U2-equations",
    "U1-cycles",
    "U2-cycles",
    "S4-symbols",
    "S4-dictionary",
];

pub fn fixture_ids() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|(id, _)| *id)
}

/// The raw JSON text of a fixture.
pub fn fixture_source(id: &str) -> Result<&'static str> {
    SOURCES
        .iter()
        .find(|(name, _)| *name == id)
        .map(|(_, text)| *text)
        .ok_or_else(|| Error::UnknownFixture(id.to_string()))
}

/// `c₁ x_{i₁} + … = d₁ x_{j₁} + … = (v₁, …, v_m)`, with 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Vec<(Rational, usize)>,
    pub rhs: Vec<(Rational, usize)>,
    pub value: Vec<Rational>,
}

impl Equation {
    fn evaluate(side: &[(Rational, usize)], vectors: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        let m = vectors.first().map_or(0, Vec::len);
        let mut out = vec![Rational::zero(); m];
        for (c, i) in side {
            let v = vectors
                .get(*i)
                .ok_or_else(|| Error::Precondition(format!("no vector {}", i + 1)))?;
            for (o, x) in out.iter_mut().zip(v) {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
        Ok(out)
    }

    /// Both sides evaluated on `vectors`.
    pub fn sides(&self, vectors: &[Vec<Rational>]) -> Result<(Vec<Rational>, Vec<Rational>)> {
        Ok((Self::evaluate(&self.lhs, vectors)?, Self::evaluate(&self.rhs, vectors)?))
    }

    pub fn holds(&self, vectors: &[Vec<Rational>]) -> Result<bool> {
        let (l, r) = self.sides(vectors)?;
        Ok(l == r && l == self.value)
    }
}

fn parse_side(s: &str) -> Option<Vec<(Rational, usize)>> {
    s.split('+')
        .map(|term| {
            let term = term.trim();
            let letter = term.find(|c: char| c.is_ascii_alphabetic())?;
            let coeff = match &term[..letter] {
                "" => Rational::one(),
                c => c.parse().ok()?,
            };
            let index: usize = term[letter + 1..].parse().ok()?;
            (index >= 1).then(|| (coeff, index - 1))
        })
        .collect()
}

impl FromStr for Equation {
    type Err = Error;

    /// Parses `3u4 = u1 + 2u2 + 2u3 = (1,2,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad equation {s:?}"));
        let parts: Vec<&str> = s.split('=').collect();
        let [lhs, rhs, value] = parts[..] else {
            return Err(bad());
        };
        let value = value
            .trim()
            .strip_prefix('(')
            .and_then(|v| v.strip_suffix(')'))
            .ok_or_else(bad)?
            .split(',')
            .map(|x| x.trim().parse::<Rational>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Equation {
            lhs: parse_side(lhs).ok_or_else(bad)?,
            rhs: parse_side(rhs).ok_or_else(bad)?,
            value,
        })
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |terms: &[(Rational, usize)]| {
            terms
                .iter()
                .map(|(c, i)| {
                    if *c == Rational::one() {
                        format!("x{}", i + 1)
                    } else {
                        format!("{c}x{}", i + 1)
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let value: Vec<String> = self.value.iter().map(ToString::to_string).collect();
        write!(f, "{} = {} = ({})", side(&self.lhs), side(&self.rhs), value.join(","))
    }
}

#[derive(Debug, Clone)]
pub enum Payload {
    NormalSystem(NormalSystem<Rational>),
    Sphere(AntipodalArrangement<Rational>),
    Equations {
        system: String,
        equations: Vec<Equation>,
    },
    Cycles {
        system: String,
        cycles: BTreeMap<String, LineCycle>,
    },
    Symbols {
        system: String,
        symbols: Vec<Symbol>,
    },
}

#[derive(Debug, Clone)]
pub struct PaperFixture {
    pub id: String,
    pub payload: Payload,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DerivedFile {
    system: String,
    equations: Option<Vec<String>>,
    cycles: Option<BTreeMap<String, String>>,
    symbols: Option<Vec<String>>,
}

pub fn load_fixture(id: &str) -> Result<PaperFixture> {
    let text = fixture_source(id)?;
    let payload = if text.contains("\"system\"") {
        let raw: DerivedFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let system = raw.system;
        match (raw.equations, raw.cycles, raw.symbols) {
            (Some(eqs), None, None) => Payload::Equations {
                system,
                equations: eqs.iter().map(|e| e.parse()).collect::<Result<_>>()?,
            },
            (None, Some(cyc), None) => Payload::Cycles {
                system,
                cycles: cyc.into_iter().map(|(k, v)| Ok((k, v.parse()?))).collect::<Result<_>>()?,
            },
            (None, None, Some(syms)) => Payload::Symbols {
                system,
                symbols: syms.iter().map(|s| s.parse()).collect::<Result<_>>()?,
            },
            _ => return Err(Error::Parse(format!("fixture {id} has an unexpected layout"))),
        }
    } else {
        match parse_document(text)? {
            AnyDocument::Rational(Document::Normal { m, vectors }) => Payload::NormalSystem(NormalSystem::new(m, vectors)?),
            AnyDocument::Rational(Document::Sphere { k, points }) => Payload::Sphere(AntipodalArrangement::new(k, points)?),
            _ => return Err(Error::Parse(format!("fixture {id} has an unexpected layout"))),
        }
    };
    Ok(PaperFixture {
        id: id.to_string(),
        payload,
    })
}

/// The system a derived fixture refers to, as an antipodal arrangement.
fn base_arrangement(system: &str) -> Result<AntipodalArrangement<Rational>> {
    let id = if system == "S4" { "S4-standard" } else { system };
    match load_fixture(id)?.payload {
        Payload::NormalSystem(ns) => ns.as_arrangement(),
        Payload::Sphere(arr) => Ok(arr),
        _ => Err(Error::Precondition(format!("{system} is not a point fixture"))),
    }
}

/// The `U1` or `U2` normal system.
pub fn normal_system(id: &str) -> Result<NormalSystem<Rational>> {
    match load_fixture(id)?.payload {
        Payload::NormalSystem(ns) => Ok(ns),
        _ => Err(Error::Precondition(format!("{id} is not a normal system"))),
    }
}

/// The outcome of recomputing a fixture's derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub id: String,
    pub checked: usize,
    pub diffs: Vec<String>,
}

impl FixtureReport {
    pub fn is_ok(&self) -> bool {
        self.diffs.is_empty()
    }
}

impl fmt::Display for FixtureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "{}: ok ({} checked)", self.id, self.checked)
        } else {
            write!(f, "{}: {} diffs of {} checked", self.id, self.diffs.len(), self.checked)?;
            for d in &self.diffs {
                write!(f, "\n  {d}")?;
            }
            Ok(())
        }
    }
}

pub fn verify_fixture(id: &str) -> Result<FixtureReport> {
    let fixture = load_fixture(id)?;
    let mut diffs = Vec::new();
    let checked = match &fixture.payload {
        Payload::NormalSystem(_) | Payload::Sphere(_) => 1,
        Payload::Equations { system, equations } => {
            let ns = normal_system(system)?;
            let vectors = ns.vectors();
            for (n, eq) in equations.iter().enumerate() {
                let (l, r) = eq.sides(vectors)?;
                let show = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                if l != r || l != eq.value {
                    diffs.push(format!(
                        "equation {}: lhs=({}) rhs=({}) stored=({})",
                        n + 1,
                        show(&l),
                        show(&r),
                        show(&eq.value)
                    ));
                }
            }
            equations.len()
        }
        Payload::Cycles { system, cycles } => {
            let computed = all_cycle_invariants(&base_arrangement(system)?)?;
            let computed: BTreeMap<String, LineCycle> = computed.iter().map(|(k, c)| (k.to_string(), c.clone())).collect();
            for (key, stored) in cycles {
                match computed.get(key) {
                    Some(c) if c == stored => {}
                    Some(c) => diffs.push(format!("{key}: computed {c}, stored {stored}")),
                    None => diffs.push(format!("{key}: not computed")),
                }
            }
            for key in computed.keys().filter(|k| !cycles.contains_key(*k)) {
                diffs.push(format!("{key}: computed but not stored"));
            }
            cycles.len()
        }
        Payload::Symbols { system, symbols } => {
            let computed = compatible_symbols(&base_arrangement(system)?)?;
            let stored: BTreeSet<Symbol> = symbols.iter().copied().collect();
            if stored.len() != symbols.len() {
                diffs.push("stored list has repeated symbols".to_string());
            }
            for s in stored.difference(&computed) {
                diffs.push(format!("{s}: stored but not compatible"));
            }
            for s in computed.difference(&stored) {
                diffs.push(format!("{s}: compatible but not stored"));
            }
            symbols.len()
        }
    };
    Ok(FixtureReport {
        id: fixture.id,
        checked,
        diffs,
    })
}

/// Reports for every verifiable fixture, in [`VERIFIABLE`] order.
pub fn verify_all() -> Result<Vec<FixtureReport>> {
    VERIFIABLE.iter().map(|id| verify_fixture(id)).collect()
}

/// A vertex `{s·x_i, t·x_j}` of the compatible-pair graph, `i < j`.
pub type SignedPair = [(usize, i8); 2];

/// For a normal system in `F^3`, joins `{s_a x_a, s_b x_b}` and
/// `{s_c x_c, s_d x_d}` when the two pairs have a common positive
/// combination (the arcs between them on the sphere cross).
pub fn compatible_pair_graph<T: OrderedField>(ns: &NormalSystem<T>) -> Result<BTreeMap<SignedPair, BTreeSet<SignedPair>>> {
    if ns.m() != 3 {
        return Err(Error::Precondition("the compatible-pair graph is defined for m = 3".into()));
    }
    let mut graph: BTreeMap<SignedPair, BTreeSet<SignedPair>> = BTreeMap::new();
    for quad in combinations(ns.len(), 4) {
        let cols: Vec<Vec<T>> = quad.iter().map(|&i| ns.vectors()[i].clone()).collect();
        let kernel = Matrix::from_cols(&cols)?.kernel_basis();
        let [lambda] = &kernel[..] else {
            return Err(Error::Invalid("four vectors with a degenerate dependency".into()));
        };
        let sign: Vec<i8> = lambda.iter().map(|x| x.sign().to_i8()).collect();
        if sign.contains(&0) {
            return Err(Error::Invalid("three of four vectors are dependent".into()));
        }
        // Σ |λ_t| (sgn λ_t x_t) = 0 splits into two sides for each pairing
        for (a, b, c, d) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
            for s in [1i8, -1] {
                let p = [(quad[a], s * sign[a]), (quad[b], s * sign[b])];
                let q = [(quad[c], -s * sign[c]), (quad[d], -s * sign[d])];
                graph.entry(p).or_default().insert(q);
                graph.entry(q).or_default().insert(p);
            }
        }
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load() {
        for id in fixture_ids() {
            load_fixture(id).unwrap_or_else(|e| panic!("{id}: {e}"));
        }
        assert!(matches!(load_fixture("U3"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn equation_text() {
        let e: Equation = "5u1 + 21u4 = 2u2 + 22u6 = (12,14,14)".parse().unwrap();
        assert_eq!(e.lhs, vec![(Rational::from_i64(5), 0), (Rational::from_i64(21), 3)]);
        assert_eq!(e.to_string(), "5x1 + 21x4 = 2x2 + 22x6 = (12,14,14)");
        assert!("u1 = u2".parse::<Equation>().is_err());
    }

    #[test]
    fn u1_vectors() {
        let ns = normal_system("U1").unwrap();
        assert_eq!(
            ns.vectors()[5],
            vec![
                Rational::from_ratio(6, 11),
                Rational::from_ratio(6, 11),
                Rational::from_ratio(7, 11)
            ]
        );
    }

    #[test]
    fn verification_is_green() {
        for r in verify_all().unwrap() {
            assert!(r.is_ok(), "{r}");
        }
    }

    #[test]
    fn pair_graph_degrees() {
        let g1 = compatible_pair_graph(&normal_system("U1").unwrap()).unwrap();
        let v = [(0, -1), (1, 1)];
        assert_eq!(g1[&v], BTreeSet::from([[(3, 1), (5, -1)]]));
        let g2 = compatible_pair_graph(&normal_system("U2").unwrap()).unwrap();
        assert!(g2.values().all(|adj| adj.len() >= 2));
    }
}
