use std::path::Path;

use apa_core::arrangement::{
    arrangements_isomorphic, concurrency_sign_map, formula_counts, isomorphisms_by_definition, region_counts, sigma_branch,
    SigmaBranch,
};
use apa_core::cycles::all_cycle_invariants;
use apa_core::fixtures::verify_all;
use apa_core::formats::{cycles_to_json, parse_document, sign_map_to_json, AnyDocument, Document};
use apa_core::normal::{find_isomorphisms, oracle_isomorphisms};
use apa_core::symbols::{compatible_symbols, standard_arrangement};
use apa_core::{Error, FieldTag, IsoWitness, NormalSystem, OrderedField, Rational, SignedBijection};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::Format;

pub struct Options {
    pub oracle: bool,
    pub seed: Option<u64>,
}

/// A finished command: both renderings and the exit code.
pub struct Report {
    text: String,
    json: Value,
    pub code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: 0 }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => format!(
                "{}\n",
                serde_json::to_string_pretty(&self.json).expect("json values serialize")
            ),
        }
    }
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Field(_) | Error::TooLarge(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<Report, Failure>;

fn read(path: &Path) -> Result<AnyDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Runs `$body` with `$d` bound to the document over its own field.
macro_rules! with_doc {
    ($doc:expr, |$d:ident| $body:expr) => {
        match $doc {
            AnyDocument::Rational($d) => $body,
            AnyDocument::Quadratic($d) => $body,
        }
    };
}

/// Runs `$body` with both documents over a common field.
macro_rules! with_pair {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (AnyDocument::Rational($x), AnyDocument::Rational($y)) => $body,
            (a, b) => match (a.tag(), b.tag()) {
                (FieldTag::Quadratic(d), FieldTag::Quadratic(e)) if d != e => Err(Failure::usage(format!(
                    "inputs use different fields: Q(sqrt({d})) and Q(sqrt({e}))"
                ))),
                _ => {
                    let ($x, $y) = (&a.to_quadratic(), &b.to_quadratic());
                    $body
                }
            },
        }
    };
}

pub fn validate(path: &Path) -> CmdResult {
    let doc = read(path)?;
    let (kind, result) = with_doc!(&doc, |d| (d.kind(), d.validate()));
    match result {
        Ok(()) => Ok(Report::ok(
            format!("valid {kind}\n"),
            json!({"valid": true, "kind": kind, "field": doc.tag().to_string()}),
        )),
        Err(e @ (Error::Parse(_) | Error::Field(_))) => Err(e.into()),
        Err(e) => Ok(Report {
            text: format!("invalid {kind}: {e}\n"),
            json: json!({"valid": false, "kind": kind, "diagnosis": e.to_string()}),
            code: 2,
        }),
    }
}

pub fn cycles(path: &Path) -> CmdResult {
    let doc = read(path)?;
    let set = with_doc!(&doc, |d| all_cycle_invariants(&d.antipodal()?))?;
    let text: String = set.iter().map(|(k, c)| format!("{k} {c}\n")).collect();
    Ok(Report::ok(text, cycles_to_json(&set)))
}

fn witness_json(w: &SignedBijection) -> Value {
    json!({
        "pi": w.pi.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "mu": w.mu,
        "map": w.to_string(),
    })
}

fn ns_witnesses<T: OrderedField>(a: &Document<T>, b: &Document<T>, oracle: bool) -> Result<Vec<IsoWitness>, Failure> {
    let (ns1, ns2) = (a.normal_system()?, b.normal_system()?);
    Ok(if oracle {
        oracle_isomorphisms(&ns1, &ns2)?
    } else {
        find_isomorphisms(&ns1, &ns2)?
    })
}

pub fn ns_iso(first: &Path, second: &Path, opts: &Options) -> CmdResult {
    let (a, b) = (read(first)?, read(second)?);
    let witnesses = with_pair!(&a, &b, |x, y| ns_witnesses(x, y, opts.oracle))?;
    if witnesses.is_empty() {
        return Ok(Report {
            text: "non-isomorphic\n".into(),
            json: json!({"verdict": "non-isomorphic", "witnesses": []}),
            code: 3,
        });
    }
    let mut text = String::from("isomorphic\n");
    for w in &witnesses {
        text.push_str(&format!("{w}\n"));
    }
    let list: Vec<Value> = witnesses
        .iter()
        .map(|w| {
            let mut v = witness_json(&w.map);
            v["flipped"] = json!(w.flipped);
            v
        })
        .collect();
    Ok(Report::ok(text, json!({"verdict": "isomorphic", "witnesses": list})))
}

fn ha_decision<T: OrderedField>(
    a: &Document<T>,
    b: &Document<T>,
    oracle: bool,
) -> Result<Option<(SignedBijection, Option<SigmaBranch>)>, Failure> {
    let (ha1, ha2) = (a.arrangement()?, b.arrangement()?);
    if oracle {
        if ha1.m() != ha2.m() || ha1.len() != ha2.len() {
            return Err(Error::Dimension("arrangements differ in size".into()).into());
        }
        let s1 = concurrency_sign_map(&ha1)?;
        match isomorphisms_by_definition(&ha1, &ha2)?.into_iter().next() {
            Some(phi) => {
                let branch = sigma_branch(&s1, &ha2, &phi)?;
                Ok(Some((phi, branch)))
            }
            None => Ok(None),
        }
    } else {
        Ok(arrangements_isomorphic(&ha1, &ha2)?.map(|(w, branch)| (w.map, Some(branch))))
    }
}

pub fn ha_iso(first: &Path, second: &Path, opts: &Options) -> CmdResult {
    let (a, b) = (read(first)?, read(second)?);
    match with_pair!(&a, &b, |x, y| ha_decision(x, y, opts.oracle))? {
        None => Ok(Report {
            text: "non-isomorphic\n".into(),
            json: json!({"verdict": "non-isomorphic"}),
            code: 3,
        }),
        Some((w, branch)) => {
            let tag = branch.map(|b| b.to_string());
            let text = match &tag {
                Some(t) => format!("isomorphic branch={t}\n{w}\n"),
                None => format!("isomorphic\n{w}\n"),
            };
            Ok(Report::ok(
                text,
                json!({"verdict": "isomorphic", "witness": witness_json(&w), "branch": tag}),
            ))
        }
    }
}

pub fn regions(path: &Path) -> CmdResult {
    let doc = read(path)?;
    let (m, n, got) = with_doc!(&doc, |d| {
        let ha = d.arrangement()?;
        (ha.m(), ha.len(), region_counts(&ha)?)
    });
    let want = formula_counts(n, m);
    let (total, bounded, unbounded) = got;
    let mut text = format!("total={total} bounded={bounded} unbounded={unbounded} formula=");
    if got == want {
        text.push_str("OK\n");
    } else {
        text.push_str(&format!("MISMATCH expected {}/{}/{}\n", want.0, want.1, want.2));
    }
    let json = json!({
        "total": total,
        "bounded": bounded,
        "unbounded": unbounded,
        "formula": {"total": want.0, "bounded": want.1, "unbounded": want.2},
        "formula_ok": got == want,
    });
    Ok(Report {
        text,
        json,
        code: if got == want { 0 } else { 2 },
    })
}

pub fn signs(path: &Path) -> CmdResult {
    let doc = read(path)?;
    let map = with_doc!(&doc, |d| concurrency_sign_map(&d.arrangement()?))?;
    Ok(Report::ok(map.to_string(), sign_map_to_json(&map)))
}

fn random_four_pairs(seed: u64) -> NormalSystem<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let vectors: Vec<Vec<Rational>> = (0..4)
            .map(|_| (0..3).map(|_| Rational::from_i64(rng.gen_range(-5..=5))).collect())
            .collect();
        if let Ok(ns) = NormalSystem::new(3, vectors) {
            return ns;
        }
    }
}

pub fn symbols(path: Option<&Path>, opts: &Options) -> CmdResult {
    let set = match (path, opts.seed) {
        (Some(p), _) => {
            let doc = read(p)?;
            with_doc!(&doc, |d| compatible_symbols(&d.antipodal()?))?
        }
        (None, Some(seed)) => {
            let ns = random_four_pairs(seed);
            compatible_symbols(&ns.as_arrangement()?)?
        }
        (None, None) => compatible_symbols(&standard_arrangement())?,
    };
    let list: Vec<String> = set.iter().map(ToString::to_string).collect();
    let text: String = list.iter().map(|s| format!("{s}\n")).collect();
    Ok(Report::ok(text, json!({"symbols": list})))
}

pub fn verify_paper() -> CmdResult {
    let reports = verify_all()?;
    let good = reports.iter().filter(|r| r.is_ok()).count();
    let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    text.push_str(&format!("fixtures: {good}/{} verified\n", reports.len()));
    let list: Vec<Value> = reports
        .iter()
        .map(|r| json!({"id": r.id, "checked": r.checked, "diffs": r.diffs}))
        .collect();
    Ok(Report {
        text,
        json: json!({"fixtures": list, "verified": good, "total": reports.len()}),
        code: if good == reports.len() { 0 } else { 2 },
    })
}
