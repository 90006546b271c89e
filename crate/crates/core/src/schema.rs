//! JSON documents: the algebra input schema and the report shapes shared by
//! the command line and the browser demo.
//!
//! An algebra is either `{"n": 5, "relations": [[2,2],[3,2],[5,3]]}` or
//! `{"kupisch": [3,2,2,4,3]}`; exactly one of `relations` / `kupisch` appears.

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::algebra::{KupischSeries, NakayamaAlgebra, Relation};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::harness::{verify, Check};
use crate::resolution::ResolutionQuiver;
use crate::unamalgamation::{check_step, Reduction, UnamalgamationStep};

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn as_count(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(path, "expected a nonnegative integer"))
}

/// Parses an algebra document, validating it. Errors carry a JSON path.
pub fn parse_algebra(text: &str) -> Result<NakayamaAlgebra> {
    let value: Value = serde_json::from_str(text).map_err(|e| schema("$", format!("malformed JSON: {e}")))?;
    algebra_from_value(&value)
}

pub fn algebra_from_value(value: &Value) -> Result<NakayamaAlgebra> {
    let obj = value.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    if let Some(key) = obj
        .keys()
        .find(|k| !matches!(k.as_str(), "n" | "relations" | "kupisch"))
    {
        return Err(schema(format!("$.{key}"), "unknown key"));
    }
    match (obj.get("relations"), obj.get("kupisch")) {
        (Some(_), Some(_)) => Err(schema("$", "give either `relations` or `kupisch`, not both")),
        (None, None) => Err(schema("$", "missing `relations` or `kupisch`")),
        (Some(rels), None) => {
            let n = as_count(obj.get("n").ok_or_else(|| schema("$.n", "missing `n`"))?, "$.n")?;
            let list = rels
                .as_array()
                .ok_or_else(|| schema("$.relations", "expected an array"))?;
            let mut relations = Vec::with_capacity(list.len());
            for (i, item) in list.iter().enumerate() {
                let path = format!("$.relations[{i}]");
                let pair = item
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| schema(&path, "expected [start, length]"))?;
                relations.push(Relation::new(
                    as_count(&pair[0], &format!("{path}[0]"))?,
                    as_count(&pair[1], &format!("{path}[1]"))?,
                ));
            }
            NakayamaAlgebra::new(n, relations).map_err(|e| locate(e, "relations"))
        }
        (None, Some(c)) => {
            if obj.contains_key("n") {
                return Err(schema("$.n", "`n` is implied by the Kupisch series"));
            }
            let list = c.as_array().ok_or_else(|| schema("$.kupisch", "expected an array"))?;
            let entries = list
                .iter()
                .enumerate()
                .map(|(i, v)| as_count(v, &format!("$.kupisch[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            let series = KupischSeries::new(entries).map_err(|e| locate(e, "kupisch"))?;
            Ok(NakayamaAlgebra::from_kupisch(&series))
        }
    }
}

/// JSON path of the entry a validation error refers to.
pub fn error_path(err: &Error, key: &str) -> String {
    match err {
        Error::StartOutOfRange { index, .. } | Error::ZeroLength { index } => format!("$.{key}[{index}]"),
        Error::DuplicateStart { second, .. } => format!("$.{key}[{second}]"),
        Error::RedundantRelation { container, .. } => format!("$.{key}[{container}]"),
        Error::KupischEntryZero { position } | Error::InvalidKupisch { position } => format!("$.{key}[{position}]"),
        Error::QuiverTooSmall { .. } | Error::QuiverTooLarge { .. } if key == "relations" => "$.n".into(),
        Error::Schema { path, .. } | Error::At { path, .. } => path.clone(),
        _ => format!("$.{key}"),
    }
}

fn locate(err: Error, key: &str) -> Error {
    match err {
        Error::Schema { .. } | Error::At { .. } => err,
        other => Error::At {
            path: error_path(&other, key),
            source: Box::new(other),
        },
    }
}

pub fn algebra_to_value(algebra: &NakayamaAlgebra) -> Value {
    json!({ "n": algebra.n(), "relations": algebra.relations() })
}

/// `serialize_with` adapter producing the input schema.
pub fn serialize_algebra<S: Serializer>(algebra: &NakayamaAlgebra, s: S) -> std::result::Result<S::Ok, S::Error> {
    algebra_to_value(algebra).serialize(s)
}

/// Everything computed about one algebra, as consumed by the CLI's JSON mode
/// and the browser demo.
pub fn analysis_report(algebra: &NakayamaAlgebra) -> Value {
    let verdict = verify(algebra, &Check::ALL.into());
    let rq = ResolutionQuiver::build(algebra);
    let l = SimplicialComplex::build(algebra);
    let n = algebra.n();
    let simplices: Vec<&Vec<usize>> = (0..l.dimension().map_or(0, |d| d + 1))
        .flat_map(|p| l.simplices(p))
        .collect();
    json!({
        "algebra": algebra_to_value(algebra),
        "kupisch": algebra.kupisch(),
        "class": algebra.class(),
        "relation_words": algebra.relations().iter().map(|r| r.word(n)).collect::<Vec<_>>(),
        "resolution_quiver": {
            "arrows": rq.arrows(),
            "components": rq.components,
            "leaves": rq.leaves(),
        },
        "weights": verdict.weights,
        "complex": {
            "vertices": l.vertices().iter().map(|v| v.relation.word(n)).collect::<Vec<_>>(),
            "simplices": simplices,
            "maximal_simplices": l.maximal_simplices(),
            "f_vector": l.f_vector(),
        },
        "euler": verdict.chi,
        "reduced_betti": l.reduced_betti().normalized(),
        "hc_dims": verdict.hc_dims,
        "simple_projective_dimensions": algebra.simple_projective_dimensions(),
        "gldim": verdict.gldim,
        "verdicts": verdict.verdicts,
    })
}

/// `{"leaf", "relabel", "raw_relations", "output", "eliminated", "checks"}`.
pub fn step_report(step: &UnamalgamationStep) -> Value {
    let checks = check_step(step);
    json!({
        "leaf": step.leaf,
        "relabel": step.relabel,
        "raw_relations": step.raw_relations,
        "raw_words": step.raw_relations.iter().map(|r| r.word(step.output.n())).collect::<Vec<_>>(),
        "output": algebra_to_value(&step.output),
        "eliminated": step.eliminated,
        "checks": checks,
    })
}

pub fn reduction_report(input: &NakayamaAlgebra, reduction: &Reduction) -> Value {
    let mut doc = Map::new();
    doc.insert("input".into(), algebra_to_value(input));
    doc.insert(
        "steps".into(),
        Value::Array(reduction.steps.iter().map(step_report).collect()),
    );
    doc.insert(
        "terminal".into(),
        serde_json::to_value(&reduction.terminal).expect("serializable"),
    );
    doc.insert(
        "terminal_semisimple".into(),
        Value::Bool(reduction.terminal.is_semisimple()),
    );
    doc.insert("terminal_weights".into(), json!(reduction.terminal.weights()));
    Value::Object(doc)
}
