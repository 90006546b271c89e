//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings or numbers and returns a JSON document;
//! failures come back as `{"error": {"code", "message"}}` instead of throwing.

use nakayama::schema::{analysis_report, error_path, parse_algebra, step_report};
use nakayama::{unamalgamate as unamalgamate_at, Error, KupischSeries, NakayamaAlgebra};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn error_doc(e: &Error) -> Value {
    json!({ "error": { "code": e.code(), "message": e.to_string(), "path": e.path() } })
}

/// Accepts an algebra document or a bare Kupisch series such as `3,2,2,4,3`.
pub fn parse_input(input: &str) -> Result<NakayamaAlgebra, Error> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        return parse_algebra(trimmed);
    }
    let entries = trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>().map_err(|_| Error::Schema {
                path: "$.kupisch".into(),
                message: format!("`{s}` is not a nonnegative integer"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let series = KupischSeries::new(entries).map_err(|e| Error::At {
        path: error_path(&e, "kupisch"),
        source: Box::new(e),
    })?;
    Ok(NakayamaAlgebra::from_kupisch(&series))
}

fn respond(result: Result<Value, Error>) -> String {
    result.unwrap_or_else(|e| error_doc(&e)).to_string()
}

/// Full analysis: resolution quiver, relation complex, HC dimensions, gl.dim, verdicts.
#[wasm_bindgen]
pub fn analyze(input: &str) -> String {
    respond(parse_input(input).map(|alg| analysis_report(&alg)))
}

/// One unamalgamation step; the report embeds the analysis of the result.
#[wasm_bindgen]
pub fn unamalgamate(input: &str, leaf: usize) -> String {
    respond(parse_input(input).and_then(|alg| {
        let step = unamalgamate_at(&alg, leaf)?;
        let mut doc = step_report(&step);
        doc["analysis"] = analysis_report(&step.output);
        Ok(doc)
    }))
}

/// `K Q_n / rad^l` together with its analysis.
#[wasm_bindgen]
pub fn rad_power(n: usize, l: usize) -> String {
    respond(NakayamaAlgebra::rad_power(n, l).map(|alg| analysis_report(&alg)))
}
