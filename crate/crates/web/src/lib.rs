//! WebAssembly bindings for the browser demo. Each export takes a germ as an
//! expression or JSON text plus an optional comma-separated variable list,
//! and returns a JSON report.

use newton_zeta::germ::{infer_vars, parse_germ, GermJson, GermSeries};
use newton_zeta::report;
use serde_json::Value;
use wasm_bindgen::prelude::*;

fn load(text: &str, vars: &str) -> Result<GermSeries, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty germ".into());
    }
    let explicit: Vec<String> = vars
        .split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(String::from)
        .collect();
    if text.starts_with('{') {
        let germ = GermJson::parse_germ(text).map_err(|e| e.to_string())?;
        if explicit.is_empty() {
            return Ok(germ);
        }
        let poly = germ.polynomial().with_vars(explicit).map_err(|e| e.to_string())?;
        return GermSeries::new(poly).map_err(|e| e.to_string());
    }
    let names = if explicit.is_empty() { infer_vars([text]) } else { explicit };
    parse_germ(text, &names).map_err(|e| e.to_string())
}

fn render(
    text: &str,
    vars: &str,
    build: fn(&GermSeries) -> newton_zeta::Result<Value>,
) -> Result<String, String> {
    let germ = load(text, vars)?;
    let value = build(&germ).map_err(|e| e.to_string())?;
    Ok(value.to_string())
}

pub fn zeta_report(text: &str, vars: &str) -> Result<String, String> {
    render(text, vars, report::zeta_json)
}

pub fn diagram_report(text: &str, vars: &str) -> Result<String, String> {
    render(text, vars, report::diagram_json)
}

pub fn check_report(text: &str, vars: &str) -> Result<String, String> {
    render(text, vars, report::check_json)
}

/// Both zeta-functions and the non-degeneracy summary.
#[wasm_bindgen]
pub fn zeta(germ: &str, vars: &str) -> Result<String, JsError> {
    zeta_report(germ, vars).map_err(|e| JsError::new(&e))
}

/// Restricted supports, facets and factors per index set.
#[wasm_bindgen]
pub fn diagram(germ: &str, vars: &str) -> Result<String, JsError> {
    diagram_report(germ, vars).map_err(|e| JsError::new(&e))
}

/// Per-face non-degeneracy verdicts.
#[wasm_bindgen]
pub fn check(germ: &str, vars: &str) -> Result<String, JsError> {
    check_report(germ, vars).map_err(|e| JsError::new(&e))
}
