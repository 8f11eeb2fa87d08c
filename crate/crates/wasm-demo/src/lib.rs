//! Thin JSON-string bindings for the browser demo page. Each export takes
//! comma separated integer lists, returns a JSON object on success and
//! {"error": "..."} on failure, so the page never needs to unwind.
//!
//! Build for the web with: wasm-pack build --target web --out-dir www/pkg

use wasm_bindgen::prelude::wasm_bindgen;

use sgtrace::{report, NumericalSemigroup, RelativeIdeal};

fn parse_list(s: &str) -> Result<Vec<i64>, String> {
    let vals: Result<Vec<i64>, _> = s
        .split([',', ' '])
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>())
        .collect();
    match vals {
        Ok(v) if !v.is_empty() => Ok(v),
        Ok(_) => Err("empty list".into()),
        Err(_) => Err(format!("cannot parse {s:?} as a list of integers")),
    }
}

fn error_json(msg: &str) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

fn semigroup(gens: &str) -> Result<NumericalSemigroup, String> {
    let gens = parse_list(gens)?;
    NumericalSemigroup::from_generators(&gens).map_err(|e| e.to_string())
}

/// Semigroup invariants, or the full trace report when `ideal` is nonempty.
#[wasm_bindgen]
pub fn analyze(gens: &str, ideal: &str) -> String {
    let go = || -> Result<String, String> {
        let h = semigroup(gens)?;
        if ideal.trim().is_empty() {
            return Ok(report::analyze_semigroup_json(&h).to_string());
        }
        let igens = parse_list(ideal)?;
        let e = RelativeIdeal::new(&h, &igens).map_err(|e| e.to_string())?;
        let r = e.analyze().map_err(|e| e.to_string())?;
        Ok(report::trace_report_json(&h, &r).to_string())
    };
    go().unwrap_or_else(|msg| error_json(&msg))
}

/// All trace ideals and oversemigroups with the duality pairing.
#[wasm_bindgen]
pub fn enumerate_ideals(gens: &str) -> String {
    let go = || -> Result<String, String> {
        let h = semigroup(gens)?;
        let r = sgtrace::check_duality(&h).map_err(|e| e.to_string())?;
        Ok(report::enumeration_json(&h, &r, false, true, true).to_string())
    };
    go().unwrap_or_else(|msg| error_json(&msg))
}

/// Finite overring family and Gorenstein smallness verdict.
#[wasm_bindgen]
pub fn classify_semigroup(gens: &str) -> String {
    let go = || -> Result<String, String> {
        let h = semigroup(gens)?;
        Ok(report::classification_json(&h, &sgtrace::classify(&h)).to_string())
    };
    go().unwrap_or_else(|msg| error_json(&msg))
}
