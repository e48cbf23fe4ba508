//! Browser bindings. Every export takes matrix text in the plain format and
//! returns a JSON string: `{"ok": true, ...}` or `{"ok": false, "error": ...}`.

use eulercat::category::{is_category_matrix, NoReason, Verdict};
use eulercat::euler::build_report;
use eulercat::format::parse_matrix_text;
use eulercat::rational::render_opt;
use eulercat::CountMatrix;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Larger inputs make the subset and search routines too slow for a page.
const MAX_DIM: usize = 8;
const MAX_TERMS: usize = 64;
const MAX_BUDGET: u64 = 16;

fn parse(text: &str) -> Result<CountMatrix, Value> {
    let z = parse_matrix_text(text).map_err(|e| json!({ "ok": false, "error": e.to_string() }))?;
    if z.dim() > MAX_DIM {
        return Err(json!({ "ok": false, "error": format!("at most {MAX_DIM} objects in the browser") }));
    }
    Ok(z)
}

fn finish(v: Result<Value, Value>) -> String {
    v.unwrap_or_else(|e| e).to_string()
}

/// Full report: the rendered text plus the headline values.
#[wasm_bindgen]
pub fn report(matrix: &str, terms: usize) -> String {
    finish(parse(matrix).map(|z| {
        let r = build_report(&z, terms.min(MAX_TERMS));
        json!({
            "ok": true,
            "chi": render_opt(r.chi.as_ref()),
            "chi_sigma": render_opt(r.chi_sigma.as_ref()),
            "checks_pass": r.all_passed(),
            "text": r.to_string(),
        })
    }))
}

/// The first `terms` nondegenerate simplex counts, as decimal strings.
#[wasm_bindgen]
pub fn series(matrix: &str, terms: usize) -> String {
    finish(parse(matrix).map(|z| {
        let f = eulercat::euler::f_series_ratfunc(&z);
        let coeffs: Vec<String> = match terms.min(MAX_TERMS) {
            0 => Vec::new(),
            n => f.series(n - 1).expect("f has no pole at 0").coefficients.iter().map(|c| c.to_string()).collect(),
        };
        json!({ "ok": true, "f": f.to_string(), "coefficients": coeffs })
    }))
}

/// `yes`, `no` or `inconclusive`, with a witness presentation on `yes`.
#[wasm_bindgen]
pub fn check_matrix(matrix: &str, budget: u64) -> String {
    finish(parse(matrix).map(|z| match is_category_matrix(&z, budget.min(MAX_BUDGET)) {
        Verdict::Yes(w) => json!({ "ok": true, "verdict": "yes", "witness": w }),
        Verdict::No(reason) => {
            let why = match reason {
                NoReason::NotReflexive { index } => format!("diagonal entry {} is 0", index + 1),
                NoReason::NotTransitive { i, j, k } => {
                    format!("Z[{0}][{1}] and Z[{1}][{2}] are positive but Z[{0}][{2}] is 0", i + 1, j + 1, k + 1)
                }
                NoReason::Exhausted => "no associative composition exists".to_string(),
            };
            json!({ "ok": true, "verdict": "no", "reason": why })
        }
        Verdict::Inconclusive => json!({ "ok": true, "verdict": "inconclusive" }),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn report_values() {
        let v = parsed(report("3\n2 2 2\n2 2 2\n2 8 5\n", 8));
        assert_eq!(v["chi"], "1/2");
        assert_eq!(v["chi_sigma"], "1/3");
        assert_eq!(v["checks_pass"], true);
        assert!(v["text"].as_str().unwrap().starts_with("Z: [[2, 2, 2]"));
    }

    #[test]
    fn series_values() {
        let v = parsed(series("2\n2 4\n1 2\n", 4));
        assert_eq!(v["coefficients"], json!(["2", "7", "20", "61"]));
        assert_eq!(parsed(series("1\n3\n", 0))["coefficients"], json!([]));
    }

    #[test]
    fn check_matrix_verdicts() {
        assert_eq!(parsed(check_matrix("2\n1 2\n1 2\n", 10))["verdict"], "no");
        let v = parsed(check_matrix("2\n2 4\n1 2\n", 10));
        assert_eq!(v["verdict"], "yes");
        assert_eq!(v["witness"]["arrows"].as_array().unwrap().len(), 9);
        assert_eq!(parsed(check_matrix("2\n1 1\n9 9\n", 100))["verdict"], "inconclusive");
    }

    #[test]
    fn errors_are_reported() {
        let v = parsed(report("2\n1 2\n1\n", 8));
        assert_eq!(v["ok"], false);
        assert!(v["error"].as_str().unwrap().contains("row length mismatch"));
        let big = format!("9\n{}", "2 2 2 2 2 2 2 2 2\n".repeat(9));
        assert_eq!(parsed(series(&big, 3))["ok"], false);
    }
}
