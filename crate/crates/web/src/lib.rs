//! Browser bindings. Every function takes plain strings and returns JSON text.

use serde_json::json;
use wasm_bindgen::prelude::*;

use ribbonlab::domino::{rsk, ColoredBiword};
use ribbonlab::partitions::{n_core, n_quotient};
use ribbonlab::ribbonfn::ribbon_function;
use ribbonlab::{Basis, Partition, SkewShape};

fn err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

/// A straight shape is read over its own `n`-core.
fn shape_over_core(text: &str, n: usize) -> Result<SkewShape, JsError> {
    let s: SkewShape = text.trim().parse().map_err(err)?;
    if text.contains('/') {
        return Ok(s);
    }
    let core = n_core(&s.outer, n);
    Ok(SkewShape { outer: s.outer, inner: core })
}

fn check_width(n: usize) -> Result<(), JsError> {
    if (1..=6).contains(&n) {
        Ok(())
    } else {
        Err(JsError::new("ribbon width must be between 1 and 6"))
    }
}

/// `{shape, text, expansion}` for the ribbon function of `shape` in `basis`.
#[wasm_bindgen]
pub fn ribbon_function_json(shape: &str, n: usize, basis: &str) -> Result<String, JsError> {
    check_width(n)?;
    let s = shape_over_core(shape, n)?;
    if s.size() > 16 {
        return Err(JsError::new("keep the shape to at most 16 cells"));
    }
    let basis: Basis = basis.parse().map_err(err)?;
    let g = ribbon_function(&s, n).convert(basis);
    Ok(json!({ "shape": s.to_string(), "text": g.to_string(), "expansion": g }).to_string())
}

/// `{core, quotient, rows, core_cells}` for drawing the shape with its core shaded.
#[wasm_bindgen]
pub fn core_quotient_json(shape: &str, n: usize) -> Result<String, JsError> {
    check_width(n)?;
    let lambda: Partition = shape.trim().parse().map_err(err)?;
    let core = n_core(&lambda, n);
    Ok(json!({
        "core": core,
        "quotient": n_quotient(&lambda, n),
        "rows": lambda.parts(),
        "core_rows": core.parts(),
    })
    .to_string())
}

/// `{p, q, total_color}` for the domino correspondence of a biword given as
/// `c i j` triples separated by newlines or semicolons.
#[wasm_bindgen]
pub fn domino_rsk_json(biword: &str) -> Result<String, JsError> {
    let w: ColoredBiword = biword.replace(';', "\n").parse().map_err(err)?;
    if w.len() > 40 {
        return Err(JsError::new("keep the biword to at most 40 triples"));
    }
    let (p, q) = rsk(&w);
    Ok(json!({ "p": p, "q": q, "total_color": w.total_color() }).to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outputs_parse_as_json() {
        let g: serde_json::Value = serde_json::from_str(&ribbon_function_json("2,2", 2, "schur").unwrap()).unwrap();
        assert_eq!(g["text"], "q^2·s(2) + s(1,1)");
        let c: serde_json::Value = serde_json::from_str(&core_quotient_json("7,6,4,3,1", 3).unwrap()).unwrap();
        assert_eq!(c["quotient"], json!(["3", "2,2", ""]));
        let d: serde_json::Value = serde_json::from_str(&domino_rsk_json("1 1 3; 0 2 4; 0 3 2; 1 4 1").unwrap()).unwrap();
        assert_eq!(d["total_color"], 4);
        assert_eq!(d["p"]["spin"], 3);
    }
}
