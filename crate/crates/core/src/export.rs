//! Machine-readable exports: DOT graphs, JSON values, CSV tables.

use crate::crystal::{CrystalElement, CrystalGraph, TensorWord};
use crate::poly::LaurentPoly;
use crate::rmatrix::RResult;
use crate::tableaux::Tableau;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// DOT rendering of a crystal graph: nodes labeled by entry lists, edges
/// labeled by their color.
pub fn graph_to_dot(graph: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
    for (i, node) in graph.nodes.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", node.label()));
    }
    for &(src, color, dst) in &graph.arrows {
        out.push_str(&format!("  n{src} -> n{dst} [label=\"{color}\"];\n"));
    }
    out.push_str("}\n");
    out
}

pub fn element_to_json(elem: &CrystalElement) -> Value {
    Value::Array(
        elem.entries()
            .iter()
            .map(|&e| Value::from(e))
            .collect(),
    )
}

pub fn word_to_json(word: &TensorWord) -> Value {
    Value::Array(word.factors().iter().map(element_to_json).collect())
}

pub fn basis_to_json(basis: &[CrystalElement]) -> Value {
    Value::Array(basis.iter().map(element_to_json).collect())
}

/// Tableau rows as JSON arrays, inner-shape cells rendered as null.
pub fn tableau_to_json(t: &Tableau) -> Value {
    let mut rows = Vec::new();
    for (r, row) in t.rows().iter().enumerate() {
        let inner = t.shape().inner().part(r) as usize;
        let mut cells: Vec<Value> = vec![Value::Null; inner];
        cells.extend(row.iter().map(|&v| Value::from(v)));
        rows.push(Value::Array(cells));
    }
    Value::Array(rows)
}

/// Laurent polynomial as a {"exponent": coefficient} object.
pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let map: serde_json::Map<String, Value> = p
        .terms()
        .map(|(e, c)| (e.to_string(), Value::from(c)))
        .collect();
    Value::Object(map)
}

/// Single R-matrix application as JSON.
pub fn rresult_to_json(b1: &CrystalElement, b2: &CrystalElement, r: &RResult) -> Value {
    json!({
        "b1": element_to_json(b1),
        "b2": element_to_json(b2),
        "b2p": element_to_json(&r.out_left),
        "b1p": element_to_json(&r.out_right),
        "H": r.energy,
    })
}

/// Energy table as CSV lines "b1,b2,H" in canonical order.
pub fn energy_table_to_csv(table: &BTreeMap<(CrystalElement, CrystalElement), i64>) -> String {
    let mut out = String::from("b1,b2,H\n");
    for ((b1, b2), h) in table {
        out.push_str(&format!("{},{},{h}\n", b1.label(), b2.label()));
    }
    out
}
