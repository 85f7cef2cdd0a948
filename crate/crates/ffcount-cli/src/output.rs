//! Rendering of tables and sets: CSV with a header line, comma separator,
//! LF endings, all values decimal; or a single JSON object per command.

use std::collections::BTreeMap;

use ffcount::counting::ImageSets;
use ffcount::Structure;

/// Table values keyed by canonical element code, ready for either format.
pub fn table_map(values: &[u64]) -> BTreeMap<u64, u64> {
    values.iter().enumerate().map(|(i, &v)| (i as u64, v)).collect()
}

pub fn table_csv(key_header: &str, value_header: &str, values: &[u64]) -> String {
    let mut out = format!("{key_header},{value_header}\n");
    for (i, v) in values.iter().enumerate() {
        out.push_str(&format!("{i},{v}\n"));
    }
    out
}

pub fn table_json(kind: &str, structure: &str, values: &[u64]) -> serde_json::Value {
    serde_json::json!({
        "kind": kind,
        "structure": structure,
        "values": table_map(values),
    })
}

pub fn sets_csv<S: Structure>(s: &S, sets: &ImageSets<S>) -> String {
    let line = |name: &str, elems: &[S::Elem]| -> String {
        let codes: Vec<String> = elems.iter().map(|e| s.code_of(e).to_string()).collect();
        format!("{name},{},{}\n", elems.len(), codes.join(" "))
    };
    let mut out = String::from("set,size,elements\n");
    out.push_str(&line("A", &sets.a));
    out.push_str(&line("A+A", &sets.a_plus_a));
    out.push_str(&line("A*A", &sets.a_times_a));
    out
}

pub fn sets_json<S: Structure>(s: &S, sets: &ImageSets<S>) -> serde_json::Value {
    let part = |elems: &[S::Elem]| -> serde_json::Value {
        let codes: Vec<u64> = elems.iter().map(|e| s.code_of(e)).collect();
        serde_json::json!({ "size": codes.len(), "elements": codes })
    };
    serde_json::json!({
        "structure": s.descriptor(),
        "A": part(&sets.a),
        "A_plus_A": part(&sets.a_plus_a),
        "A_times_A": part(&sets.a_times_a),
    })
}
