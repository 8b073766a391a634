//! JSON payload builders. `serde_json::Map` is backed by a BTreeMap, so
//! object keys serialize alphabetically and equal inputs give byte-equal
//! output.

use serde_json::{json, Map, Value};
use varpoints::ff::{FqElement, FqField};
use varpoints::solve::AffinePoint;

/// `{"k":1,"p":101}`, plus the modulus coefficients for extensions.
pub fn field_tag(field: &FqField) -> Value {
    let mut m = Map::new();
    m.insert("k".into(), json!(field.degree()));
    m.insert("p".into(), json!(field.characteristic()));
    if let Some(modulus) = field.modulus() {
        m.insert("modulus".into(), json!(modulus));
    }
    Value::Object(m)
}

/// Prime-field coordinates serialize as integers, extension coordinates as
/// ascending coefficient arrays, so consumers can re-verify without parsing
/// element strings.
pub fn element_value(e: &FqElement) -> Value {
    if let Some(r) = e.residue() {
        json!(r)
    } else {
        let mut coeffs = e.coeffs().to_vec();
        coeffs.resize(e.field().degree(), 0);
        json!(coeffs)
    }
}

pub fn point_value(p: &AffinePoint) -> Value {
    let coords: Vec<Value> = p.coords().iter().map(element_value).collect();
    let mut m = Map::new();
    m.insert("coordinates".into(), Value::Array(coords));
    m.insert("field".into(), field_tag(p.field()));
    Value::Object(m)
}

/// The common envelope: command echo, seed, ambient field, payload fields.
pub fn envelope(command: &str, seed: u64, field: &FqField, payload: Map<String, Value>) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("field".into(), field_tag(field));
    m.insert("seed".into(), json!(seed));
    for (k, v) in payload {
        m.insert(k, v);
    }
    Value::Object(m)
}
