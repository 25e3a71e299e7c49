//! JSON report schema.
//!
//! Every run emits one [`RunReport`]. Rationals are printed exactly as
//! `"p/q"` strings (plain integers omit the denominator); polynomials are
//! arrays of `{exponents, coeff}` objects listed in printing order
//! (descending graded lexicographic), plus a `rendered` string that parses
//! back to the same polynomial. Key order inside objects is sorted, and no
//! field depends on locale or time except `timing_ms`, which callers must
//! exclude when comparing reports byte for byte.

use serde::Serialize;
use serde_json::{json, Map, Value};
use socle_core::poly::{Polynomial, Rat};
use socle_core::rational::format_rational;

/// Version stamp for the report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// The top-level object printed by every subcommand.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub timing_ms: u64,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, results: Value, timing_ms: u64) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            results,
            timing_ms,
        }
    }

    /// Serialize with a trailing newline. Objects use sorted keys
    /// (serde_json maps are B-tree backed), so equal reports are
    /// byte-identical.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// A rational as an exact string.
pub fn rat_value(r: &Rat) -> Value {
    Value::String(format_rational(r))
}

/// A polynomial as `{variables, terms, rendered}` with terms in printing
/// order (descending graded lexicographic).
pub fn poly_node(p: &Polynomial, names: &[&str]) -> Value {
    let mut terms: Vec<(Vec<u32>, &Rat)> = p
        .terms()
        .map(|(m, c)| (m.exponents().to_vec(), c))
        .collect();
    terms.reverse();
    let term_nodes: Vec<Value> = terms
        .into_iter()
        .map(|(exps, c)| {
            json!({
                "exponents": exps,
                "coeff": format_rational(c),
            })
        })
        .collect();
    json!({
        "variables": names,
        "terms": term_nodes,
        "rendered": p.to_string_with(names),
    })
}

/// Convenience: an object from sorted key/value pairs.
pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}
