//! Canonical JSON for every object the CLI prints. Keys come out sorted
//! because `serde_json` maps are ordered; partition lists are sorted
//! lexicographically decreasing.

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use polyfock_core::blocks::Block;
use polyfock_core::crystal::CrystalGraph;
use polyfock_core::fock::FockVector;
use polyfock_core::num_bigint::BigInt;
use polyfock_core::weights::Weight;
use polyfock_core::{Modulus, Partition};

/// An integer as a JSON number when it fits in `i64`, else as a decimal string.
pub fn integer(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(c.to_string()),
    }
}

pub fn partition(lambda: &Partition) -> Value {
    Value::String(lambda.to_string())
}

pub fn weight(w: &Weight) -> Value {
    let m: Map<String, Value> = w.m_coefficients().iter().map(|(i, v)| (i.to_string(), Value::from(*v))).collect();
    json!({ "lambda0": w.lambda0(), "m": m, "p": w.modulus().get() })
}

pub fn fock_vector(v: &FockVector) -> Value {
    let mut terms: Vec<(&Partition, &BigInt)> = v.terms().collect();
    terms.sort_by(|a, b| b.0.cmp(a.0));
    let terms: Vec<Value> =
        terms.into_iter().map(|(l, c)| json!({ "partition": partition(l), "coeff": integer(c) })).collect();
    json!({ "p": v.modulus().get(), "terms": terms })
}

pub fn blocks(p: Modulus, d: usize, blocks: &[Block]) -> Value {
    let list: Vec<Value> = blocks
        .iter()
        .map(|b| {
            json!({
                "core": partition(b.id.core()),
                "p_weight": b.id.p_weight(),
                "members": b.members.iter().map(partition).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "p": p.get(), "d": d, "blocks": list })
}

pub fn core(core: &Partition, p_weight: usize) -> Value {
    json!({ "core": partition(core), "p_weight": p_weight })
}

pub fn crystal(graph: &CrystalGraph) -> Value {
    let edges: Vec<Value> = graph
        .edges
        .iter()
        .map(|e| {
            json!({
                "from": partition(&graph.nodes[e.from]),
                "to": partition(&graph.nodes[e.to]),
                "i": e.residue.value(),
            })
        })
        .collect();
    json!({ "nodes": graph.nodes.iter().map(partition).collect::<Vec<_>>(), "edges": edges })
}

/// The single serializer: compact, newline-terminated.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
