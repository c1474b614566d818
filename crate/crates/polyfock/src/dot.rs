//! Graphviz output for crystal graphs.

use std::fmt::Write;

use polyfock_core::crystal::CrystalGraph;

fn label(lambda: &polyfock_core::Partition) -> String {
    if lambda.is_empty() {
        "∅".to_string()
    } else {
        lambda.to_string()
    }
}

/// Nodes are `n0, n1, ...` in graph order, labelled by their partition;
/// edges carry `i=<residue>`.
pub fn crystal(graph: &CrystalGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph crystal {{");
    let _ = writeln!(out, "  // p = {}, signature order {}", graph.p.get(), graph.order.name());
    for (k, node) in graph.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", k, label(node));
    }
    for e in &graph.edges {
        let _ = writeln!(out, "  n{} -> n{} [label=\"i={}\"];", e.from, e.to, e.residue);
    }
    out.push_str("}\n");
    out
}
