#![no_main]

use cocycle_planarity::graph::{parse_edge_list, parse_vertex_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // First line is the edge list with `;` for newlines, the rest is the
    // vertex list.
    let (graph, list) = text.split_once('\n').unwrap_or((text, ""));
    let Ok(g) = parse_edge_list(&graph.replace(';', "\n")) else { return };
    if let Ok(set) = parse_vertex_list(&g, list) {
        assert!(set.is_subset(g.vertices()));
    }
});
