#![no_main]

use cocycle_planarity::criterion::{check, CheckOptions};
use cocycle_planarity::graph::parse_edge_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = parse_edge_list(text) else { return };
    if g.vertex_count() > 9 {
        return;
    }
    let options = CheckOptions { max_edges: 10, max_vertices: 9, ..CheckOptions::default() };
    if let Ok(report) = check(&g, &options) {
        report.verify(&g, options.max_edges).expect("reports verify");
    }
});
