#![no_main]

use cocycle_planarity::graph::parse_edge_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_edge_list(text) {
        // Serialization must re-parse to the same graph.
        let canonical = g.to_edge_list();
        let again = parse_edge_list(&canonical).expect("canonical form parses");
        assert_eq!(again.vertex_count(), g.vertex_count());
        assert_eq!(again.edges(), g.edges());
    }
});
