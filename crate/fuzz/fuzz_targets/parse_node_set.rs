#![no_main]

use libfuzzer_sys::fuzz_target;

// Input layout: edge-list text, a 0xFF separator byte, node-set text. Any
// set the parser accepts against the parsed graph must come back sorted,
// duplicate-free, in range, and consistent with its own membership queries.
fuzz_target!(|data: &[u8]| {
    let mut parts = data.splitn(2, |&b| b == 0xff);
    let graph_bytes = parts.next().unwrap_or_default();
    let set_bytes = parts.next().unwrap_or_default();
    let (Ok(graph_text), Ok(set_text)) = (
        std::str::from_utf8(graph_bytes),
        std::str::from_utf8(set_bytes),
    ) else {
        return;
    };
    let Ok(parsed) = pdense::parse_edge_list(graph_text) else {
        return;
    };
    let g = parsed.graph;
    let Ok(set) = pdense::parse_node_set(&g, set_text) else {
        return;
    };

    let members = set.members();
    assert!(members.windows(2).all(|w| w[0] < w[1]), "sorted, unique");
    assert!(members.iter().all(|&v| v < g.n()), "in range");
    assert_eq!(set.len(), members.len());
    for &v in members {
        assert!(set.contains(v));
    }
    let outside = (0..g.n()).filter(|&v| !set.contains(v)).count();
    assert_eq!(outside + set.len(), g.n() as usize);
});
