#![no_main]

use libfuzzer_sys::fuzz_target;

// Any text the edge-list parser accepts must serialize to a canonical form
// that reparses cleanly to the same canonical bytes, with no self-loops or
// duplicates left to drop, and must satisfy the handshake identity.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(parsed) = pdense::parse_edge_list(text) else {
        return;
    };
    let g = parsed.graph;

    let degree_sum: u64 = (0..g.n()).map(|u| g.neighbors(u).len() as u64).sum();
    assert_eq!(degree_sum, 2 * g.m(), "handshake");

    let canon = g.canonical_edge_list();
    let back = pdense::parse_edge_list(&canon).expect("canonical form reparses");
    assert_eq!(back.self_loops_dropped, 0);
    assert_eq!(back.duplicates_collapsed, 0);
    assert_eq!(back.graph.n(), g.n());
    assert_eq!(back.graph.m(), g.m());
    assert_eq!(back.graph.canonical_edge_list(), canon, "fixed point");
});
