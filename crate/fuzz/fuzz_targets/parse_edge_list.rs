#![no_main]

use libfuzzer_sys::fuzz_target;
use spanforge::io::{graph_to_string, parse_graph, read_graph_with_limit};

fuzz_target!(|data: &[u8]| {
    // Huge announced vertex counts would only measure the allocator.
    let Ok(g) = read_graph_with_limit(data, 1 << 16) else {
        return;
    };
    let text = graph_to_string(&g);
    let back = parse_graph(&text).expect("written graphs parse");
    assert_eq!(back.edges(), g.edges());
    assert_eq!(graph_to_string(&back), text);
});
