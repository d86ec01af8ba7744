#![no_main]

use libfuzzer_sys::fuzz_target;
use spanforge::distributed::simulate_distributed_mst;
use spanforge::graph::{connected_components, WeightedGraph};
use spanforge::mst::{boruvka, kruskal};
use spanforge::parallel::parallel_boruvka;

// Bytes are read in triples (u, v, w) over at most 16 vertices; tiny weight
// alphabets keep ties frequent.
fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let n = 1 + n as usize % 16;
    let list: Vec<_> = rest
        .chunks_exact(3)
        .map(|c| (c[0] as usize % n, c[1] as usize % n, f64::from(c[2] % 4)))
        .filter(|&(u, v, _)| u != v)
        .collect();
    let g = WeightedGraph::new(n, &list).unwrap();
    let expected = kruskal(&g);
    assert_eq!(boruvka(&g).edges, expected.edges);
    for workers in [1, 3] {
        for pair in [false, true] {
            assert_eq!(
                parallel_boruvka(&g, workers, pair).unwrap().0.edges,
                expected.edges
            );
        }
    }
    if connected_components(&g).count() == 1 {
        assert_eq!(
            simulate_distributed_mst(&g).unwrap().0.edges,
            expected.edges
        );
    }
});
