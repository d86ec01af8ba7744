use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{EdgeKey, VertexId, WeightedGraph};

use super::{MstError, MstResult};

/// Prim's algorithm grown from `start` with a lazily pruned binary heap,
/// `O(m log n)`.
///
/// On a disconnected graph only the component containing `start` is spanned.
pub fn prim(g: &WeightedGraph, start: VertexId) -> Result<MstResult, MstError> {
    let n = g.vertex_count();
    if start.index() >= n {
        return Err(MstError::StartOutOfRange {
            start: start.index(),
            n,
        });
    }

    let mut in_tree = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(EdgeKey, VertexId)>> = BinaryHeap::new();
    let mut chosen = Vec::new();
    let (mut pushes, mut pops) = (0u64, 0u64);

    let mut grow = |v: VertexId, in_tree: &mut [bool], heap: &mut BinaryHeap<_>| {
        in_tree[v.index()] = true;
        for (w, e) in g.incident(v) {
            if !in_tree[w.index()] {
                heap.push(Reverse((e.key(), w)));
                pushes += 1;
            }
        }
    };

    grow(start, &mut in_tree, &mut heap);
    while let Some(Reverse((key, v))) = heap.pop() {
        pops += 1;
        if in_tree[v.index()] {
            continue;
        }
        chosen.push(key.id);
        grow(v, &mut in_tree, &mut heap);
    }

    Ok(MstResult::from_edges(g, chosen, 0)
        .with_stat("heap_pushes", pushes)
        .with_stat("heap_pops", pops))
}
