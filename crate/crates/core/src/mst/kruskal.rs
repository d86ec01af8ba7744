use std::cell::Cell;

use crate::graph::{DisjointSet, WeightedGraph};

use super::MstResult;

/// Kruskal's algorithm: scan edges in ascending [`EdgeKey`] order and keep
/// each edge whose endpoints are still in different trees.
///
/// A full sort replaces the textbook edge heap. Popping `n - 1` edges from a
/// heap of up to `n^2` edges costs `(n - 1) log n^2`; sorting `m` edges costs
/// `m log m`, which is the same bound for `m <= n^2`. Returns the minimum
/// spanning forest when `g` is disconnected.
///
/// [`EdgeKey`]: crate::graph::EdgeKey
pub fn kruskal(g: &WeightedGraph) -> MstResult {
    let edges = g.edges();
    let comparisons = Cell::new(0u64);
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_unstable_by(|&a, &b| {
        comparisons.set(comparisons.get() + 1);
        edges[a].key().cmp(&edges[b].key())
    });

    let target = g.vertex_count().saturating_sub(1);
    let mut dsu = DisjointSet::new(g.vertex_count());
    let mut chosen = Vec::with_capacity(target);
    let mut scanned = 0u64;
    for i in order {
        if chosen.len() == target {
            break;
        }
        scanned += 1;
        let e = &edges[i];
        if dsu.merge(e.u.index(), e.v.index()) {
            chosen.push(e.id);
        }
    }
    let unions = chosen.len() as u64;
    MstResult::from_edges(g, chosen, 0)
        .with_stat("comparisons", comparisons.get())
        .with_stat("edges_scanned", scanned)
        .with_stat("unions", unions)
}
