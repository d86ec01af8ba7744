//! Sequential minimum spanning forest algorithms and a brute-force oracle.

mod boruvka;
mod brute_force;
mod kruskal;
mod prim;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{connected_components, DisjointSet, EdgeId, WeightedGraph};

pub use boruvka::boruvka;
pub use brute_force::{brute_force_mst, count_spanning_trees, BRUTE_FORCE_MAX_VERTICES};
pub use kruskal::kruskal;
pub use prim::prim;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MstError {
    #[error("start vertex {start} outside [0, {n})")]
    StartOutOfRange { start: usize, n: usize },
    #[error("brute-force enumeration limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
}

/// Chosen edges of a spanning forest plus bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct MstResult {
    /// Chosen edge ids, ascending.
    pub edges: Vec<EdgeId>,
    /// Sum of chosen weights, accumulated in ascending edge-id order.
    pub total_weight: f64,
    /// Borůvka-style phases; 0 for single-pass algorithms.
    pub phase_count: usize,
    pub stats: BTreeMap<&'static str, u64>,
}

impl MstResult {
    /// Canonicalizes `edges` (sort, dedup) and sums their weights in id order.
    pub fn from_edges(g: &WeightedGraph, mut edges: Vec<EdgeId>, phase_count: usize) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let total_weight = edges
            .iter()
            .map(|&id| g.edge(id).expect("edge id not in graph").weight)
            .sum();
        MstResult {
            edges,
            total_weight,
            phase_count,
            stats: BTreeMap::new(),
        }
    }

    pub fn with_stat(mut self, name: &'static str, value: u64) -> Self {
        self.stats.insert(name, value);
        self
    }

    /// True when the chosen edges are acyclic and number `n - components(g)`.
    pub fn is_spanning_forest(&self, g: &WeightedGraph) -> bool {
        let mut dsu = DisjointSet::new(g.vertex_count());
        for &id in &self.edges {
            let Some(e) = g.edge(id) else { return false };
            if !dsu.merge(e.u.index(), e.v.index()) {
                return false;
            }
        }
        self.edges.len() == g.vertex_count() - connected_components(g).count()
    }
}

#[cfg(test)]
pub(crate) mod test_support {
    use crate::graph::{generate_random_graph, WeightedGraph};

    /// Seeded connected graph with few distinct integer weights, so that
    /// EdgeKey tie-breaking actually matters.
    pub fn tie_heavy_graph(n: usize, m: usize, seed: u64) -> WeightedGraph {
        let g = generate_random_graph(n, m, (0.0, 3.0), seed).unwrap();
        let list: Vec<_> = g
            .edges()
            .iter()
            .map(|e| (e.u.index(), e.v.index(), e.weight.floor()))
            .collect();
        WeightedGraph::new(n, &list).unwrap()
    }

    /// Edge count in `[n - 1, n(n-1)/2]` derived from a seed.
    pub fn edge_count_for(n: usize, seed: u64) -> usize {
        let lo = n - 1;
        let hi = n * (n - 1) / 2;
        lo + (seed as usize).wrapping_mul(2654435761) % (hi - lo + 1)
    }
}
