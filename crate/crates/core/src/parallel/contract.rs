use crate::graph::{DisjointSet, Edge, EdgeId, EdgeKey, VertexId, WeightedGraph};

/// Result of contracting a forest `F` out of a graph: `G' = G - F`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContractionStep {
    /// Original ids of the forest edges, ascending.
    pub forest_edges: Vec<EdgeId>,
    /// Old vertex -> vertex of `contracted`.
    pub vertex_map: Vec<VertexId>,
    /// Contracted multigraph; self-loops dropped, original edge ids kept.
    pub contracted: WeightedGraph,
}

impl ContractionStep {
    /// Composes two consecutive steps, `self` first.
    pub fn then(self, next: ContractionStep) -> ContractionStep {
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|v| next.vertex_map[v.index()])
            .collect();
        let mut forest_edges = self.forest_edges;
        forest_edges.extend(next.forest_edges);
        forest_edges.sort_unstable();
        ContractionStep {
            forest_edges,
            vertex_map,
            contracted: next.contracted,
        }
    }
}

/// Minimum-key edge leaving `v`'s component, as `(key, position in g.edges())`.
#[inline]
pub(crate) fn lightest_outgoing(
    g: &WeightedGraph,
    labels: &[u32],
    v: VertexId,
) -> Option<(EdgeKey, u32)> {
    let own = labels[v.index()];
    let mut best: Option<(EdgeKey, u32)> = None;
    for &(w, pos) in g.incident_positions(v) {
        if labels[w.index()] == own {
            continue;
        }
        let key = g.edges()[pos as usize].key();
        if best.is_none_or(|(b, _)| key < b) {
            best = Some((key, pos));
        }
    }
    best
}

/// Outcome of one selection round over a labelled graph.
pub(crate) struct Selection {
    /// Positions (into the scanned graph's edge list) of the chosen edges,
    /// ascending and deduplicated.
    pub chosen: Vec<u32>,
    /// Dense new label for every old label.
    pub relabel: Vec<u32>,
    pub components_after: usize,
}

/// Folds per-vertex minima into per-component minima and joins components.
///
/// `per_vertex[v]` is the lightest outgoing edge of vertex `v`; `labels`
/// assigns each vertex one of `components` labels.
pub(crate) fn select(
    g: &WeightedGraph,
    labels: &[u32],
    components: usize,
    per_vertex: impl Iterator<Item = Option<(EdgeKey, u32)>>,
) -> Selection {
    let mut per_label: Vec<Option<(EdgeKey, u32)>> = vec![None; components];
    for (v, best) in per_vertex.enumerate() {
        if let Some((key, pos)) = best {
            let slot = &mut per_label[labels[v] as usize];
            if slot.is_none_or(|(b, _)| key < b) {
                *slot = Some((key, pos));
            }
        }
    }
    let mut chosen: Vec<u32> = per_label.iter().flatten().map(|&(_, pos)| pos).collect();
    chosen.sort_unstable();
    chosen.dedup();

    let mut dsu = DisjointSet::new(components);
    for &pos in &chosen {
        let e = &g.edges()[pos as usize];
        let merged = dsu.merge(labels[e.u.index()] as usize, labels[e.v.index()] as usize);
        debug_assert!(merged, "selected edges must form a forest");
    }
    let components_after = dsu.set_count();
    Selection {
        chosen,
        relabel: dsu.dense_labels(),
        components_after,
    }
}

/// Materializes `g` with vertices relabelled by `labels` (`components`
/// distinct values), dropping edges that became self-loops.
pub(crate) fn materialize(g: &WeightedGraph, labels: &[u32], components: usize) -> WeightedGraph {
    let edges = contract_edges(g.edges(), labels);
    WeightedGraph::from_edges_unchecked(components, edges)
}

pub(crate) fn contract_edges(edges: &[Edge], labels: &[u32]) -> Vec<Edge> {
    edges
        .iter()
        .filter_map(|e| {
            let (a, b) = (labels[e.u.index()], labels[e.v.index()]);
            (a != b).then(|| Edge {
                id: e.id,
                u: VertexId::new(a as usize),
                v: VertexId::new(b as usize),
                weight: e.weight,
            })
        })
        .collect()
}

/// One Borůvka step: every vertex picks its minimum-[`EdgeKey`] incident edge,
/// the picks form the forest `F`, and `F` is contracted away.
pub fn boruvka_step(g: &WeightedGraph) -> ContractionStep {
    let identity: Vec<u32> = (0..g.vertex_count() as u32).collect();
    let picks = g.vertices().map(|v| lightest_outgoing(g, &identity, v));
    let sel = select(g, &identity, g.vertex_count(), picks);
    let contracted = materialize(g, &sel.relabel, sel.components_after);
    ContractionStep {
        forest_edges: sel
            .chosen
            .iter()
            .map(|&p| g.edges()[p as usize].id)
            .collect(),
        vertex_map: sel
            .relabel
            .iter()
            .map(|&l| VertexId::new(l as usize))
            .collect(),
        contracted,
    }
}

/// Two Borůvka steps back to back: the contracted graph and the union of both
/// forests.
pub fn boruvka2(g: &WeightedGraph) -> ContractionStep {
    let first = boruvka_step(g);
    let second = boruvka_step(&first.contracted);
    first.then(second)
}
