//! Undirected weighted multigraph with stable edge identities.
//!
//! Every backend in this crate reads a [`WeightedGraph`]. Edges are ordered by
//! [`EdgeKey`] (weight first, then edge id), which makes the minimum spanning
//! forest unique and every algorithm deterministic even when weights tie.

mod components;
mod dsu;
mod generate;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

pub use components::{connected_components, Components};
pub use dsu::{DisjointSet, DsuError};
pub use generate::generate_random_graph;

/// Dense vertex index in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(u32::try_from(index).expect("vertex index exceeds u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Identity of an edge: its position in the input edge list.
///
/// Contracted graphs keep the ids of the original edges they were derived
/// from, so an id always names exactly one input edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeId(u32);

impl EdgeId {
    pub fn new(index: usize) -> Self {
        EdgeId(u32::try_from(index).expect("edge index exceeds u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub weight: f64,
}

impl Edge {
    #[inline]
    pub fn key(&self) -> EdgeKey {
        EdgeKey::new(self.weight, self.id)
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    #[inline]
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Total order on edges: by weight, then by edge id.
#[derive(Debug, Clone, Copy)]
pub struct EdgeKey {
    pub weight: f64,
    pub id: EdgeId,
}

impl EdgeKey {
    pub fn new(weight: f64, id: EdgeId) -> Self {
        EdgeKey { weight, id }
    }
}

impl PartialEq for EdgeKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for EdgeKey {}

impl PartialOrd for EdgeKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EdgeKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .total_cmp(&other.weight)
            .then(self.id.cmp(&other.id))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {index} is a self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("edge {index} has endpoint {vertex} outside [0, {n})")]
    EndpointOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge {index} has invalid weight {weight} (must be finite and >= 0)")]
    InvalidWeight { index: usize, weight: f64 },
    #[error("cannot place {m} edges on {n} vertices: need {min} <= m <= {max}")]
    InfeasibleEdgeCount {
        n: usize,
        m: usize,
        min: usize,
        max: usize,
    },
    #[error("invalid weight range [{lo}, {hi}): need finite 0 <= lo < hi")]
    InvalidWeightRange { lo: f64, hi: f64 },
}

/// Immutable undirected weighted multigraph in compressed adjacency form.
///
/// Parallel edges are allowed, self-loops are not. Edges are stored in
/// ascending id order; for graphs built from an edge list the id of an edge
/// equals its position.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    // (neighbor, position of the edge in `edges`)
    adjacency: Vec<(VertexId, u32)>,
}

impl WeightedGraph {
    /// Builds a graph from `(u, v, weight)` triples; edge ids follow input order.
    pub fn new(n: usize, edge_list: &[(usize, usize, f64)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for (index, &(u, v, weight)) in edge_list.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::EndpointOutOfRange { index, vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            if !weight.is_finite() || weight < 0.0 {
                return Err(GraphError::InvalidWeight { index, weight });
            }
            edges.push(Edge {
                id: EdgeId::new(index),
                u: VertexId::new(u),
                v: VertexId::new(v),
                weight,
            });
        }
        Ok(Self::from_edges_unchecked(n, edges))
    }

    /// Assembles a graph from already validated edges sorted by ascending id.
    pub(crate) fn from_edges_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0].id < w[1].id));
        let (offsets, adjacency) = build_adjacency(n, &edges);
        WeightedGraph {
            n,
            edges,
            offsets,
            adjacency,
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending id order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.n).map(VertexId::new)
    }

    /// Looks an edge up by id.
    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        match self.edges.get(id.index()) {
            Some(e) if e.id == id => Some(e),
            _ => self
                .edges
                .binary_search_by(|e| e.id.cmp(&id))
                .ok()
                .map(|pos| &self.edges[pos]),
        }
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v.index() + 1] - self.offsets[v.index()]
    }

    /// Incident edges of `v` as `(neighbor, edge)` pairs.
    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = (VertexId, &Edge)> + '_ {
        let range = self.offsets[v.index()]..self.offsets[v.index() + 1];
        self.adjacency[range]
            .iter()
            .map(move |&(w, pos)| (w, &self.edges[pos as usize]))
    }

    /// Incident edges of `v` as `(neighbor, position in edges())`.
    #[inline]
    pub(crate) fn incident_positions(&self, v: VertexId) -> &[(VertexId, u32)] {
        &self.adjacency[self.offsets[v.index()]..self.offsets[v.index() + 1]]
    }

    /// Start of each vertex's adjacency slice; `n + 1` entries.
    pub(crate) fn adjacency_offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Per-vertex `(neighbor, edge id)` lists.
    pub fn adjacency_lists(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        self.vertices()
            .map(|v| self.incident(v).map(|(w, e)| (w, e.id)).collect())
            .collect()
    }

    /// Recomputes the adjacency from the edge list and compares it with the
    /// stored one.
    pub fn adjacency_is_consistent(&self) -> bool {
        let (offsets, adjacency) = build_adjacency(self.n, &self.edges);
        offsets == self.offsets && adjacency == self.adjacency
    }
}

fn build_adjacency(n: usize, edges: &[Edge]) -> (Vec<usize>, Vec<(VertexId, u32)>) {
    let mut offsets = vec![0usize; n + 1];
    for e in edges {
        offsets[e.u.index() + 1] += 1;
        offsets[e.v.index() + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut cursor = offsets.clone();
    let mut adjacency = vec![(VertexId::default(), 0u32); 2 * edges.len()];
    for (pos, e) in edges.iter().enumerate() {
        let pos = pos as u32;
        adjacency[cursor[e.u.index()]] = (e.v, pos);
        cursor[e.u.index()] += 1;
        adjacency[cursor[e.v.index()]] = (e.u, pos);
        cursor[e.v.index()] += 1;
    }
    (offsets, adjacency)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_no_edges() {
        let g = WeightedGraph::new(1, &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.degree(VertexId::new(0)), 0);
    }

    #[test]
    fn triangle_ids_follow_input_order() {
        let g = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)]).unwrap();
        let ids: Vec<usize> = g.edges().iter().map(|e| e.id.index()).collect();
        assert_eq!(ids, vec![0, 1, 2]);
        assert_eq!(g.edge(EdgeId::new(2)).unwrap().weight, 3.0);
        for v in g.vertices() {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn rejects_self_loop() {
        let err = WeightedGraph::new(2, &[(0, 0, 1.0)]).unwrap_err();
        assert_eq!(
            err,
            GraphError::SelfLoop {
                index: 0,
                vertex: 0
            }
        );
    }

    #[test]
    fn rejects_bad_weights_and_endpoints() {
        assert!(matches!(
            WeightedGraph::new(2, &[(0, 1, f64::NAN)]),
            Err(GraphError::InvalidWeight { index: 0, .. })
        ));
        assert!(matches!(
            WeightedGraph::new(2, &[(0, 1, 1.0), (0, 1, -1.0)]),
            Err(GraphError::InvalidWeight { index: 1, .. })
        ));
        assert!(matches!(
            WeightedGraph::new(2, &[(0, 1, f64::INFINITY)]),
            Err(GraphError::InvalidWeight { .. })
        ));
        assert_eq!(
            WeightedGraph::new(2, &[(0, 2, 1.0)]).unwrap_err(),
            GraphError::EndpointOutOfRange {
                index: 0,
                vertex: 2,
                n: 2
            }
        );
        assert_eq!(
            WeightedGraph::new(0, &[]).unwrap_err(),
            GraphError::NoVertices
        );
    }

    #[test]
    fn parallel_edges_appear_in_both_lists() {
        let g = WeightedGraph::new(2, &[(0, 1, 5.0), (1, 0, 5.0)]).unwrap();
        assert_eq!(g.degree(VertexId::new(0)), 2);
        assert_eq!(g.degree(VertexId::new(1)), 2);
        assert!(g.adjacency_is_consistent());
        let lists = g.adjacency_lists();
        assert_eq!(
            lists[0],
            vec![
                (VertexId::new(1), EdgeId::new(0)),
                (VertexId::new(1), EdgeId::new(1))
            ]
        );
    }

    #[test]
    fn edge_key_breaks_ties_by_id() {
        let a = EdgeKey::new(5.0, EdgeId::new(0));
        let b = EdgeKey::new(5.0, EdgeId::new(1));
        let c = EdgeKey::new(4.0, EdgeId::new(9));
        assert!(a < b);
        assert!(c < a);
        assert_eq!(a, EdgeKey::new(5.0, EdgeId::new(0)));
    }

    #[test]
    fn lookup_by_id_in_sparse_id_sets() {
        let edges = vec![
            Edge {
                id: EdgeId::new(3),
                u: VertexId::new(0),
                v: VertexId::new(1),
                weight: 1.0,
            },
            Edge {
                id: EdgeId::new(7),
                u: VertexId::new(1),
                v: VertexId::new(2),
                weight: 2.0,
            },
        ];
        let g = WeightedGraph::from_edges_unchecked(3, edges);
        assert_eq!(g.edge(EdgeId::new(7)).unwrap().weight, 2.0);
        assert!(g.edge(EdgeId::new(0)).is_none());
        assert!(g.edge(EdgeId::new(1)).is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn keys() -> impl Strategy<Value = Vec<EdgeKey>> {
            prop::collection::vec((0u8..4, 0usize..50), 1..40).prop_map(|v| {
                v.into_iter()
                    .map(|(w, id)| EdgeKey::new(f64::from(w) * 0.5, EdgeId::new(id)))
                    .collect()
            })
        }

        proptest! {
            #[test]
            fn edge_key_is_a_strict_total_order(ks in keys()) {
                for a in &ks {
                    prop_assert!(!(a < a));
                    for b in &ks {
                        // totality and antisymmetry
                        let lt = a < b;
                        let gt = a > b;
                        let eq = a.weight == b.weight && a.id == b.id;
                        prop_assert_eq!(u8::from(lt) + u8::from(gt) + u8::from(eq), 1);
                        for c in &ks {
                            if a < b && b < c {
                                prop_assert!(a < c);
                            }
                        }
                    }
                }
            }

            #[test]
            fn adjacency_rederivation_matches(
                n in 2usize..12,
                raw in prop::collection::vec((0usize..12, 0usize..12, 0.0f64..10.0), 0..30),
            ) {
                let list: Vec<_> = raw
                    .into_iter()
                    .map(|(u, v, w)| (u % n, v % n, w))
                    .filter(|(u, v, _)| u != v)
                    .collect();
                let g = WeightedGraph::new(n, &list).unwrap();
                prop_assert!(g.adjacency_is_consistent());
                let total: usize = g.vertices().map(|v| g.degree(v)).sum();
                prop_assert_eq!(total, 2 * g.edge_count());
                for e in g.edges() {
                    prop_assert!(g.incident(e.u).any(|(w, x)| x.id == e.id && w == e.v));
                    prop_assert!(g.incident(e.v).any(|(w, x)| x.id == e.id && w == e.u));
                }
            }
        }
    }
}
