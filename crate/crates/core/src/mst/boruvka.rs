use crate::graph::{DisjointSet, EdgeKey, WeightedGraph};

use super::MstResult;

/// Single-threaded Borůvka.
///
/// Each phase, every current tree picks its minimum-[`EdgeKey`] edge leading to
/// another tree, and all picks are added at once. A pick made by both trees
/// it joins is added once. Phases stop when no tree has an outgoing edge, so
/// a disconnected input yields its minimum spanning forest. Only phases that
/// add edges are counted.
pub fn boruvka(g: &WeightedGraph) -> MstResult {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut dsu = DisjointSet::new(n);
    let mut cheapest: Vec<Option<EdgeKey>> = vec![None; n];
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    let mut phases = 0usize;
    let mut scanned = 0u64;

    loop {
        cheapest.iter_mut().for_each(|c| *c = None);
        for e in edges {
            let (ru, rv) = (dsu.root(e.u.index()), dsu.root(e.v.index()));
            if ru == rv {
                continue;
            }
            scanned += 1;
            let key = e.key();
            for r in [ru, rv] {
                if cheapest[r].is_none_or(|c| key < c) {
                    cheapest[r] = Some(key);
                }
            }
        }

        let mut added = 0usize;
        for key in cheapest.iter().flatten() {
            let e = g.edge(key.id).expect("picked edge belongs to graph");
            // A second pick of the same edge finds both ends already joined.
            if dsu.merge(e.u.index(), e.v.index()) {
                chosen.push(e.id);
                added += 1;
            }
        }
        if added == 0 {
            break;
        }
        phases += 1;
    }

    let unions = chosen.len() as u64;
    MstResult::from_edges(g, chosen, phases)
        .with_stat("edges_scanned", scanned)
        .with_stat("unions", unions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;

    #[test]
    fn path_of_three_takes_one_phase() {
        // 0 and 1 both pick w=1, 2 picks w=2: one phase joins everything.
        let g = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 2.0)]).unwrap();
        let r = boruvka(&g);
        assert_eq!(r.edges, vec![EdgeId::new(0), EdgeId::new(1)]);
        assert_eq!(r.phase_count, 1);
    }

    #[test]
    fn four_cycle() {
        // Spanning trees drop one edge of 1+2+3+4=10; dropping w=4 gives 6.
        let g =
            WeightedGraph::new(4, &[(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0), (3, 0, 4.0)]).unwrap();
        let r = boruvka(&g);
        assert_eq!(
            r.edges,
            vec![EdgeId::new(0), EdgeId::new(1), EdgeId::new(2)]
        );
        assert_eq!(r.total_weight, 6.0);
    }

    #[test]
    fn isolated_vertices() {
        let g = WeightedGraph::new(5, &[]).unwrap();
        let r = boruvka(&g);
        assert!(r.edges.is_empty());
        assert_eq!(r.phase_count, 0);
    }

    #[test]
    fn equal_weight_cycle_stays_acyclic() {
        // All ties: without the id tie-break Borůvka could close the triangle.
        let g = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)]).unwrap();
        let r = boruvka(&g);
        assert_eq!(r.edges, vec![EdgeId::new(0), EdgeId::new(1)]);
        assert!(r.is_spanning_forest(&g));
    }
}
