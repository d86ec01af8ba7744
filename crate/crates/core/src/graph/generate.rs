use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GraphError, WeightedGraph};

/// Seeded random connected simple graph with `m` edges and weights drawn
/// uniformly from `[lo, hi)`.
///
/// A random recursive tree is laid over a shuffled vertex order, then
/// `m - (n - 1)` distinct non-tree pairs are added and the whole edge list is
/// shuffled. The stream comes from ChaCha8 seeded with `seed`, so equal
/// arguments always give a bit-identical graph.
pub fn generate_random_graph(
    n: usize,
    m: usize,
    (lo, hi): (f64, f64),
    seed: u64,
) -> Result<WeightedGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    let max = n * (n - 1) / 2;
    if m < n - 1 || m > max {
        return Err(GraphError::InfeasibleEdgeCount {
            n,
            m,
            min: n - 1,
            max,
        });
    }
    if !(lo.is_finite() && hi.is_finite() && lo >= 0.0 && lo < hi) {
        return Err(GraphError::InvalidWeightRange { lo, hi });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut taken: HashSet<u64> = HashSet::with_capacity(m);
    let key = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        (a as u64) * (n as u64) + b as u64
    };

    for i in 1..n {
        let j = rng.random_range(0..i);
        let (a, b) = (order[i], order[j]);
        taken.insert(key(a, b));
        pairs.push((a, b));
    }

    let extra = m - (n - 1);
    let free = max - (n - 1);
    if extra > 0 && extra * 2 > free {
        // Dense: enumerate the remaining pairs and take a random subset.
        let mut rest: Vec<(usize, usize)> = Vec::with_capacity(free);
        for a in 0..n {
            for b in a + 1..n {
                if !taken.contains(&key(a, b)) {
                    rest.push((a, b));
                }
            }
        }
        let (chosen, _) = rest.partial_shuffle(&mut rng, extra);
        pairs.extend_from_slice(chosen);
    } else {
        while pairs.len() < m {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a != b && taken.insert(key(a, b)) {
                pairs.push((a, b));
            }
        }
    }

    pairs.shuffle(&mut rng);
    let list: Vec<(usize, usize, f64)> = pairs
        .into_iter()
        .map(|(a, b)| (a, b, rng.random_range(lo..hi)))
        .collect();
    WeightedGraph::new(n, &list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connected_components;

    #[test]
    fn two_vertices_one_edge() {
        let g = generate_random_graph(2, 1, (1.0, 10.0), 7).unwrap();
        assert_eq!(g.edge_count(), 1);
        let e = g.edges()[0];
        assert_eq!(
            (e.u.index().min(e.v.index()), e.u.index().max(e.v.index())),
            (0, 1)
        );
        assert!((1.0..10.0).contains(&e.weight));
    }

    #[test]
    fn minimum_edge_count_gives_a_tree() {
        for seed in 0..20 {
            let g = generate_random_graph(5, 4, (0.0, 1.0), seed).unwrap();
            assert_eq!(g.edge_count(), 4);
            assert_eq!(connected_components(&g).count(), 1);
        }
    }

    #[test]
    fn deterministic_and_connected_at_scale() {
        let a = generate_random_graph(1000, 5000, (1.0, 100.0), 42).unwrap();
        let b = generate_random_graph(1000, 5000, (1.0, 100.0), 42).unwrap();
        assert_eq!(a.edge_count(), 5000);
        assert_eq!(connected_components(&a).count(), 1);
        assert_eq!(a.edges(), b.edges());
        let c = generate_random_graph(1000, 5000, (1.0, 100.0), 43).unwrap();
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn simple_graph_even_when_complete() {
        for n in 2..9 {
            let max = n * (n - 1) / 2;
            let g = generate_random_graph(n, max, (0.0, 1.0), n as u64).unwrap();
            let mut seen = HashSet::new();
            for e in g.edges() {
                let p = (e.u.min(e.v), e.u.max(e.v));
                assert!(seen.insert(p), "duplicate pair {p:?}");
            }
            assert_eq!(seen.len(), max);
        }
    }

    #[test]
    fn connected_for_many_seeds() {
        for seed in 0..100 {
            let n = 2 + (seed as usize % 60);
            let m = (n - 1) + (seed as usize * 7) % (n * (n - 1) / 2 - (n - 1) + 1);
            let g = generate_random_graph(n, m, (1.0, 2.0), seed).unwrap();
            assert_eq!(g.edge_count(), m);
            assert_eq!(connected_components(&g).count(), 1, "seed {seed}");
        }
    }

    #[test]
    fn infeasible_requests() {
        assert!(matches!(
            generate_random_graph(5, 3, (1.0, 2.0), 1),
            Err(GraphError::InfeasibleEdgeCount { .. })
        ));
        assert!(matches!(
            generate_random_graph(4, 7, (1.0, 2.0), 1),
            Err(GraphError::InfeasibleEdgeCount { .. })
        ));
        assert!(matches!(
            generate_random_graph(4, 3, (2.0, 2.0), 1),
            Err(GraphError::InvalidWeightRange { .. })
        ));
        assert_eq!(
            generate_random_graph(0, 0, (1.0, 2.0), 1).unwrap_err(),
            GraphError::NoVertices
        );
        assert_eq!(
            generate_random_graph(1, 0, (1.0, 2.0), 1)
                .unwrap()
                .edge_count(),
            0
        );
    }
}
