//! Exhaustive spanning-tree enumeration, used as a test oracle.
//!
//! Trees are enumerated by deciding, edge by edge, whether to include it.
//! Branches are cut when including would close a cycle, when the remaining
//! edges can no longer connect the graph, or when even the cheapest possible
//! completion is strictly heavier than the best tree found so far. The last
//! cut never discards a tree that could win, including on ties.

use crate::graph::{connected_components, WeightedGraph};

use super::{MstError, MstResult};

pub const BRUTE_FORCE_MAX_VERTICES: usize = 12;

/// Minimum spanning tree by enumeration, minimizing `(total weight, sorted
/// edge ids)` lexicographically. Requires a connected graph with at most
/// [`BRUTE_FORCE_MAX_VERTICES`] vertices.
pub fn brute_force_mst(g: &WeightedGraph) -> Result<MstResult, MstError> {
    let mut search = Search::new(g)?;
    search.prune_by_weight = true;
    search.run(0);
    let best = search.best.expect("connected graph has a spanning tree");
    let ids = best.ids.iter().map(|&i| g.edges()[i].id).collect();
    Ok(MstResult::from_edges(g, ids, 0).with_stat("trees_visited", search.trees))
}

/// Number of spanning trees of a small connected graph (parallel edges count
/// separately).
pub fn count_spanning_trees(g: &WeightedGraph) -> Result<u64, MstError> {
    let mut search = Search::new(g)?;
    search.run(0);
    Ok(search.trees)
}

struct Candidate {
    weight: f64,
    // positions into g.edges(), ascending
    ids: Vec<usize>,
}

struct Search<'a> {
    g: &'a WeightedGraph,
    // edge positions in search order (ascending weight finds good trees early)
    order: Vec<usize>,
    // prefix sums of weights along `order`
    prefix: Vec<f64>,
    chosen: Vec<usize>,
    parent: Vec<usize>,
    prune_by_weight: bool,
    best: Option<Candidate>,
    trees: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a WeightedGraph) -> Result<Self, MstError> {
        let n = g.vertex_count();
        if n > BRUTE_FORCE_MAX_VERTICES {
            return Err(MstError::TooManyVertices {
                n,
                max: BRUTE_FORCE_MAX_VERTICES,
            });
        }
        let components = connected_components(g).count();
        if components != 1 {
            return Err(MstError::Disconnected { components });
        }
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        order.sort_by(|&a, &b| g.edges()[a].weight.total_cmp(&g.edges()[b].weight));
        let mut prefix = vec![0.0; order.len() + 1];
        for (i, &pos) in order.iter().enumerate() {
            prefix[i + 1] = prefix[i] + g.edges()[pos].weight;
        }
        Ok(Search {
            g,
            order,
            prefix,
            chosen: Vec::with_capacity(n),
            parent: (0..n).collect(),
            prune_by_weight: false,
            best: None,
            trees: 0,
        })
    }

    fn find(parent: &[usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }

    fn run(&mut self, next: usize) {
        let need = self.g.vertex_count() - 1 - self.chosen.len();
        if need == 0 {
            self.trees += 1;
            self.offer();
            return;
        }
        if self.order.len() - next < need {
            return;
        }
        if self.prune_by_weight {
            if let Some(best) = &self.best {
                let current: f64 = self.chosen.iter().map(|&p| self.g.edges()[p].weight).sum();
                // `order` is weight sorted, so the next `need` edges are the
                // cheapest possible completion.
                let bound = current + (self.prefix[next + need] - self.prefix[next]);
                if bound > best.weight + 1e-9 * best.weight.abs().max(1.0) {
                    return;
                }
            }
        }

        let pos = self.order[next];
        let e = self.g.edges()[pos];
        let (ru, rv) = (
            Self::find(&self.parent, e.u.index()),
            Self::find(&self.parent, e.v.index()),
        );

        if ru != rv {
            self.parent[ru] = rv;
            self.chosen.push(pos);
            self.run(next + 1);
            self.chosen.pop();
            self.parent[ru] = ru;
        }

        if self.completable_without(next) {
            self.run(next + 1);
        }
    }

    /// Whether the chosen edges plus `order[next + 1..]` still connect the
    /// graph.
    fn completable_without(&self, next: usize) -> bool {
        let mut parent = self.parent.clone();
        let mut sets = self.g.vertex_count() - self.chosen.len();
        for &pos in &self.order[next + 1..] {
            let e = self.g.edges()[pos];
            let (a, b) = (
                Self::find(&parent, e.u.index()),
                Self::find(&parent, e.v.index()),
            );
            if a != b {
                parent[a] = b;
                sets -= 1;
                if sets == 1 {
                    return true;
                }
            }
        }
        sets == 1
    }

    fn offer(&mut self) {
        let mut ids = self.chosen.clone();
        ids.sort_unstable();
        // Summing in ascending weight order gives equal totals for equal
        // weight multisets, whatever the search order.
        let mut weights: Vec<f64> = ids.iter().map(|&p| self.g.edges()[p].weight).collect();
        weights.sort_by(f64::total_cmp);
        let weight: f64 = weights.iter().sum();
        let better = match &self.best {
            None => true,
            Some(b) => match weight.total_cmp(&b.weight) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => ids < b.ids,
                std::cmp::Ordering::Greater => false,
            },
        };
        if better {
            self.best = Some(Candidate { weight, ids });
        }
    }
}
