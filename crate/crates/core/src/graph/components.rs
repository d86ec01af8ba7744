use super::{VertexId, WeightedGraph};

/// Partition of a graph's vertices into connected components.
///
/// Labels are dense and numbered in order of each component's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    labels: Vec<u32>,
    count: usize,
}

impl Components {
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn label(&self, v: VertexId) -> usize {
        self.labels[v.index()] as usize
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Members of each component, each list in ascending vertex order.
    pub fn groups(&self) -> Vec<Vec<VertexId>> {
        let mut groups = vec![Vec::new(); self.count];
        for (v, &l) in self.labels.iter().enumerate() {
            groups[l as usize].push(VertexId::new(v));
        }
        groups
    }
}

pub fn connected_components(g: &WeightedGraph) -> Components {
    let n = g.vertex_count();
    let mut labels = vec![u32::MAX; n];
    let mut count = 0u32;
    let mut stack = Vec::new();
    for s in 0..n {
        if labels[s] != u32::MAX {
            continue;
        }
        labels[s] = count;
        stack.push(VertexId::new(s));
        while let Some(x) = stack.pop() {
            for (y, _) in g.incident(x) {
                if labels[y.index()] == u32::MAX {
                    labels[y.index()] = count;
                    stack.push(y);
                }
            }
        }
        count += 1;
    }
    Components {
        labels,
        count: count as usize,
    }
}
