use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("element {element} outside disjoint set of capacity {capacity}")]
pub struct DsuError {
    pub element: usize,
    pub capacity: usize,
}

/// Union-find with union by size and path halving.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<u32>,
    size: Vec<u32>,
    sets: usize,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        assert!(n <= u32::MAX as usize, "disjoint set capacity exceeds u32");
        DisjointSet {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of disjoint sets currently held.
    pub fn set_count(&self) -> usize {
        self.sets
    }

    pub fn find(&mut self, x: usize) -> Result<usize, DsuError> {
        self.check(x)?;
        Ok(self.root(x))
    }

    /// Merges the sets of `a` and `b`; `Ok(true)` iff they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> Result<bool, DsuError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.merge(a, b))
    }

    fn check(&self, x: usize) -> Result<(), DsuError> {
        if x < self.parent.len() {
            Ok(())
        } else {
            Err(DsuError {
                element: x,
                capacity: self.parent.len(),
            })
        }
    }

    /// Unchecked find for in-crate hot loops.
    #[inline]
    pub(crate) fn root(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    #[inline]
    pub(crate) fn merge(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.root(a), self.root(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    /// Relabels every element with a dense set index in `[0, set_count)`,
    /// numbering sets by their smallest member.
    pub fn dense_labels(&mut self) -> Vec<u32> {
        let n = self.parent.len();
        let mut label_of_root = vec![u32::MAX; n];
        let mut labels = Vec::with_capacity(n);
        let mut next = 0u32;
        for x in 0..n {
            let r = self.root(x);
            if label_of_root[r] == u32::MAX {
                label_of_root[r] = next;
                next += 1;
            }
            labels.push(label_of_root[r]);
        }
        labels
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::VecDeque;

    #[test]
    fn fresh_elements_are_their_own_roots() {
        let mut d = DisjointSet::new(5);
        assert_eq!(d.find(3), Ok(3));
        assert_eq!(d.set_count(), 5);
    }

    #[test]
    fn union_joins_and_is_idempotent() {
        let mut d = DisjointSet::new(5);
        assert_eq!(d.union(1, 2), Ok(true));
        assert_eq!(d.find(1), d.find(2));
        assert_eq!(d.union(1, 2), Ok(false));
        assert_eq!(d.set_count(), 4);
    }

    #[test]
    fn out_of_range_is_rejected() {
        let mut d = DisjointSet::new(3);
        assert_eq!(
            d.find(3),
            Err(DsuError {
                element: 3,
                capacity: 3
            })
        );
        assert!(d.union(0, 7).is_err());
        assert_eq!(d.set_count(), 3);
    }

    #[test]
    fn dense_labels_order_by_smallest_member() {
        let mut d = DisjointSet::new(5);
        d.union(4, 3).unwrap();
        d.union(1, 4).unwrap();
        assert_eq!(d.dense_labels(), vec![0, 1, 2, 1, 1]);
    }

    // Reference labelling: BFS over the graph whose edges are the unions.
    fn bfs_labels(n: usize, ops: &[(usize, usize)]) -> Vec<usize> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in ops {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut label = vec![usize::MAX; n];
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = s;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in &adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = s;
                        q.push_back(y);
                    }
                }
            }
        }
        label
    }

    proptest! {
        #[test]
        fn agrees_with_bfs_reference(
            n in 1usize..40,
            raw in prop::collection::vec((0usize..40, 0usize..40), 0..80),
        ) {
            let ops: Vec<_> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
            let mut d = DisjointSet::new(n);
            let mut expected_sets = n;
            for &(a, b) in &ops {
                let before = d.set_count();
                let merged = d.union(a, b).unwrap();
                prop_assert_eq!(d.find(a), d.find(b));
                if merged {
                    expected_sets -= 1;
                    prop_assert_eq!(d.set_count(), before - 1);
                } else {
                    prop_assert_eq!(d.set_count(), before);
                }
            }
            prop_assert_eq!(d.set_count(), expected_sets);
            let reference = bfs_labels(n, &ops);
            for x in 0..n {
                let r = d.find(x).unwrap();
                prop_assert_eq!(d.find(r).unwrap(), r);
                for y in 0..n {
                    let same = d.find(x).unwrap() == d.find(y).unwrap();
                    prop_assert_eq!(same, reference[x] == reference[y]);
                }
            }
        }
    }
}
