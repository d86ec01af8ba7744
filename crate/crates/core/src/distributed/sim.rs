use std::fmt;

use thiserror::Error;

use crate::graph::{connected_components, DisjointSet, VertexId, WeightedGraph};
use crate::mst::MstResult;

use super::process::{Envelope, Link, NodeProcess, Outbox};
use super::trace::{MergeEdge, PhaseRecord, RoundTrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistributedError {
    #[error("graph is disconnected: {}", ComponentList(.components))]
    Disconnected { components: Vec<Vec<VertexId>> },
}

struct ComponentList<'a>(&'a [Vec<VertexId>]);

impl fmt::Display for ComponentList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOWN: usize = 8;
        write!(f, "{} components", self.0.len())?;
        for comp in self.0.iter().take(SHOWN) {
            let ids: Vec<String> = comp.iter().take(SHOWN).map(|v| v.to_string()).collect();
            let more = if comp.len() > SHOWN { ",..." } else { "" };
            write!(f, " {{{}{more}}}", ids.join(","))?;
        }
        if self.0.len() > SHOWN {
            write!(f, " ...")?;
        }
        Ok(())
    }
}

/// Synchronous executor: everything sent in round `r` is delivered in round
/// `r + 1`, in `(src, dst, payload tag)` order.
struct Network {
    nodes: Vec<NodeProcess>,
    round: usize,
    phase: usize,
    pending: Vec<Envelope>,
    log: Vec<Envelope>,
}

impl Network {
    fn new(g: &WeightedGraph) -> Self {
        let nodes = g
            .vertices()
            .map(|v| {
                let links = g
                    .incident(v)
                    .map(|(w, e)| Link {
                        neighbor: w,
                        edge: e.id,
                        weight: e.weight,
                    })
                    .collect();
                NodeProcess::new(v, links)
            })
            .collect();
        Network {
            nodes,
            round: 0,
            phase: 0,
            pending: Vec::new(),
            log: Vec::new(),
        }
    }

    fn post(&mut self, src: VertexId, out: Outbox) {
        for (dst, payload) in out {
            self.pending.push(Envelope {
                src,
                dst,
                round: self.round + 1,
                phase: self.phase,
                payload,
            });
        }
    }

    /// Lets every node take a local step, then runs rounds until no message
    /// is in flight. Returns the number of rounds used.
    fn stage(&mut self, mut local: impl FnMut(&mut NodeProcess, &mut Outbox)) -> usize {
        for i in 0..self.nodes.len() {
            let mut out = Outbox::new();
            local(&mut self.nodes[i], &mut out);
            let src = self.nodes[i].id();
            self.post(src, out);
        }
        let start = self.round;
        while !self.pending.is_empty() {
            self.round += 1;
            let mut batch = std::mem::take(&mut self.pending);
            batch.sort_by_key(|e| (e.src, e.dst, e.payload.tag()));
            for env in &batch {
                let mut out = Outbox::new();
                self.nodes[env.dst.index()].handle(env.src, env.payload, &mut out);
                self.post(env.dst, out);
            }
            self.log.extend(batch);
        }
        self.round - start
    }
}

/// Builds the minimum spanning tree by simulated message passing.
///
/// Each vertex is a process that talks only to its graph neighbors. A phase
/// runs four stages, each to quiescence:
///
/// 1. convergecast: every fragment elects its lightest outgoing edge by
///    reporting subtree minima up the fragment tree to the leader;
/// 2. merge: the leader routes the choice down to the edge's inside endpoint,
///    which sends a merge notice across it;
/// 3. update: the new leader (smallest id of the merged fragment) broadcasts
///    its id over the tree;
/// 4. refresh: nodes whose fragment id changed tell their other neighbors.
///
/// Fragments merging through chains of choices are grouped with a
/// [`DisjointSet`] before stage 3. The result equals Kruskal's.
pub fn simulate_distributed_mst(
    g: &WeightedGraph,
) -> Result<(MstResult, RoundTrace), DistributedError> {
    let comps = connected_components(g);
    if comps.count() > 1 {
        return Err(DistributedError::Disconnected {
            components: comps.groups(),
        });
    }

    let n = g.vertex_count();
    let mut net = Network::new(g);
    let mut fragments = DisjointSet::new(n);
    let mut phases: Vec<PhaseRecord> = Vec::new();
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));

    // The executor's fragment count ends the run; nodes never need a final
    // convergecast to learn that nothing is left to merge.
    while fragments.set_count() > 1 {
        net.phase = phases.len() + 1;
        let logged = net.log.len();
        let before = fragments.set_count();
        let previous: Vec<VertexId> = net.nodes.iter().map(NodeProcess::fragment).collect();

        let mut rounds = net.stage(|p, out| p.begin_convergecast(out));
        let mut decisions: Vec<_> = net
            .nodes
            .iter()
            .filter(|p| p.is_leader())
            .map(|p| {
                debug_assert!(p.has_decided());
                p.decision()
            })
            .collect();
        // connected and more than one fragment: every fragment has an exit
        debug_assert!(decisions.iter().all(Option::is_some));

        rounds += net.stage(|p, out| p.begin_merge(out));

        let mut merges: Vec<MergeEdge> = Vec::new();
        for c in decisions.drain(..).flatten() {
            if merges.iter().any(|m| m.edge == c.key.id) {
                continue;
            }
            fragments.merge(c.inside.index(), c.outside.index());
            chosen.push(c.key.id);
            merges.push(MergeEdge {
                u: c.inside,
                v: c.outside,
                edge: c.key.id,
                phase: net.phase,
            });
        }

        let leaders: Vec<bool> = {
            let mut min_member = vec![usize::MAX; n];
            for v in 0..n {
                let r = fragments.root(v);
                min_member[r] = min_member[r].min(v);
            }
            (0..n).map(|v| min_member[fragments.root(v)] == v).collect()
        };
        rounds += net.stage(|p, out| p.begin_update(leaders[p.id().index()], out));
        if fragments.set_count() > 1 {
            rounds += net.stage(|p, out| p.begin_refresh(previous[p.id().index()], out));
        }

        phases.push(PhaseRecord {
            phase: net.phase,
            merges,
            fragments_before: before,
            fragments_after: fragments.set_count(),
            messages: net.log.len() - logged,
            rounds,
            fragment_ids: net.nodes.iter().map(NodeProcess::fragment).collect(),
        });
    }

    let trace = RoundTrace {
        phases,
        envelopes: net.log,
    };
    let result = MstResult::from_edges(g, chosen, trace.phases.len())
        .with_stat("messages", trace.envelopes.len() as u64)
        .with_stat("rounds", net.round as u64);
    Ok((result, trace))
}
