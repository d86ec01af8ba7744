use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::graph::{EdgeId, VertexId};

use super::process::{Envelope, Payload};

/// An edge added to the tree, as `(u, v)` with `u` the endpoint in the
/// fragment that elected it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MergeEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub edge: EdgeId,
    pub phase: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseRecord {
    /// 1-based.
    pub phase: usize,
    /// Merge edges in ascending order of the electing leader.
    pub merges: Vec<MergeEdge>,
    pub fragments_before: usize,
    pub fragments_after: usize,
    pub messages: usize,
    pub rounds: usize,
    /// Fragment id of every vertex at the end of the phase.
    pub fragment_ids: Vec<VertexId>,
}

/// Everything the simulator observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTrace {
    pub phases: Vec<PhaseRecord>,
    /// Every delivered message, in delivery order.
    pub envelopes: Vec<Envelope>,
}

impl RoundTrace {
    pub fn phase_count(&self) -> usize {
        self.phases.len()
    }

    /// One line per phase: `phase k: (u,v,k) (u,v,k) ...`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for p in &self.phases {
            let _ = write!(s, "phase {}:", p.phase);
            for m in &p.merges {
                let _ = write!(s, " ({},{},{})", m.u, m.v, m.phase);
            }
            s.push('\n');
        }
        s
    }

    /// One row per merge edge.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("phase,edge_u,edge_v,fragments_before,fragments_after,messages\n");
        for p in &self.phases {
            for m in &p.merges {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    p.phase, m.u, m.v, p.fragments_before, p.fragments_after, p.messages
                );
            }
        }
        s
    }
}

/// Merge edges of every phase, rebuilt from the message log alone: a merge
/// notice crossing an edge is the edge joining the tree.
pub fn trace_phase_edges(trace: &RoundTrace) -> BTreeMap<usize, Vec<EdgeId>> {
    let mut out: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
    for p in &trace.phases {
        out.entry(p.phase).or_default();
    }
    for env in &trace.envelopes {
        if let Payload::Merge(edge) = env.payload {
            let is_notice = trace.phases.get(env.phase - 1).is_some_and(|p| {
                p.merges.iter().any(|m| {
                    m.edge == edge && {
                        (m.u, m.v) == (env.src, env.dst) || (m.v, m.u) == (env.src, env.dst)
                    }
                })
            });
            if is_notice {
                out.entry(env.phase).or_default().push(edge);
            }
        }
    }
    for edges in out.values_mut() {
        edges.sort_unstable();
        edges.dedup();
    }
    out
}

/// Total messages and the count of every phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MessageComplexity {
    pub total: usize,
    pub per_phase: Vec<usize>,
}

pub fn message_complexity(trace: &RoundTrace) -> MessageComplexity {
    let mut per_phase = vec![0; trace.phases.len()];
    for env in &trace.envelopes {
        per_phase[env.phase - 1] += 1;
    }
    MessageComplexity {
        total: trace.envelopes.len(),
        per_phase,
    }
}
