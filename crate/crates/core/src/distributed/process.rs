use crate::graph::{EdgeId, EdgeKey, VertexId};

/// A fragment's candidate outgoing edge, seen from inside the fragment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub key: EdgeKey,
    /// Endpoint inside the reporting fragment.
    pub inside: VertexId,
    pub outside: VertexId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Payload {
    /// Convergecast of the lightest outgoing edge of a subtree.
    Report(Option<Candidate>),
    /// Routing of the elected edge toward its inside endpoint, and then the
    /// notice sent across it.
    Merge(EdgeId),
    /// New fragment id: broadcast over tree edges, then told to neighbors.
    FragmentUpdate(VertexId),
}

impl Payload {
    /// Delivery-order tag.
    pub fn tag(&self) -> u8 {
        match self {
            Payload::Report(_) => 0,
            Payload::Merge(_) => 1,
            Payload::FragmentUpdate(_) => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Envelope {
    pub src: VertexId,
    pub dst: VertexId,
    /// Global round in which the message is delivered.
    pub round: usize,
    /// 1-based phase.
    pub phase: usize,
    pub payload: Payload,
}

/// One channel of a node: an incident graph edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Link {
    pub neighbor: VertexId,
    pub edge: EdgeId,
    pub weight: f64,
}

/// State of one logical process.
///
/// The process only knows its own links, the last fragment id each neighbor
/// told it, and which of its links are tree edges. Everything it learns
/// about the rest of the graph arrives in messages.
#[derive(Debug, Clone)]
pub struct NodeProcess {
    id: VertexId,
    fragment: VertexId,
    links: Vec<Link>,
    neighbor_fragment: Vec<VertexId>,
    tree: Vec<bool>,
    /// Link toward the fragment leader; `None` at the leader.
    parent: Option<usize>,

    // per-phase scratch
    awaiting_reports: usize,
    best: Option<Candidate>,
    /// Link the best candidate came from; `None` when it is local.
    best_via: Option<usize>,
    decided: bool,
    updated: bool,
}

pub(crate) type Outbox = Vec<(VertexId, Payload)>;

impl NodeProcess {
    pub fn new(id: VertexId, links: Vec<Link>) -> Self {
        let neighbor_fragment = links.iter().map(|l| l.neighbor).collect();
        let tree = vec![false; links.len()];
        NodeProcess {
            id,
            fragment: id,
            links,
            neighbor_fragment,
            tree,
            parent: None,
            awaiting_reports: 0,
            best: None,
            best_via: None,
            decided: false,
            updated: false,
        }
    }

    pub fn id(&self) -> VertexId {
        self.id
    }

    pub fn fragment(&self) -> VertexId {
        self.fragment
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn is_leader(&self) -> bool {
        self.parent.is_none()
    }

    /// Tree edges incident to this node.
    pub fn tree_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.links
            .iter()
            .zip(&self.tree)
            .filter(|(_, &t)| t)
            .map(|(l, _)| l.edge)
    }

    /// Candidate elected by this node's fragment; meaningful at the leader
    /// once the convergecast finished.
    pub fn decision(&self) -> Option<Candidate> {
        if self.decided {
            self.best
        } else {
            None
        }
    }

    pub(crate) fn has_decided(&self) -> bool {
        self.decided
    }

    fn children(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.links.len()).filter(move |&i| self.tree[i] && Some(i) != self.parent)
    }

    fn link_to(&self, neighbor: VertexId, edge: EdgeId) -> Option<usize> {
        self.links
            .iter()
            .position(|l| l.neighbor == neighbor && l.edge == edge)
    }

    fn tree_link_to(&self, neighbor: VertexId) -> Option<usize> {
        (0..self.links.len()).find(|&i| self.tree[i] && self.links[i].neighbor == neighbor)
    }

    /// Opens the convergecast: pick the lightest local outgoing edge and, at
    /// a leaf, report it upward.
    pub(crate) fn begin_convergecast(&mut self, out: &mut Outbox) {
        self.best = None;
        self.best_via = None;
        self.decided = false;
        for (i, link) in self.links.iter().enumerate() {
            if self.tree[i] || self.neighbor_fragment[i] == self.fragment {
                continue;
            }
            let key = EdgeKey::new(link.weight, link.edge);
            if self.best.is_none_or(|b| key < b.key) {
                self.best = Some(Candidate {
                    key,
                    inside: self.id,
                    outside: link.neighbor,
                });
            }
        }
        self.awaiting_reports = self.children().count();
        self.maybe_report(out);
    }

    fn maybe_report(&mut self, out: &mut Outbox) {
        if self.awaiting_reports > 0 {
            return;
        }
        match self.parent {
            Some(p) => out.push((self.links[p].neighbor, Payload::Report(self.best))),
            None => self.decided = true,
        }
    }

    /// Leader side of the merge announcement.
    pub(crate) fn begin_merge(&mut self, out: &mut Outbox) {
        if let (true, Some(c)) = (self.is_leader(), self.best) {
            self.route_merge(c.key.id, out);
        }
    }

    fn route_merge(&mut self, edge: EdgeId, out: &mut Outbox) {
        match self.best_via {
            Some(child) => out.push((self.links[child].neighbor, Payload::Merge(edge))),
            None => {
                let c = self.best.expect("routing a merge without a candidate");
                let link = self
                    .link_to(c.outside, edge)
                    .expect("elected edge is local to its inside endpoint");
                self.tree[link] = true;
                out.push((c.outside, Payload::Merge(edge)));
            }
        }
    }

    /// New leaders start the fragment-id broadcast.
    pub(crate) fn begin_update(&mut self, leader: bool, out: &mut Outbox) {
        self.updated = false;
        if leader {
            self.updated = true;
            self.parent = None;
            self.adopt(self.id, out);
        }
    }

    fn adopt(&mut self, fragment: VertexId, out: &mut Outbox) {
        self.fragment = fragment;
        let mut tree_neighbors = Vec::new();
        for i in 0..self.links.len() {
            if self.tree[i] {
                tree_neighbors.push(self.links[i].neighbor);
                if Some(i) != self.parent {
                    out.push((self.links[i].neighbor, Payload::FragmentUpdate(fragment)));
                }
            }
        }
        // Tree neighbors adopt the same id, and so do parallel links to them.
        tree_neighbors.sort_unstable();
        for (link, nf) in self.links.iter().zip(&mut self.neighbor_fragment) {
            if tree_neighbors.binary_search(&link.neighbor).is_ok() {
                *nf = fragment;
            }
        }
    }

    /// Tells non-tree neighbors about a changed fragment id.
    pub(crate) fn begin_refresh(&mut self, previous: VertexId, out: &mut Outbox) {
        if self.fragment == previous {
            return;
        }
        let mut told: Vec<VertexId> = Vec::new();
        for i in 0..self.links.len() {
            let w = self.links[i].neighbor;
            if self.tree[i] || told.contains(&w) || self.tree_link_to(w).is_some() {
                continue;
            }
            told.push(w);
            out.push((w, Payload::FragmentUpdate(self.fragment)));
        }
    }

    pub(crate) fn handle(&mut self, src: VertexId, payload: Payload, out: &mut Outbox) {
        match payload {
            Payload::Report(c) => {
                if let Some(c) = c {
                    if self.best.is_none_or(|b| c.key < b.key) {
                        self.best = Some(c);
                        self.best_via = self.tree_link_to(src);
                    }
                }
                self.awaiting_reports -= 1;
                self.maybe_report(out);
            }
            // Routed merges carry an outgoing edge, never the tree edge they
            // travel on, so a match here is the notice from across the edge.
            Payload::Merge(edge) => match self.link_to(src, edge) {
                Some(link) => self.tree[link] = true,
                None => self.route_merge(edge, out),
            },
            Payload::FragmentUpdate(fragment) => {
                if let Some(link) = self.tree_link_to(src) {
                    if !self.updated {
                        self.updated = true;
                        self.parent = Some(link);
                        self.adopt(fragment, out);
                    }
                } else {
                    for i in 0..self.links.len() {
                        if self.links[i].neighbor == src {
                            self.neighbor_fragment[i] = fragment;
                        }
                    }
                }
            }
        }
    }
}
