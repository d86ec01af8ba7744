//! Message-passing MST on a synchronous network simulator.

mod process;
mod sim;
mod trace;

pub use process::{Candidate, Envelope, Link, NodeProcess, Payload};
pub use sim::{simulate_distributed_mst, DistributedError};
pub use trace::{
    message_complexity, trace_phase_edges, MergeEdge, MessageComplexity, PhaseRecord, RoundTrace,
};
