use std::time::Instant;

use anyhow::{bail, Result};
use spanforge::distributed::{simulate_distributed_mst, RoundTrace};
use spanforge::graph::{connected_components, VertexId, WeightedGraph};
use spanforge::io::Algorithm;
use spanforge::mst::{boruvka, kruskal, prim, MstError, MstResult};
use spanforge::parallel::{parallel_boruvka, PhaseStats};

/// One timed run of one algorithm.
#[derive(Debug, Clone)]
pub struct Run {
    pub result: MstResult,
    pub micros: u64,
    /// Parallel backends only.
    pub phase_stats: Vec<PhaseStats>,
    /// Distributed backend only.
    pub trace: Option<RoundTrace>,
}

impl Run {
    pub fn messages(&self) -> Option<u64> {
        self.trace.as_ref().map(|t| t.envelopes.len() as u64)
    }
}

/// Runs `algorithm` on `g`. `workers` only matters to the parallel backends,
/// `start` only to Prim. Prim and the distributed backend refuse
/// disconnected input.
pub fn run_algorithm(
    g: &WeightedGraph,
    algorithm: Algorithm,
    workers: usize,
    start: usize,
) -> Result<Run> {
    if workers == 0 {
        bail!("worker count must be at least 1");
    }
    if algorithm == Algorithm::Prim {
        let components = connected_components(g).count();
        if components > 1 {
            return Err(MstError::Disconnected { components }.into());
        }
    }
    let started = Instant::now();
    let mut phase_stats = Vec::new();
    let mut trace = None;
    let result = match algorithm {
        Algorithm::Kruskal => kruskal(g),
        Algorithm::Prim => prim(g, VertexId::new(start))?,
        Algorithm::Boruvka => boruvka(g),
        Algorithm::ParallelBoruvka | Algorithm::ParallelBoruvka2 => {
            let pair = algorithm == Algorithm::ParallelBoruvka2;
            let (r, stats) = parallel_boruvka(g, workers, pair)?;
            phase_stats = stats;
            r
        }
        Algorithm::Distributed => {
            let (r, t) = simulate_distributed_mst(g)?;
            trace = Some(t);
            r
        }
    };
    Ok(Run {
        result,
        micros: started.elapsed().as_micros() as u64,
        phase_stats,
        trace,
    })
}
