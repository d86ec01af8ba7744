//! Phase-parallel Borůvka over a fixed pool of workers.
//!
//! Every phase runs in lockstep: the leader (the calling thread, which is
//! also worker 0) publishes a job, all workers pass the start barrier, each
//! handles its own slice and writes into a private buffer, and after the done
//! barrier the leader merges the buffers alone. Buffers are merged in worker
//! order, so the outcome never depends on scheduling.

use std::ops::{Deref, Range};
use std::sync::{Arc, Barrier, Mutex, RwLock};
use std::thread;
use std::time::Instant;

use thiserror::Error;

use crate::graph::{Edge, EdgeId, EdgeKey, VertexId, WeightedGraph};
use crate::mst::MstResult;

use super::contract::{contract_edges, lightest_outgoing, select};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParallelError {
    #[error("worker count must be at least 1")]
    NoWorkers,
}

/// Timing and shrinkage of one phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseStats {
    /// 1-based.
    pub phase: usize,
    pub components_before: usize,
    pub components_after: usize,
    /// Adjacency entries inspected during the phase.
    pub edges_scanned: usize,
    pub micros: u64,
    pub workers: usize,
}

/// Minimum spanning forest by phase-parallel Borůvka.
///
/// With `use_boruvka2` each phase runs two selection steps and materializes
/// the contracted graph once, after the second step; otherwise every step
/// materializes. The chosen edges equal [`crate::mst::boruvka`]'s for any
/// `workers`.
pub fn parallel_boruvka(
    g: &WeightedGraph,
    workers: usize,
    use_boruvka2: bool,
) -> Result<(MstResult, Vec<PhaseStats>), ParallelError> {
    if workers == 0 {
        return Err(ParallelError::NoWorkers);
    }
    let steps_per_phase = if use_boruvka2 { 2 } else { 1 };
    let (forest, stats) = if workers == 1 {
        drive(g, steps_per_phase, &mut Inline)
    } else {
        run_pool(g, workers, steps_per_phase)
    };
    let scanned = stats.iter().map(|s| s.edges_scanned as u64).sum();
    let result = MstResult::from_edges(g, forest, stats.len()).with_stat("edges_scanned", scanned);
    Ok((result, stats))
}

/// Either the input graph or a contracted one owned by the driver.
#[derive(Clone)]
enum Current<'g> {
    Input(&'g WeightedGraph),
    Contracted(Arc<WeightedGraph>),
}

impl Deref for Current<'_> {
    type Target = WeightedGraph;
    fn deref(&self) -> &WeightedGraph {
        match self {
            Current::Input(g) => g,
            Current::Contracted(g) => g,
        }
    }
}

type Pick = Option<(EdgeKey, u32)>;

/// Runs the per-worker halves of the two parallel kernels.
trait Executor<'g> {
    /// Lightest outgoing edge of every vertex of `g`, in vertex order.
    fn scan(&mut self, g: &Current<'g>, labels: &Arc<Vec<u32>>) -> Vec<Pick>;
    /// Edges of `g` relabelled by `labels`, self-loops dropped, id order kept.
    fn contract(&mut self, g: &Current<'g>, labels: &Arc<Vec<u32>>) -> Vec<Edge>;
}

struct Inline;

impl<'g> Executor<'g> for Inline {
    fn scan(&mut self, g: &Current<'g>, labels: &Arc<Vec<u32>>) -> Vec<Pick> {
        g.vertices()
            .map(|v| lightest_outgoing(g, labels, v))
            .collect()
    }

    fn contract(&mut self, g: &Current<'g>, labels: &Arc<Vec<u32>>) -> Vec<Edge> {
        contract_edges(g.edges(), labels)
    }
}

/// Phase loop shared by the inline and pooled executors.
fn drive<'g>(
    g: &'g WeightedGraph,
    steps_per_phase: usize,
    exec: &mut dyn Executor<'g>,
) -> (Vec<EdgeId>, Vec<PhaseStats>) {
    let mut current = Current::Input(g);
    let mut forest = Vec::with_capacity(g.vertex_count().saturating_sub(1));
    let mut stats = Vec::new();

    // Contraction drops self-loops, so any remaining edge joins two
    // components and the next step is guaranteed to pick something.
    while current.edge_count() > 0 {
        let started = Instant::now();
        let before = current.vertex_count();
        let mut components = before;
        let mut labels: Arc<Vec<u32>> = Arc::new((0..before as u32).collect());
        let mut scanned = 0;

        for _ in 0..steps_per_phase {
            let picks = exec.scan(&current, &labels);
            scanned += 2 * current.edge_count();
            let sel = select(&current, &labels, components, picks.into_iter());
            if sel.chosen.is_empty() {
                break;
            }
            forest.extend(sel.chosen.iter().map(|&p| current.edges()[p as usize].id));
            labels = Arc::new(labels.iter().map(|&l| sel.relabel[l as usize]).collect());
            components = sel.components_after;
        }

        let edges = exec.contract(&current, &labels);
        current = Current::Contracted(Arc::new(WeightedGraph::from_edges_unchecked(
            components, edges,
        )));
        stats.push(PhaseStats {
            phase: stats.len() + 1,
            components_before: before,
            components_after: components,
            edges_scanned: scanned,
            micros: started.elapsed().as_micros() as u64,
            workers: 1,
        });
    }
    (forest, stats)
}

enum Job<'g> {
    Idle,
    Scan(Current<'g>, Arc<Vec<u32>>),
    Contract(Current<'g>, Arc<Vec<u32>>),
    Stop,
}

struct Shared<'g> {
    job: RwLock<Job<'g>>,
    start: Barrier,
    done: Barrier,
    picks: Vec<Mutex<Vec<Pick>>>,
    edges: Vec<Mutex<Vec<Edge>>>,
    workers: usize,
}

impl<'g> Shared<'g> {
    fn work(&self, w: usize) -> bool {
        let job = self.job.read().expect("job lock poisoned");
        match &*job {
            Job::Idle => {}
            Job::Scan(g, labels) => {
                let range = vertex_slice(g, self.workers, w);
                let out: Vec<Pick> = range
                    .map(|v| lightest_outgoing(g, labels, VertexId::new(v)))
                    .collect();
                *self.picks[w].lock().expect("buffer lock poisoned") = out;
            }
            Job::Contract(g, labels) => {
                let range = edge_slice(g.edge_count(), self.workers, w);
                let out = contract_edges(&g.edges()[range], labels);
                *self.edges[w].lock().expect("buffer lock poisoned") = out;
            }
            Job::Stop => return false,
        }
        true
    }

    /// Publishes `job`, runs worker 0's share and waits for everyone.
    fn round(&self, job: Job<'g>) {
        *self.job.write().expect("job lock poisoned") = job;
        self.start.wait();
        self.work(0);
        self.done.wait();
    }
}

struct Pooled<'s, 'g> {
    shared: &'s Shared<'g>,
}

impl<'g> Executor<'g> for Pooled<'_, 'g> {
    fn scan(&mut self, g: &Current<'g>, labels: &Arc<Vec<u32>>) -> Vec<Pick> {
        self.shared.round(Job::Scan(g.clone(), labels.clone()));
        let mut all = Vec::with_capacity(g.vertex_count());
        for buf in &self.shared.picks {
            all.append(&mut buf.lock().expect("buffer lock poisoned"));
        }
        all
    }

    fn contract(&mut self, g: &Current<'g>, labels: &Arc<Vec<u32>>) -> Vec<Edge> {
        self.shared.round(Job::Contract(g.clone(), labels.clone()));
        let mut all = Vec::new();
        for buf in &self.shared.edges {
            all.append(&mut buf.lock().expect("buffer lock poisoned"));
        }
        all
    }
}

fn run_pool(
    g: &WeightedGraph,
    workers: usize,
    steps_per_phase: usize,
) -> (Vec<EdgeId>, Vec<PhaseStats>) {
    let shared = Shared {
        job: RwLock::new(Job::Idle),
        start: Barrier::new(workers),
        done: Barrier::new(workers),
        picks: (0..workers).map(|_| Mutex::new(Vec::new())).collect(),
        edges: (0..workers).map(|_| Mutex::new(Vec::new())).collect(),
        workers,
    };
    thread::scope(|s| {
        for w in 1..workers {
            let shared = &shared;
            s.spawn(move || loop {
                shared.start.wait();
                if !shared.work(w) {
                    break;
                }
                shared.done.wait();
            });
        }
        let (forest, mut stats) = drive(g, steps_per_phase, &mut Pooled { shared: &shared });
        *shared.job.write().expect("job lock poisoned") = Job::Stop;
        shared.start.wait();
        stats.iter_mut().for_each(|s| s.workers = workers);
        (forest, stats)
    })
}

/// Vertex range of worker `w`, balanced by adjacency volume.
fn vertex_slice(g: &WeightedGraph, workers: usize, w: usize) -> Range<usize> {
    let offsets = g.adjacency_offsets();
    let total = offsets[offsets.len() - 1];
    let cut = |k: usize| {
        if k == workers {
            return g.vertex_count();
        }
        let target = total * k / workers;
        offsets
            .partition_point(|&o| o < target)
            .min(g.vertex_count())
    };
    cut(w)..cut(w + 1)
}

fn edge_slice(m: usize, workers: usize, w: usize) -> Range<usize> {
    (m * w / workers)..(m * (w + 1) / workers)
}
