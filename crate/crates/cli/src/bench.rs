use anyhow::{ensure, Result};
use spanforge::graph::generate_random_graph;
use spanforge::io::{Algorithm, ResultRecord, RunLabel};
use spanforge::parallel::PhaseStats;

use crate::solve::run_algorithm;

pub const DEFAULT_SIZES: [usize; 3] = [1000, 3000, 5000];
pub const DEFAULT_EDGE_FACTOR: usize = 5;
pub const DEFAULT_WORKERS: [usize; 4] = [1, 2, 4, 8];
pub const DEFAULT_ALGORITHMS: [Algorithm; 2] =
    [Algorithm::ParallelBoruvka, Algorithm::ParallelBoruvka2];
pub const DEFAULT_REPS: usize = 5;

/// Weight range of generated benchmark graphs.
pub const WEIGHT_RANGE: (f64, f64) = (1.0, 100.0);

/// Grid of benchmark configurations. Every `(n, seed, algorithm, workers)`
/// combination runs `reps` times on a graph with `edge_factor * n` edges;
/// algorithms that ignore the worker count run once, with one worker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchPlan {
    pub sizes: Vec<usize>,
    pub edge_factor: usize,
    pub seeds: Vec<u64>,
    pub workers: Vec<usize>,
    pub algorithms: Vec<Algorithm>,
    pub reps: usize,
}

impl BenchPlan {
    pub fn new(seed: u64) -> Self {
        BenchPlan {
            sizes: DEFAULT_SIZES.to_vec(),
            edge_factor: DEFAULT_EDGE_FACTOR,
            seeds: vec![seed],
            workers: DEFAULT_WORKERS.to_vec(),
            algorithms: DEFAULT_ALGORITHMS.to_vec(),
            reps: DEFAULT_REPS,
        }
    }

    /// Checks the whole grid before anything runs.
    pub fn validate(&self) -> Result<()> {
        ensure!(self.reps >= 1, "repetitions must be at least 1");
        ensure!(!self.sizes.is_empty(), "no graph sizes given");
        ensure!(!self.seeds.is_empty(), "no seeds given");
        ensure!(!self.workers.is_empty(), "no worker counts given");
        ensure!(!self.algorithms.is_empty(), "no algorithms given");
        ensure!(
            self.workers.iter().all(|&w| w >= 1),
            "worker counts must be at least 1"
        );
        for &n in &self.sizes {
            ensure!(n >= 1, "graph size must be at least 1");
            let m = n.checked_mul(self.edge_factor);
            let max = n * (n - 1) / 2;
            ensure!(
                m.is_some_and(|m| m + 1 >= n && m <= max),
                "edge factor {} gives an infeasible edge count for n = {n} (need {} <= m <= {max})",
                self.edge_factor,
                n - 1,
            );
        }
        Ok(())
    }

    /// `(algorithm, workers)` pairs in run order.
    fn configurations(&self) -> Vec<(Algorithm, usize)> {
        let mut out = Vec::new();
        for &a in &self.algorithms {
            if a.is_parallel() {
                out.extend(self.workers.iter().map(|&w| (a, w)));
            } else {
                out.push((a, 1));
            }
        }
        out
    }

    pub fn row_count(&self) -> usize {
        self.sizes.len() * self.seeds.len() * self.configurations().len()
    }
}

#[derive(Debug, Clone, Default)]
pub struct BenchOutput {
    /// One row per configuration with the median time.
    pub records: Vec<ResultRecord>,
    /// Phase breakdown of the median repetition of each parallel row.
    pub phases: Vec<(RunLabel, Vec<PhaseStats>)>,
}

/// Runs every configuration serially. `progress` sees each finished row.
pub fn run_bench(plan: &BenchPlan, mut progress: impl FnMut(&ResultRecord)) -> Result<BenchOutput> {
    plan.validate()?;
    let mut out = BenchOutput::default();
    for &n in &plan.sizes {
        let m = n * plan.edge_factor;
        for &seed in &plan.seeds {
            let g = generate_random_graph(n, m, WEIGHT_RANGE, seed)?;
            for (algorithm, workers) in plan.configurations() {
                let mut runs = (0..plan.reps)
                    .map(|_| run_algorithm(&g, algorithm, workers, 0))
                    .collect::<Result<Vec<_>>>()?;
                runs.sort_by_key(|r| r.micros);
                let median = runs.swap_remove((runs.len() - 1) / 2);
                let record = ResultRecord {
                    n,
                    m,
                    seed: seed.to_string(),
                    algorithm,
                    workers,
                    total_weight: median.result.total_weight,
                    phases: median.result.phase_count,
                    micros: median.micros,
                    messages: median.messages(),
                };
                progress(&record);
                if algorithm.is_parallel() {
                    let label = RunLabel {
                        n,
                        m,
                        seed: seed.to_string(),
                        algorithm,
                    };
                    out.phases.push((label, median.phase_stats));
                }
                out.records.push(record);
            }
        }
    }
    Ok(out)
}
