//! Benchmark and run results as CSV.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parallel::PhaseStats;

/// Header of [`write_results`] output.
pub const RESULTS_HEADER: &str = "n,m,seed,algorithm,workers,total_weight,phases,micros,messages";

/// Header of [`write_phase_stats`] output.
pub const PHASE_STATS_HEADER: &str =
    "graph_n,graph_m,seed,algorithm,workers,phase,components_before,components_after,micros";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Kruskal,
    Prim,
    Boruvka,
    ParallelBoruvka,
    ParallelBoruvka2,
    Distributed,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Kruskal,
        Algorithm::Prim,
        Algorithm::Boruvka,
        Algorithm::ParallelBoruvka,
        Algorithm::ParallelBoruvka2,
        Algorithm::Distributed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Kruskal => "kruskal",
            Algorithm::Prim => "prim",
            Algorithm::Boruvka => "boruvka",
            Algorithm::ParallelBoruvka => "parallel-boruvka",
            Algorithm::ParallelBoruvka2 => "parallel-boruvka2",
            Algorithm::Distributed => "distributed",
        }
    }

    /// Whether the worker count affects the run.
    pub fn is_parallel(self) -> bool {
        matches!(
            self,
            Algorithm::ParallelBoruvka | Algorithm::ParallelBoruvka2
        )
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown algorithm {0:?} (expected one of kruskal, prim, boruvka, parallel-boruvka, parallel-boruvka2, distributed)")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| UnknownAlgorithm(s.to_string()))
    }
}

/// One run of one algorithm on one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub n: usize,
    pub m: usize,
    /// Generator seed, or the input file name.
    pub seed: String,
    pub algorithm: Algorithm,
    pub workers: usize,
    pub total_weight: f64,
    pub phases: usize,
    pub micros: u64,
    /// Distributed runs only.
    pub messages: Option<u64>,
}

#[derive(Debug, Error)]
pub enum CsvError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("unexpected header {found:?}")]
    Header { found: String },
}

fn writer(sink: impl Write) -> csv::Writer<impl Write> {
    csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink)
}

/// Writes the header and one row per record. An empty slice gives a
/// header-only file.
pub fn write_results(records: &[ResultRecord], mut sink: impl Write) -> Result<(), CsvError> {
    writeln!(sink, "{RESULTS_HEADER}").map_err(csv::Error::from)?;
    let mut w = writer(sink);
    for r in records {
        w.serialize(r)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_results(source: impl Read) -> Result<Vec<ResultRecord>, CsvError> {
    let mut r = csv::ReaderBuilder::new().from_reader(source);
    let found = r.headers()?.iter().collect::<Vec<_>>().join(",");
    if found != RESULTS_HEADER {
        return Err(CsvError::Header { found });
    }
    r.deserialize()
        .map(|row| row.map_err(CsvError::from))
        .collect()
}

#[derive(Serialize)]
struct PhaseRow<'a> {
    graph_n: usize,
    graph_m: usize,
    seed: &'a str,
    algorithm: Algorithm,
    workers: usize,
    phase: usize,
    components_before: usize,
    components_after: usize,
    micros: u64,
}

/// Graph descriptor shared by the rows of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunLabel {
    pub n: usize,
    pub m: usize,
    pub seed: String,
    pub algorithm: Algorithm,
}

/// Writes the header, then one row per phase of every run in order.
pub fn write_phase_stats(
    runs: &[(RunLabel, Vec<PhaseStats>)],
    mut sink: impl Write,
) -> Result<(), CsvError> {
    writeln!(sink, "{PHASE_STATS_HEADER}").map_err(csv::Error::from)?;
    let mut w = writer(sink);
    for (label, stats) in runs {
        for s in stats {
            w.serialize(PhaseRow {
                graph_n: label.n,
                graph_m: label.m,
                seed: &label.seed,
                algorithm: label.algorithm,
                workers: s.workers,
                phase: s.phase,
                components_before: s.components_before,
                components_after: s.components_after,
                micros: s.micros,
            })?;
        }
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
