//! Command-line front end: graph generation, solving, benchmarking and the
//! Amdahl and trust calculators.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use spanforge::graph::generate_random_graph;
use spanforge::io::{read_graph, write_graph, write_phase_stats, write_results, Algorithm};
use spanforge::perf::{amdahl_max_efficiency, amdahl_max_speedup, round_half_even, AmdahlParams};
use spanforge::trust::{parse_trust_list, trust_value, TrustPath};

mod bench;
mod solve;

pub use bench::{run_bench, BenchOutput, BenchPlan};
pub use solve::{run_algorithm, Run};

/// Environment variable overriding the default seed.
pub const SEED_ENV: &str = "SPANFORGE_SEED";
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "spanforge", version, about = "Minimum spanning tree toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a connected random graph as an edge list
    Gen(GenArgs),
    /// Compute a minimum spanning tree of an edge-list file
    Mst(MstArgs),
    /// Time the algorithms over a grid of graphs and worker counts
    Bench(BenchArgs),
    /// Amdahl's-law maximum speedup and efficiency
    Amdahl(AmdahlArgs),
    /// Trust propagated along a recommendation path
    Trust(TrustArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Vertex count
    #[arg(short = 'n', long)]
    pub n: usize,
    /// Edge count, between n-1 and n(n-1)/2
    #[arg(short = 'm', long)]
    pub m: usize,
    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Smallest weight (inclusive)
    #[arg(long, default_value_t = 1.0)]
    pub min_weight: f64,
    /// Largest weight (exclusive)
    #[arg(long, default_value_t = 100.0)]
    pub max_weight: f64,
    /// Output file; standard output when absent
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MstArgs {
    /// Edge-list file
    pub input: PathBuf,
    /// kruskal, prim, boruvka, parallel-boruvka, parallel-boruvka2 or distributed
    #[arg(long, default_value = "kruskal")]
    pub algo: Algorithm,
    /// Threads for the parallel backends
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Start vertex for prim
    #[arg(long, default_value_t = 0)]
    pub start: usize,
    /// Print the merge edges of every phase (distributed only)
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Vertex counts
    #[arg(long, value_delimiter = ',', default_value = "1000,3000,5000")]
    pub sizes: Vec<usize>,
    /// Edges per vertex: m = edge_factor * n
    #[arg(long, default_value_t = bench::DEFAULT_EDGE_FACTOR)]
    pub edge_factor: usize,
    /// Graph seeds; SPANFORGE_SEED or 1 when absent
    #[arg(long, value_delimiter = ',')]
    pub seeds: Vec<u64>,
    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED, hide = true)]
    pub default_seed: u64,
    /// Worker counts for the parallel backends
    #[arg(long, value_delimiter = ',', default_value = "1,2,4,8")]
    pub workers: Vec<usize>,
    /// Algorithms; those without a worker count run once, with one worker
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "parallel-boruvka,parallel-boruvka2"
    )]
    pub algos: Vec<Algorithm>,
    /// Repetitions per configuration; the median time is reported
    #[arg(long, default_value_t = bench::DEFAULT_REPS)]
    pub reps: usize,
    /// Results CSV
    #[arg(short = 'o', long)]
    pub output: PathBuf,
    /// Optional per-phase CSV for the parallel backends
    #[arg(long)]
    pub phases_output: Option<PathBuf>,
}

impl BenchArgs {
    pub fn plan(&self) -> BenchPlan {
        BenchPlan {
            sizes: self.sizes.clone(),
            edge_factor: self.edge_factor,
            seeds: if self.seeds.is_empty() {
                vec![self.default_seed]
            } else {
                self.seeds.clone()
            },
            workers: self.workers.clone(),
            algorithms: self.algos.clone(),
            reps: self.reps,
        }
    }
}

#[derive(Debug, Args)]
pub struct AmdahlArgs {
    /// Serial fraction in [0, 1]
    #[arg(short = 'f', long)]
    pub f: f64,
    /// Processor count
    #[arg(short = 'p', long)]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct TrustArgs {
    /// Comma-separated recommender values in [0, 4]
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub rtv: String,
    /// Trust value of the target in [0, 4]
    #[arg(long, allow_hyphen_values = true)]
    pub tv: f64,
}

/// Runs one command, writing its report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Gen(a) => cmd_gen(&a, out),
        Command::Mst(a) => cmd_mst(&a, out),
        Command::Bench(a) => cmd_bench(&a, out),
        Command::Amdahl(a) => cmd_amdahl(&a, out),
        Command::Trust(a) => cmd_trust(&a, out),
    }
}

pub fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> Result<()> {
    let g = generate_random_graph(a.n, a.m, (a.min_weight, a.max_weight), a.seed)?;
    match &a.output {
        Some(path) => write_atomically(path, |f| Ok(write_graph(&g, f)?)),
        None => Ok(write_graph(&g, out)?),
    }
}

pub fn cmd_mst(a: &MstArgs, out: &mut dyn Write) -> Result<()> {
    if a.trace && a.algo != Algorithm::Distributed {
        bail!("--trace needs --algo distributed");
    }
    let file =
        File::open(&a.input).with_context(|| format!("cannot open {}", a.input.display()))?;
    let g = read_graph(BufReader::new(file)).with_context(|| a.input.display().to_string())?;
    let run = run_algorithm(&g, a.algo, a.workers, a.start)?;
    writeln!(out, "algorithm {}", a.algo)?;
    writeln!(out, "vertices {}", g.vertex_count())?;
    writeln!(out, "edges {}", run.result.edges.len())?;
    writeln!(out, "total_weight {}", run.result.total_weight)?;
    writeln!(out, "phases {}", run.result.phase_count)?;
    if let Some(messages) = run.messages() {
        writeln!(out, "messages {messages}")?;
    }
    writeln!(out, "micros {}", run.micros)?;
    if let (true, Some(trace)) = (a.trace, &run.trace) {
        write!(out, "{}", trace.to_text())?;
    }
    Ok(())
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<()> {
    let plan = a.plan();
    let mut failed = None;
    let result = run_bench(&plan, |r| {
        let line = writeln!(
            out,
            "n {} seed {} {} workers {}: median {} us, {} phases",
            r.n, r.seed, r.algorithm, r.workers, r.micros, r.phases
        );
        if let Err(e) = line {
            failed.get_or_insert(e);
        }
    })?;
    if let Some(e) = failed {
        return Err(e.into());
    }
    write_atomically(&a.output, |f| Ok(write_results(&result.records, f)?))?;
    if let Some(path) = &a.phases_output {
        write_atomically(path, |f| Ok(write_phase_stats(&result.phases, f)?))?;
    }
    Ok(())
}

pub fn cmd_amdahl(a: &AmdahlArgs, out: &mut dyn Write) -> Result<()> {
    let params = AmdahlParams::new(a.f, a.p)?;
    writeln!(
        out,
        "speedup {:.3}, efficiency {:.3}",
        round_half_even(amdahl_max_speedup(params), 3),
        round_half_even(amdahl_max_efficiency(params), 3)
    )?;
    Ok(())
}

pub fn cmd_trust(a: &TrustArgs, out: &mut dyn Write) -> Result<()> {
    let path = TrustPath::new(parse_trust_list(&a.rtv)?, a.tv)?;
    writeln!(out, "{:.4}", round_half_even(trust_value(&path), 4))?;
    Ok(())
}

/// Writes through a temporary file next to `path` and renames it into place
/// only if `fill` succeeds.
fn write_atomically(path: &Path, fill: impl FnOnce(&mut File) -> Result<()>) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create a file in {}", dir.display()))?;
    fill(tmp.as_file_mut())?;
    tmp.as_file_mut().sync_all()?;
    tmp.persist(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}
