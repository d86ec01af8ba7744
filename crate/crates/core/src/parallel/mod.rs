//! Borůvka contraction steps and the phase-parallel driver.

mod contract;
mod pool;

pub use contract::{boruvka2, boruvka_step, ContractionStep};
pub use pool::{parallel_boruvka, ParallelError, PhaseStats};
