//! Edge-list graphs and results CSV.

mod edgelist;
mod results;

pub use edgelist::{
    graph_to_string, parse_graph, read_graph, read_graph_with_limit, write_graph, ParseError,
    ParseErrorKind, MAX_VERTICES,
};
pub use results::{
    read_results, write_phase_stats, write_results, Algorithm, CsvError, ResultRecord, RunLabel,
    UnknownAlgorithm, PHASE_STATS_HEADER, RESULTS_HEADER,
};
