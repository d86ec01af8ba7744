//! Minimum spanning forests on weighted undirected graphs: sequential
//! Kruskal, Prim and Borůvka, phase-parallel Borůvka with two-step
//! contraction, and a synchronous message-passing simulation. Also carries
//! Amdahl's-law and recommendation-trust calculators.

pub mod distributed;
pub mod graph;
pub mod io;
pub mod mst;
pub mod parallel;
pub mod perf;
pub mod trust;
