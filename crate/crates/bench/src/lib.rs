//! Shared fixtures for the pipeline benchmarks.

use medianlab::{burling_family, compact, lift_family, BoxHypergraph, LiftedGraph};

/// Compacted family `B(n)`.
pub fn family(n: usize) -> BoxHypergraph {
    compact(&burling_family(n).expect("family within limits"))
}

/// Lift of the compacted family `B(n)`.
pub fn lifted(n: usize) -> LiftedGraph {
    lift_family(&family(n)).expect("lift")
}
