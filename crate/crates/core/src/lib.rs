//! Median graphs, event structures and their domains, Burling box families
//! and the lifting construction that turns box families into pointed median
//! graphs with large contact-graph chromatic number.

pub mod amalgam;
pub mod bitset;
pub mod burling;
pub mod coloring;
pub mod dot;
pub mod cube;
pub mod error;
pub mod events;
pub mod graph;
pub mod iso;
pub mod lifting;
pub mod metric;
pub mod roundtrip;
pub mod theta;

pub use amalgam::{gated_amalgam, Amalgam};
pub use burling::{
    boxes_intersect, burling_family, compact, intersection_graph, snap_to_grid, Box3, BoxHypergraph, Rational,
};
pub use coloring::{chromatic_number, greedy_coloring, max_clique, Budget, CliqueResult, ColoringResult, GreedyOrder};
pub use cube::{cube_condition, CubeVerdict};
pub use error::{Error, Result};
pub use dot::to_dot;
pub use events::{
    check_nice_labeling, degree, domain, event_structure_from_pointed, labeling_edge_coloring_bridge, orthogonality_graph,
    pair_relation, validate, Domain, EventStructure, PairRelation,
};
pub use graph::{EdgeId, Graph, VertexId};
pub use iso::find_isomorphism;
pub use lifting::{
    build_chain, build_grid, check_cell_representation, lift, lift_family, orient_at_alpha, verify_lemma_crossing,
    verify_lemma_degree, verify_lemma_intersection, GridComplex, LiftedGraph, LiftedGraphJson, ThetaLabel,
};
pub use metric::{MedianMode, MedianVerdict};
pub use roundtrip::{roundtrip_events, roundtrip_pointed, RoundtripVerdict};
pub use theta::{
    class_relation, contact_graph, crossing_graph, pointed_contact_graph, separates, theta_classes, ClassRelation,
    OrientedGraph, RelationKind, ThetaStructure,
};
