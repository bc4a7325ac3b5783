//! Exact analysis of proper colorings in small graphs: chromatic numbers
//! with witnesses, edge-criticality certificates, color-identical pairs and
//! color fixation, wheel/chain constructions, exact planarity, isomorph-free
//! enumeration, and a claim-verification harness with witnessed reports.

pub mod canon;
pub mod coloring;
pub mod construct;
pub mod criticality;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod harness;
pub mod identity;
pub mod named;
pub mod oracle;
pub mod planarity;

pub use canon::{are_isomorphic, canonical_form, canonical_graph6};
pub use coloring::{
    chromatic_number, chromatic_polynomial_value, enumerate_colorings, k_colorable, ColorConstraint,
    Coloring,
};
pub use construct::{build_chain, close_chain, odd_wheel, ChainGraph, ChainSpec, Wheel};
pub use criticality::{check_k_critical, is_k_chromatic, is_k_critical, CriticalityCertificate};
pub use enumerate::{enumerate_connected_graphs, ENUMERATION_MAX_N};
pub use error::{BudgetExhausted, Error, Result, SearchBudget};
pub use graph::{parse_edge_list, parse_graph6, to_graph6, Edge, Graph, VertexSet};
pub use harness::{
    default_chain_set, find_k_critical, verify_claims, write_report, write_report_to_path,
    ClaimId, ClaimReport, CorpusSpec, Summary, Verdict, VerifyOptions, ALL_CLAIMS,
};
pub use identity::{
    cycle_separates, identity_partition, is_color_identical_pair, semantically_fixed_vertices,
    IdentityPartition,
};
pub use planarity::is_planar;
