//! Completely independent spanning trees (CISTs) in line graphs.
//!
//! A library for constructing and verifying CISTs: spanning trees that are
//! pairwise edge-disjoint with pairwise disjoint internal vertex sets.
//! The pieces:
//!
//! - [`graph`]: simple undirected graphs, subgraph operations, I/O helpers.
//! - [`line`]: line graphs with an explicit edge/vertex bijection.
//! - [`connectivity`]: κ, λ, λ₂,₂, super- and essential edge-connectivity.
//! - [`packing`]: exact edge-disjoint spanning tree packing (matroid-union
//!   augmentation) and the packing number τ.
//! - [`star`]: star subsets, ζ, and the parameter τ′.
//! - [`construct`]: CDS families to CISTs; CISTs in line graphs from tree
//!   packings, with the star-subset augmentation.
//! - [`lkn`]: explicit optimal families for line graphs of complete graphs
//!   with fault-tolerant deletion.
//! - [`verify`]: independent validation, exact connected domination number,
//!   upper bounds, and a brute-force existence oracle.
//! - [`theorems`]: connectivity-based sufficient conditions, checked by
//!   actually running the promised constructions.
//! - [`oracle`]: naive reference implementations used to cross-check the
//!   production code paths in tests.

mod combinat;
pub mod connectivity;
pub mod construct;
pub mod family;
mod flow;
pub mod generators;
pub mod graph;
pub mod io;
pub mod line;
pub mod lkn;
pub mod oracle;
pub mod packing;
pub mod star;
pub mod theorems;
pub mod verify;

pub use connectivity::{
    connectivity_report, edge_connectivity, essential_edge_connectivity_at_least,
    is_super_edge_connected, restricted_edge_connectivity_22, vertex_connectivity,
    ConnectivityReport,
};
pub use construct::{
    cds_to_cists, line_cists, line_cists_case1, line_cists_case2, line_cists_with_cap,
    orient_unicyclic, ConstructError, LineCistFamily, LineCists,
};
pub use family::{CdsFamily, CistFamily};
pub use graph::{EdgeId, Graph};
pub use line::{line_graph, EdgeLabeledLineGraph};
pub use lkn::{
    lkn_cists, lkn_family, lkn_fault_survivors, odd_extra_tree, zigzag_tree, FaultError,
    FaultSurvivors, LknFamily,
};
pub use packing::{tau, tree_packing, SpanningForestFamily};
pub use star::{f_s, is_star_subset, tau_prime, zeta, StarSubsetWitness, TauPrimeResult, Zeta};
pub use theorems::{check_theorems, TheoremsReport};
pub use verify::{
    cist_exists_bruteforce, cist_upper_bounds, connected_domination_number, is_cist_family,
    is_valid_cds_family, CistUpperBounds, VerificationReport,
};
