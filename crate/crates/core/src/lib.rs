//! Power graphs of finite abelian groups.
//!
//! The power graph `P(G)` of a group `G` joins two elements whenever one
//! lies in the cyclic subgroup generated by the other; the proper power
//! graph `P*(G)` drops the identity vertex. This crate builds both graphs
//! for finite abelian groups in primary decomposition, computes their exact
//! invariants (connectivity, distances, center, vertex connectivity,
//! planarity with Kuratowski witnesses), and verifies a catalog of
//! structural claims about them over enumerated group families, reporting
//! counterexamples where a claim fails.

pub mod arith;
mod error;
pub mod export;
pub mod graph;
pub mod group;
pub mod invariants;
pub mod sweep;
pub mod theorems;

pub use error::Error;
pub use export::{export_graph, graph_from_json, ExportFormat, ExportOptions};
pub use graph::{
    adjacent, adjacent_cyclic_fast, build_power_graph, AdjacencyStrategy, PowerGraph,
    SimpleGraph, Variant,
};
pub use group::{
    enumerate_abelian_groups, enumerate_abelian_groups_in, AbelianGroup, Element, GroupSpec,
};
pub use invariants::{
    invariant_report, is_planar, planarity_oracle, validate_witness, vertex_connectivity,
    vertex_connectivity_oracle, ComputedInvariants, Distance, InvariantReport,
    KuratowskiWitness, PlanarityResult, ReportOptions, WitnessKind,
};
pub use sweep::{run_sweep, Family, SweepConfig, SweepReport};
pub use theorems::{
    run_checker, CheckContext, Counterexample, Expectation, TheoremId, TheoremStatus,
    TheoremVerdict, Witness,
};

/// Schema tag carried by every JSON report this crate emits.
pub const SCHEMA_VERSION: &str = "1";

/// Default order cap for single-group analysis.
pub const DEFAULT_ANALYZE_CAP: u64 = 10_000;

/// Default order cap for exhaustive sweeps.
pub const DEFAULT_SWEEP_CAP: u64 = 200;
