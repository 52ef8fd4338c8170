//! Exact graph invariants of power graphs: connectivity, distances,
//! diameter, center, vertex connectivity and planarity, each paired with an
//! independent brute-force oracle for small instances.

pub mod connectivity;
pub mod planarity;
pub mod traversal;

pub use connectivity::{vertex_connectivity, vertex_connectivity_oracle};
pub use planarity::{
    is_planar, is_planar_bool, planarity_oracle, validate_witness, KuratowskiWitness,
    PlanarityResult, WitnessKind,
};
pub use traversal::{
    all_pairs_distances, bfs_distances, center, components, diameter, eccentricities,
    is_connected, CenterInfo,
};

use crate::graph::PowerGraph;
use serde::{Serialize, Serializer};

/// A graph distance; disconnected pairs yield `Infinite`, serialized as the
/// string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn as_finite(&self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(*d),
            Distance::Infinite => None,
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => serializer.serialize_u64(*d),
            Distance::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Exact vertex connectivity is skipped above this vertex count; the report
/// notes the skip instead of silently omitting the value.
pub const KAPPA_EXACT_MAX_VERTICES: usize = 100;

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    /// Override for [`KAPPA_EXACT_MAX_VERTICES`].
    pub kappa_max_vertices: Option<usize>,
}

/// Bundle of computed invariants for one power graph.
///
/// Conventions for degenerate graphs: the empty graph (proper graph of the
/// trivial group) and single-vertex graphs are reported as connected with
/// diameter 0 and kappa 0.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub connected: bool,
    pub component_count: usize,
    pub diameter: Distance,
    pub eccentricities: Vec<Distance>,
    pub center_vertices: Option<Vec<usize>>,
    pub center_is_complete: Option<bool>,
    pub kappa: Option<usize>,
    pub planar: bool,
    pub kuratowski_witness: Option<KuratowskiWitness>,
}

#[derive(Clone, Debug)]
pub struct ComputedInvariants {
    pub report: InvariantReport,
    /// Invariants skipped because of size thresholds, with reasons.
    pub skipped: Vec<String>,
}

/// Computes the full invariant bundle for a power graph.
pub fn invariant_report(pg: &PowerGraph, options: &ReportOptions) -> ComputedInvariants {
    let g = pg.graph();
    let mut skipped = Vec::new();

    if g.n() == 0 {
        return ComputedInvariants {
            report: InvariantReport {
                connected: true,
                component_count: 0,
                diameter: Distance::Finite(0),
                eccentricities: Vec::new(),
                center_vertices: Some(Vec::new()),
                center_is_complete: Some(true),
                kappa: Some(0),
                planar: true,
                kuratowski_witness: None,
            },
            skipped,
        };
    }

    let comps = components(g);
    let connected = comps.len() == 1;
    let eccs = eccentricities(g).expect("non-empty");
    let diam = diameter(g).expect("non-empty");

    let (center_vertices, center_is_complete) = if connected {
        let info = center(g).expect("connected");
        (Some(info.vertices), Some(info.is_complete))
    } else {
        (None, None)
    };

    let kappa_cap = options.kappa_max_vertices.unwrap_or(KAPPA_EXACT_MAX_VERTICES);
    let kappa = if g.n() == 1 {
        Some(0)
    } else if !connected {
        Some(0)
    } else if g.is_complete() {
        Some(g.n() - 1)
    } else if g.n() <= kappa_cap {
        Some(vertex_connectivity(g).expect("n >= 2"))
    } else {
        skipped.push(format!(
            "kappa: exact computation skipped ({} vertices exceeds the cap of {kappa_cap})",
            g.n()
        ));
        None
    };

    let planarity = is_planar(g);

    ComputedInvariants {
        report: InvariantReport {
            connected,
            component_count: comps.len(),
            diameter: diam,
            eccentricities: eccs,
            center_vertices,
            center_is_complete,
            kappa,
            planar: planarity.planar,
            kuratowski_witness: planarity.witness,
        },
        skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Variant;
    use crate::group::GroupSpec;

    fn report(spec: &str, variant: Variant) -> InvariantReport {
        let group = GroupSpec::new(spec).resolve().unwrap();
        let pg = PowerGraph::build(&group, variant);
        invariant_report(&pg, &ReportOptions::default()).report
    }

    #[test]
    fn proper_c6_report() {
        let r = report("6", Variant::Proper);
        assert!(r.connected);
        assert_eq!(r.component_count, 1);
        assert_eq!(r.diameter, Distance::Finite(2));
        assert_eq!(r.kappa, Some(2));
        assert!(r.planar);
        assert!(r.kuratowski_witness.is_none());
        assert_eq!(r.center_vertices.as_ref().unwrap().len(), 2);
        assert_eq!(r.center_is_complete, Some(true));
    }

    #[test]
    fn disconnected_report() {
        let r = report("2,2", Variant::Proper);
        assert!(!r.connected);
        assert_eq!(r.component_count, 3);
        assert_eq!(r.diameter, Distance::Infinite);
        assert_eq!(r.kappa, Some(0));
        assert!(r.center_vertices.is_none());
        assert!(r.center_is_complete.is_none());
    }

    #[test]
    fn degenerate_reports() {
        let empty = report("1", Variant::Proper);
        assert!(empty.connected);
        assert_eq!(empty.component_count, 0);
        assert_eq!(empty.kappa, Some(0));
        assert!(empty.planar);

        let single = report("2", Variant::Proper);
        assert!(single.connected);
        assert_eq!(single.diameter, Distance::Finite(0));
        assert_eq!(single.kappa, Some(0));
        assert_eq!(single.center_vertices, Some(vec![0]));
    }

    #[test]
    fn nonplanar_report_carries_witness() {
        let r = report("7", Variant::Proper);
        assert!(!r.planar);
        assert!(r.kuratowski_witness.is_some());
        // invariant: planar reports never carry a witness
        let p = report("6", Variant::Proper);
        assert!(p.planar && p.kuratowski_witness.is_none());
    }

    #[test]
    fn report_serializes_with_inf_sentinel() {
        let r = report("2,2", Variant::Proper);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"diameter\":\"inf\""));
        assert!(json.contains("\"connected\":false"));
        let r = report("4", Variant::Proper);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"diameter\":1"));
    }

    #[test]
    fn kappa_skip_above_cap() {
        let group = GroupSpec::new("3,2,2").resolve().unwrap();
        let pg = PowerGraph::build(&group, Variant::Proper);
        let opts = ReportOptions { kappa_max_vertices: Some(4) };
        let out = invariant_report(&pg, &opts);
        assert_eq!(out.report.kappa, None);
        assert_eq!(out.skipped.len(), 1);
    }
}
