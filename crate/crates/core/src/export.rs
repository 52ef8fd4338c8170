//! Deterministic graph serialization: Graphviz DOT, JSON and plain edge
//! lists.
//!
//! The JSON schema is `{spec, variant, vertices: [{coords, order}], edges:
//! [[i, j], ...]}` where `i`, `j` index the vertices array. Edge-list lines
//! are `a-b` with `a`, `b` the element ranks of the endpoints.

use crate::error::Error;
use crate::graph::{PowerGraph, Variant};
use crate::group::GroupSpec;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    EdgeList,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            "edgelist" => Ok(ExportFormat::EdgeList),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ExportOptions {
    /// Label vertices q1/p2/r3 by element-order class instead of element
    /// labels: `q` for prime orders whose Sylow component is cyclic, `p` for
    /// prime orders with a repeated prime, `r` for composite orders.
    pub order_class_labels: bool,
}

pub fn export_graph(pg: &PowerGraph, format: ExportFormat, options: &ExportOptions) -> String {
    match format {
        ExportFormat::Dot => to_dot(pg, options),
        ExportFormat::Json => to_json(pg),
        ExportFormat::EdgeList => to_edge_list(pg),
    }
}

fn order_class(pg: &PowerGraph, v: usize) -> char {
    let o = pg.vertex_order(v);
    if crate::arith::is_prime(o) {
        if pg.group().sylow_multiplicity(o) == 1 {
            'q'
        } else {
            'p'
        }
    } else {
        'r'
    }
}

fn to_dot(pg: &PowerGraph, options: &ExportOptions) -> String {
    let mut out = String::new();
    let name = pg.display_name();
    let _ = writeln!(
        out,
        "graph \"{}\" {{",
        name.replace('*', "star").replace(['(', ')'], "_")
    );
    let _ = writeln!(out, "  label=\"{name}\";");
    let _ = writeln!(out, "  node [shape=circle];");
    let mut class_counters = [0usize; 3];
    for v in 0..pg.vertex_count() {
        let label = if options.order_class_labels {
            let class = order_class(pg, v);
            let slot = match class {
                'q' => 0,
                'p' => 1,
                _ => 2,
            };
            class_counters[slot] += 1;
            format!("{}{}", class, class_counters[slot])
        } else {
            format!("{} (ord {})", pg.vertex_label(v), pg.vertex_order(v))
        };
        let _ = writeln!(out, "  {} [label=\"{}\"];", pg.element_rank(v), label);
    }
    for (u, v) in pg.graph().edges() {
        let _ = writeln!(out, "  {} -- {};", pg.element_rank(u), pg.element_rank(v));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    spec: String,
    variant: Variant,
    vertices: Vec<VertexJson>,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize, PartialEq)]
struct VertexJson {
    coords: Vec<u64>,
    order: u64,
}

fn graph_json(pg: &PowerGraph) -> GraphJson {
    GraphJson {
        spec: pg.group().canonical_name(),
        variant: pg.variant(),
        vertices: (0..pg.vertex_count())
            .map(|v| VertexJson {
                coords: pg.vertex_element(v).coords().to_vec(),
                order: pg.vertex_order(v),
            })
            .collect(),
        edges: pg.graph().edges().iter().map(|&(u, v)| [u, v]).collect(),
    }
}

fn to_json(pg: &PowerGraph) -> String {
    serde_json::to_string(&graph_json(pg)).expect("serializable")
}

fn to_edge_list(pg: &PowerGraph) -> String {
    let mut out = String::new();
    for (u, v) in pg.graph().edges() {
        let _ = writeln!(out, "{}-{}", pg.element_rank(u), pg.element_rank(v));
    }
    out
}

/// Parses a graph exported as JSON. The graph is rebuilt from its spec and
/// variant, then checked against the serialized vertices and edges, so a
/// successful import always round-trips byte-identically.
pub fn graph_from_json(text: &str) -> Result<PowerGraph, Error> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidGraphJson(e.to_string()))?;
    let group = GroupSpec::new(&parsed.spec).resolve()?;
    let pg = PowerGraph::build(&group, parsed.variant);
    let rebuilt = graph_json(&pg);
    if rebuilt.vertices != parsed.vertices {
        return Err(Error::InvalidGraphJson(
            "vertex list does not match the graph of the spec".to_string(),
        ));
    }
    if rebuilt.edges != parsed.edges {
        return Err(Error::InvalidGraphJson(
            "edge list does not match the graph of the spec".to_string(),
        ));
    }
    Ok(pg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(spec: &str, variant: Variant) -> PowerGraph {
        let group = GroupSpec::new(spec).resolve().unwrap();
        PowerGraph::build(&group, variant)
    }

    #[test]
    fn edge_list_examples() {
        // P*(C3) is a single edge between the two generators
        let pg = build("3", Variant::Proper);
        assert_eq!(to_edge_list(&pg), "1-2\n");

        // P*(C2xC2) has three vertices and no edges
        let pg = build("2,2", Variant::Proper);
        assert_eq!(pg.vertex_count(), 3);
        assert_eq!(to_edge_list(&pg), "");
    }

    #[test]
    fn json_round_trips_bit_identically() {
        for (spec, variant) in [
            ("6", Variant::Proper),
            ("6", Variant::Full),
            ("2,2", Variant::Proper),
            ("2,4", Variant::Full),
            ("12", Variant::Proper),
            ("1", Variant::Full),
        ] {
            let pg = build(spec, variant);
            let text = to_json(&pg);
            let imported = graph_from_json(&text).unwrap();
            assert_eq!(to_json(&imported), text, "{spec} {variant:?}");
        }
    }

    #[test]
    fn json_rejects_tampered_graphs() {
        let pg = build("6", Variant::Proper);
        let text = to_json(&pg);
        let tampered = text.replace("[0,1]", "[0,2]");
        if tampered != text {
            assert!(graph_from_json(&tampered).is_err());
        }
        assert!(graph_from_json("{\"bogus\":1}").is_err());
    }

    #[test]
    fn dot_output_is_deterministic_and_labeled() {
        let pg = build("6", Variant::Proper);
        let dot = to_dot(&pg, &ExportOptions::default());
        assert!(dot.starts_with("graph"));
        assert!(dot.contains("label=\"P*(C2xC3)\""));
        assert!(dot.contains("(ord 6)"));
        assert_eq!(dot, to_dot(&pg, &ExportOptions::default()));

        let classed = to_dot(&pg, &ExportOptions { order_class_labels: true });
        assert!(classed.contains("q1") || classed.contains("r1"));
    }

    #[test]
    fn order_class_labels_match_proof_roles() {
        // C3+C2+C2: q = order-3 (Sylow-3 cyclic), p = order-2 (repeated
        // prime), r = order-6
        let group = GroupSpec::new("3,2,2").resolve().unwrap();
        let pg = PowerGraph::build(&group, Variant::Proper);
        for v in 0..pg.vertex_count() {
            let expected = match pg.vertex_order(v) {
                3 => 'q',
                2 => 'p',
                6 => 'r',
                o => panic!("unexpected order {o}"),
            };
            assert_eq!(order_class(&pg, v), expected);
        }
    }

    #[test]
    fn format_parsing() {
        assert_eq!("dot".parse::<ExportFormat>().unwrap(), ExportFormat::Dot);
        assert_eq!("JSON".parse::<ExportFormat>().unwrap(), ExportFormat::Json);
        assert!("xml".parse::<ExportFormat>().is_err());
    }
}
