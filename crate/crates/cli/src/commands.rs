//! Subcommand implementations.

use crate::{AnalyzeArgs, CliError, EnumerateArgs, ExportArgs, VerifyArgs};
use powerlab_core::{
    enumerate_abelian_groups, export_graph, invariant_report, run_sweep, ExportFormat,
    ExportOptions, GroupSpec, InvariantReport, PowerGraph, ReportOptions, SweepConfig,
    TheoremId, Variant, DEFAULT_ANALYZE_CAP, DEFAULT_SWEEP_CAP, SCHEMA_VERSION,
};
use serde_json::json;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

/// The order cap for a command, overridable via POWERLAB_CAP.
fn order_cap(default: u64) -> Result<u64, CliError> {
    match std::env::var("POWERLAB_CAP") {
        Ok(text) => text.parse().map_err(|_| {
            CliError::Usage(format!("POWERLAB_CAP must be a positive integer, got `{text}`"))
        }),
        Err(_) => Ok(default),
    }
}

fn variant_of(proper: bool) -> Variant {
    if proper {
        Variant::Proper
    } else {
        Variant::Full
    }
}

/// Destination of a graph export flag: explicit path, or a name derived from
/// the graph ("Pstar_C7.dot") when the flag carries no value.
fn export_target(value: &str, pg: &PowerGraph, extension: &str) -> PathBuf {
    if value.is_empty() {
        let prefix = match pg.variant() {
            Variant::Full => "P",
            Variant::Proper => "Pstar",
        };
        PathBuf::from(format!("{prefix}_{}.{extension}", pg.group().canonical_name()))
    } else {
        PathBuf::from(value)
    }
}

fn render_text_report(pg: &PowerGraph, report: &InvariantReport, skipped: &[String]) -> String {
    let group = pg.group();
    let mut out = String::new();
    let kind = if group.is_cyclic() {
        "cyclic".to_string()
    } else {
        "non-cyclic".to_string()
    };
    let p_flag = match group.p_group_prime() {
        Some(p) => format!(", {p}-group"),
        None => String::new(),
    };
    let _ = writeln!(out, "group: {} (order {}, {kind}{p_flag})", group.canonical_name(), group.order());
    let _ = writeln!(
        out,
        "graph: {}: {} vertices, {} edges",
        pg.display_name(),
        pg.vertex_count(),
        pg.edge_count()
    );
    let _ = writeln!(
        out,
        "connected: {} ({} component{})",
        if report.connected { "yes" } else { "no" },
        report.component_count,
        if report.component_count == 1 { "" } else { "s" }
    );
    let _ = writeln!(out, "diameter: {}", report.diameter);
    match (&report.center_vertices, report.center_is_complete) {
        (Some(vs), Some(complete)) => {
            let labels: Vec<String> = vs.iter().map(|&v| pg.vertex_label(v)).collect();
            let _ = writeln!(
                out,
                "center: {{{}}} (complete: {})",
                labels.join(", "),
                if complete { "yes" } else { "no" }
            );
        }
        _ => {
            let _ = writeln!(out, "center: undefined (disconnected graph)");
        }
    }
    match report.kappa {
        Some(k) => {
            let _ = writeln!(out, "kappa: {k}");
        }
        None => {
            let _ = writeln!(out, "kappa: skipped");
        }
    }
    let _ = writeln!(out, "planar: {}", if report.planar { "yes" } else { "no" });
    if let Some(w) = &report.kuratowski_witness {
        let kind = match w.kind {
            powerlab_core::WitnessKind::K5 => "K5-subdivision",
            powerlab_core::WitnessKind::K33 => "K33-subdivision",
        };
        let branches: Vec<String> = w
            .branch_vertices
            .iter()
            .map(|&v| pg.vertex_label(v))
            .collect();
        let _ = writeln!(out, "witness: {kind} with branch vertices {{{}}}", branches.join(", "));
    }
    for s in skipped {
        let _ = writeln!(out, "note: {s}");
    }
    out
}

pub fn analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let cap = order_cap(DEFAULT_ANALYZE_CAP)?;
    let group = GroupSpec::new(&args.spec).resolve_capped(cap)?;
    let variant = variant_of(args.proper);
    let pg = PowerGraph::build(&group, variant);
    let computed = invariant_report(&pg, &ReportOptions::default());

    let rendered = if args.format == "json" {
        let vertices: Vec<serde_json::Value> = (0..pg.vertex_count())
            .map(|v| {
                json!({
                    "coords": pg.vertex_element(v).coords(),
                    "order": pg.vertex_order(v),
                })
            })
            .collect();
        let value = json!({
            "schema_version": SCHEMA_VERSION,
            "spec": group.canonical_name(),
            "variant": variant.as_str(),
            "vertices": vertices,
            "report": computed.report,
            "skipped": computed.skipped,
        });
        let mut text = serde_json::to_string_pretty(&value).expect("serializable");
        text.push('\n');
        text
    } else {
        render_text_report(&pg, &computed.report, &computed.skipped)
    };

    match &args.output {
        Some(path) => fs::write(path, &rendered)?,
        None => print!("{rendered}"),
    }

    let exports = [
        (&args.dot, ExportFormat::Dot, "dot"),
        (&args.json, ExportFormat::Json, "json"),
        (&args.edgelist, ExportFormat::EdgeList, "edgelist"),
    ];
    let options = ExportOptions { order_class_labels: args.order_class_labels };
    for (flag, format, ext) in exports {
        if let Some(value) = flag {
            let path = export_target(value, &pg, ext);
            fs::write(&path, export_graph(&pg, format, &options))?;
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(())
}

pub fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let cap = order_cap(DEFAULT_SWEEP_CAP)?;
    if args.max_order > cap {
        return Err(CliError::Capacity(format!(
            "sweep max order {} exceeds the cap of {cap} (override with POWERLAB_CAP)",
            args.max_order
        )));
    }
    let theorems: Vec<TheoremId> = if args.theorems.trim().eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        args.theorems
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<_, _>>()?
    };
    let families = if args.families.trim().eq_ignore_ascii_case("all") {
        powerlab_core::Family::ALL.to_vec()
    } else {
        args.families
            .split(',')
            .map(|f| f.trim().parse())
            .collect::<Result<_, _>>()?
    };

    if args.min_order > args.max_order {
        eprintln!(
            "warning: empty sweep range {}..{}, nothing to verify",
            args.min_order, args.max_order
        );
    }

    let config = SweepConfig {
        min_order: args.min_order,
        max_order: args.max_order,
        theorems,
        families,
        parallelism: args.parallelism,
        oracle_mode: args.oracle,
    };
    let report = run_sweep(&config);

    fs::create_dir_all(&args.output_dir)?;
    let file = if args.format == "text" {
        let path = args.output_dir.join("summary.txt");
        fs::write(&path, report.summary_table())?;
        path
    } else {
        let path = args.output_dir.join("verdicts.json");
        fs::write(&path, report.to_json())?;
        path
    };

    print!("{}", report.summary_table());
    for v in &report.verdicts {
        eprintln!("{}: {} ms", v.theorem_id, v.wall_ms);
    }
    eprintln!("report written to {}", file.display());

    if args.min_order > args.max_order {
        return Ok(()); // empty sweep: warned above, nothing to gate on
    }
    if report.all_match_expected() {
        Ok(())
    } else {
        let mismatches: Vec<String> = report
            .verdicts
            .iter()
            .filter(|v| !v.matches_expectation())
            .map(|v| format!("{} reported {:?}", v.theorem_id, v.status))
            .collect();
        Err(CliError::VerificationFailed(mismatches.join("; ")))
    }
}

pub fn enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let text = args.range.trim();
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => {
            let lo: u64 = a.trim().parse().map_err(|_| bad_range(text))?;
            let hi: u64 = b.trim().parse().map_err(|_| bad_range(text))?;
            (lo, hi)
        }
        None => {
            let n: u64 = text.parse().map_err(|_| bad_range(text))?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad_range(text));
    }
    for n in lo..=hi {
        let groups = enumerate_abelian_groups(n).map_err(CliError::from)?;
        println!("order {n}: {} group{}", groups.len(), if groups.len() == 1 { "" } else { "s" });
        for g in groups {
            let mut flags = Vec::new();
            if g.is_cyclic() {
                flags.push("cyclic".to_string());
            }
            if let Some(p) = g.p_group_prime() {
                flags.push(format!("{p}-group"));
            }
            let tag = if flags.is_empty() {
                String::new()
            } else {
                format!("  [{}]", flags.join(", "))
            };
            println!("  {}{tag}", g.canonical_name());
        }
    }
    Ok(())
}

fn bad_range(text: &str) -> CliError {
    CliError::Usage(format!(
        "`{text}` is not a valid order or range (expected N or MIN..MAX with MIN >= 1)"
    ))
}

pub fn export(args: ExportArgs) -> Result<(), CliError> {
    let cap = order_cap(DEFAULT_ANALYZE_CAP)?;
    let group = GroupSpec::new(&args.spec).resolve_capped(cap)?;
    let pg = PowerGraph::build(&group, variant_of(args.proper));
    let format: ExportFormat = args.format.parse()?;
    let options = ExportOptions { order_class_labels: args.order_class_labels };
    let rendered = export_graph(&pg, format, &options);
    match &args.output {
        Some(path) => {
            fs::write(path, rendered)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{rendered}"),
    }
    Ok(())
}
