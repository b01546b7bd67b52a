//! Command-line front end: preset verification, user-supplied amalgam
//! verification, graph building and export.
//!
//! Exit codes: 0 = all checks pass, 1 = a verification check failed,
//! 2 = operational error (unknown preset, missing fixture, I/O,
//! out-of-scope computation).

use arclab::arcs::is_locally_s_arc_transitive_bounded;
use arclab::coset::coset_action;
use arclab::error::Result;
use arclab::graph::{build_coset_graph_bounded, CosetGraph};
use arclab::io::load_generators;
use arclab::presets::{default_data_dir, verify_preset, Thresholds, PRESETS};
use arclab::report::Report;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "arclab",
    version,
    about = "Exact verification of locally s-arc-transitive coset graphs of product-action type"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct BoundArgs {
    /// Largest coset-space index that will be materialized.
    #[arg(long, default_value_t = Thresholds::default().max_index)]
    max_index: usize,
    /// Largest number of arcs enumerated by the direct check.
    #[arg(long, default_value_t = Thresholds::default().max_arcs)]
    max_arcs: usize,
    /// Largest subgroup order enumerated element by element.
    #[arg(long, default_value_t = Thresholds::default().max_enum)]
    max_enum: usize,
}

impl From<BoundArgs> for Thresholds {
    fn from(b: BoundArgs) -> Thresholds {
        Thresholds {
            max_index: b.max_index,
            max_arcs: b.max_arcs,
            max_enum: b.max_enum,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the available presets.
    ListPresets {
        #[arg(long)]
        json: bool,
    },
    /// Run a preset's full self-check.
    VerifyPreset {
        name: String,
        /// Also materialize and check the coset graph where feasible.
        #[arg(long)]
        build_graph: bool,
        /// Fixture directory (defaults to ARCLAB_DATA or the crate's data/).
        #[arg(long)]
        data: Option<PathBuf>,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify a user-supplied amalgam from generator files.
    VerifyAmalgam {
        /// Generator file for the ambient group G.
        #[arg(long)]
        group: PathBuf,
        /// Generator file for the left subgroup L.
        #[arg(long)]
        left: PathBuf,
        /// Generator file for the right subgroup R.
        #[arg(long)]
        right: PathBuf,
        /// Arc length for the direct check on the materialized graph.
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build a preset's coset graph and print its invariants.
    BuildGraph {
        name: String,
        #[arg(long)]
        data: Option<PathBuf>,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build a preset's coset graph and write it to a file.
    Export {
        name: String,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        data: Option<PathBuf>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn emit(report: &Report, output: &OutputArgs) -> Result<()> {
    let text = if output.json {
        report.to_json()
    } else {
        report.render_text()
    };
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::ListPresets { json } => {
            if json {
                let items: Vec<serde_json::Value> = PRESETS
                    .iter()
                    .map(|p| {
                        serde_json::json!({
                            "name": p.name,
                            "summary": p.summary,
                            "needs_fixtures": p.needs_fixtures,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({"schema": 1, "presets": items})
                );
            } else {
                for p in PRESETS {
                    println!("{:32} {}", p.name, p.summary);
                }
            }
            Ok(0)
        }
        Command::VerifyPreset {
            name,
            build_graph,
            data,
            bounds,
            output,
        } => {
            let dir = data.unwrap_or_else(default_data_dir);
            let outcome = verify_preset(&name, &dir, &bounds.into(), build_graph)?;
            emit(&outcome.report, &output)?;
            Ok(if outcome.report.verdict() { 0 } else { 1 })
        }
        Command::VerifyAmalgam {
            group,
            left,
            right,
            s,
            bounds,
            output,
        } => {
            let report = verify_amalgam(&group, &left, &right, s, &bounds.into())?;
            emit(&report, &output)?;
            Ok(if report.verdict() { 0 } else { 1 })
        }
        Command::BuildGraph {
            name,
            data,
            bounds,
            output,
        } => {
            let dir = data.unwrap_or_else(default_data_dir);
            let outcome = verify_preset(&name, &dir, &bounds.into(), true)?;
            let Some(_) = outcome.graph else {
                return Err(arclab::Error::OutOfScope(format!(
                    "preset {name} does not materialize a graph within the index bound"
                )));
            };
            emit(&outcome.report, &output)?;
            Ok(if outcome.report.verdict() { 0 } else { 1 })
        }
        Command::Export {
            name,
            format,
            out,
            data,
            bounds,
        } => {
            let dir = data.unwrap_or_else(default_data_dir);
            let outcome = verify_preset(&name, &dir, &bounds.into(), true)?;
            let Some(cg) = outcome.graph else {
                return Err(arclab::Error::OutOfScope(format!(
                    "preset {name} does not materialize a graph within the index bound"
                )));
            };
            if !outcome.report.verdict() {
                // Refuse to export a graph whose own checks failed.
                eprintln!("{}", outcome.report.render_text());
                return Ok(1);
            }
            let payload = match format {
                ExportFormat::Dot => cg.to_dot(),
                ExportFormat::Json => graph_json(&cg, &outcome.report),
            };
            std::fs::write(out, payload)?;
            Ok(0)
        }
    }
}

fn graph_json(cg: &CosetGraph, report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(&serde_json::json!({
        "schema": 1,
        "subject": report.subject,
        "vertices_left": cg.left_count(),
        "vertices_right": cg.right_count(),
        "valencies": [cg.left_valency(), cg.right_valency()],
        "edges": cg.graph.edges(),
    }))
    .expect("graph serializes");
    s.push('\n');
    s
}

fn verify_amalgam(
    group: &PathBuf,
    left: &PathBuf,
    right: &PathBuf,
    s: usize,
    th: &Thresholds,
) -> Result<Report> {
    let g = load_generators(group)?;
    let l = load_generators(left)?;
    let r = load_generators(right)?;
    // Containment failures are operational errors, not check failures.
    if !l.is_subgroup_of(&g)? || !r.is_subgroup_of(&g)? {
        return Err(arclab::Error::NotASubgroup(
            "L and R must be subgroups of G".into(),
        ));
    }
    let mut report = Report::new("user amalgam");
    report.insert("group_order", g.order().to_string());
    let meet = l.intersect_small(&r, th.max_enum)?;
    report.insert("left_order", l.order().to_string());
    report.insert("right_order", r.order().to_string());
    report.insert("intersection_order", meet.order().to_string());
    let join = l.join(&r)?;
    report.push(
        "G generated by L and R (graph connected)",
        join.order() == g.order(),
        format!("|<L,R>| = {}", join.order()),
    );
    let val_l = l.order() / meet.order();
    let val_r = r.order() / meet.order();
    report.insert("valencies", [val_l.to_string(), val_r.to_string()]);

    // Core-freeness via faithfulness of the two coset actions.
    let index_bound = BigUint::from(th.max_index as u64);
    if g.order() / l.order() <= index_bound && g.order() / r.order() <= index_bound {
        let on_l = coset_action(&g, &l)?;
        let on_r = coset_action(&g, &r)?;
        report.push(
            "coset actions faithful (L and R core-free)",
            on_l.is_faithful() && on_r.is_faithful(),
            format!(
                "action orders {} and {}",
                on_l.action.order(),
                on_r.action.order()
            ),
        );
    }
    let two_at = arclab::arcs::is_locally_2at_amalgam(&l, &r, &meet)?;
    report.push(
        "locally 2-arc-transitive (amalgam criterion)",
        two_at,
        format!("coset actions on {val_l} and {val_r} points"),
    );

    let vertices = g.order() / l.order() + g.order() / r.order();
    if vertices <= index_bound {
        let cg = build_coset_graph_bounded(&g, &l, &r, th.max_index)?;
        report.push(
            "graph connected",
            cg.is_connected()?,
            format!(
                "{} + {} vertices, {} edges",
                cg.left_count(),
                cg.right_count(),
                cg.graph.edge_count()
            ),
        );
        let direct = is_locally_s_arc_transitive_bounded(&cg, s, th.max_arcs)?;
        report.push(
            format!("locally {s}-arc-transitive (direct on graph)"),
            direct.verdict,
            format!(
                "arc orbit counts {:?}",
                direct
                    .per_orbit
                    .iter()
                    .map(|o| o.orbit_count)
                    .collect::<Vec<_>>()
            ),
        );
        report.push(
            "amalgam route agrees with the direct route at s = 2",
            two_at == is_locally_s_arc_transitive_bounded(&cg, 2, th.max_arcs)?.verdict,
            "consistency of the two verification methods",
        );
    } else {
        report.insert("graph", "skipped: vertex count exceeds the index bound");
    }
    Ok(report)
}
