//! Command-line front end: graph generation, distance dumps, resolving
//! checks, structure analysis, bounds, exact partition-dimension solves,
//! published constructions, and the claim-verification suite.
//!
//! Exit codes: 0 success or confirmed; 1 failed check or refuted claim;
//! 2 usage or input error; 3 undecided under the configured budget.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pdlab::bounds::{chartrand_bounds, lower_bounds};
use pdlab::claims::{ClaimSuiteReport, VerifyConfig};
use pdlab::construct::{build_construction, ConstructionFamily, ConstructionSpec};
use pdlab::dist::all_pairs_distances;
use pdlab::graph::{build, FamilySpec, Graph};
use pdlab::partition::{is_resolving, PartitionClasses, RepresentationTable, ResolveVerdict};
use pdlab::report::{
    to_json_string, BoundsReport, CheckReport, ConstructReport, GraphInfo, PdConfig, PdReport,
    ToolInfo,
};
use pdlab::solver::{
    exists_resolving_partition, partition_dimension, Budget, KOutcome, SolveOpts, SymmetryMode,
};
use pdlab::structure::analyze;

#[derive(Parser)]
#[command(
    name = "pdlab",
    version,
    about = "Partition-dimension laboratory for corona products of complete and wheel graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Markdown,
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SymmetryArg {
    Family,
    Off,
}

#[derive(Args)]
struct SolverArgs {
    /// Node budget for the search; 0 decides nothing.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    budget_seconds: Option<f64>,
    /// Worker threads (default: PDLAB_THREADS, then the pool default).
    #[arg(long)]
    threads: Option<usize>,
    /// Disable the strong-twin separation prune.
    #[arg(long)]
    no_prune_twins: bool,
    /// Copy-symmetry breaking for tagged corona families.
    #[arg(long, value_enum, default_value = "family")]
    symmetry: SymmetryArg,
    /// Include search statistics in reports (node counts vary with thread
    /// count once a witness is found; off by default to keep reports
    /// byte-identical across thread counts).
    #[arg(long)]
    stats: bool,
}

impl SolverArgs {
    fn opts(&self) -> SolveOpts {
        let threads = self.threads.or_else(|| {
            std::env::var("PDLAB_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        });
        SolveOpts {
            budget: Budget {
                nodes: self.budget_nodes,
                seconds: self.budget_seconds,
            },
            prune_twins: !self.no_prune_twins,
            symmetry: match self.symmetry {
                SymmetryArg::Family => SymmetryMode::Family,
                SymmetryArg::Off => SymmetryMode::Off,
            },
            threads,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit a graph as an edge list or DOT.
    Gen {
        /// Family spec (`complete:3`, `corona:complete:3,wheel:4`) or a file.
        input: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump the all-pairs distance matrix.
    Dist {
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether a partition file resolves a graph.
    Check {
        input: String,
        /// Partition file: `{"classes": [["u1", "v1.0"], ...]}`.
        partition: PathBuf,
        /// Also dump per-vertex representations.
        #[arg(long)]
        representations: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Equivalence-structure report: strong/weak pairs, level profiles.
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lower and upper bounds on the partition dimension.
    Bounds {
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact partition dimension (or existence at a fixed class count).
    Pd {
        input: String,
        /// Decide existence of a resolving partition with exactly k classes.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Materialize a published partition and verify it.
    Construct {
        /// One of m=n, m=n+1, m=n+2, k3w4, k3w5.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Interpretation rule-set id (defaults per family).
        #[arg(long)]
        interpretation: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify every registered published claim against computed truth.
    #[command(name = "verify-paper")]
    VerifyPaper {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Largest instance order solved exactly.
        #[arg(long, default_value_t = 21)]
        exact_max_order: usize,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(input: &str) -> pdlab::Result<(Graph, Option<FamilySpec>)> {
    if let Ok(spec) = FamilySpec::parse(input) {
        let g = build(&spec)?;
        return Ok((g, Some(spec)));
    }
    if std::path::Path::new(input).exists() {
        let text = std::fs::read_to_string(input)?;
        let g = pdlab::io::parse_edge_list(&text)?;
        return Ok((g, None));
    }
    // Surface the spec parse error, it is the more likely intent.
    let spec = FamilySpec::parse(input)?;
    Ok((build(&spec)?, Some(spec)))
}

fn emit(out: &Option<PathBuf>, content: &str) -> pdlab::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn run(cli: Cli) -> pdlab::Result<ExitCode> {
    match cli.command {
        Command::Gen { input, format, out } => {
            let (g, _) = load_graph(&input)?;
            let content = match format {
                Format::Dot => pdlab::io::to_dot(&g),
                Format::Edgelist | Format::Text => pdlab::io::serialize_edge_list(&g),
                _ => return usage("gen supports --format edgelist|dot"),
            };
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dist { input, format, out } => {
            let (g, spec) = load_graph(&input)?;
            let m = all_pairs_distances(&g);
            let content = match format {
                Format::Json => {
                    let rows: Vec<Vec<Option<u32>>> = (0..g.order())
                        .map(|u| (0..g.order()).map(|v| m.get(u, v)).collect())
                        .collect();
                    let body = serde_json::json!({
                        "tool": ToolInfo::current(),
                        "command": "dist",
                        "graph": GraphInfo::new(&g, spec.as_ref()),
                        "labels": g.labels(),
                        "dist": rows,
                    });
                    let mut s = serde_json::to_string_pretty(&body)?;
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for u in 0..g.order() {
                        let row: Vec<String> = (0..g.order())
                            .map(|v| match m.get(u, v) {
                                Some(d) => d.to_string(),
                                None => "-".to_string(),
                            })
                            .collect();
                        s.push_str(&format!("{}: {}\n", g.label(u), row.join(" ")));
                    }
                    s
                }
                _ => return usage("dist supports --format text|json"),
            };
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            input,
            partition,
            representations,
            format,
            out,
        } => {
            let (g, spec) = load_graph(&input)?;
            let text = std::fs::read_to_string(&partition)?;
            let classes = PartitionClasses::parse_json(&text)?;
            let p = classes.bind(&g)?;
            let m = all_pairs_distances(&g);
            let verdict = is_resolving(&g, &m, &p)?;
            let reps = if representations {
                let table = RepresentationTable::compute(&m, &p)?;
                let mut map = BTreeMap::new();
                for v in 0..g.order() {
                    map.insert(g.label(v).to_string(), table.rows[v].clone());
                }
                Some(map)
            } else {
                None
            };
            let report = CheckReport {
                tool: ToolInfo::current(),
                command: "check".to_string(),
                graph: GraphInfo::new(&g, spec.as_ref()),
                k: p.k(),
                verdict: verdict.clone(),
                representations: reps,
                notes: spec.map(|s| s.degeneracy_notes()).unwrap_or_default(),
            };
            let content = match format {
                Format::Json => to_json_string(&report),
                Format::Text => report.to_text(),
                _ => return usage("check supports --format text|json"),
            };
            emit(&out, &content)?;
            Ok(match verdict {
                ResolveVerdict::Resolving => ExitCode::SUCCESS,
                ResolveVerdict::Violation { .. } => ExitCode::from(1),
            })
        }
        Command::Analyze { input, format, out } => {
            let (g, spec) = load_graph(&input)?;
            let m = all_pairs_distances(&g);
            let mut notes = spec
                .as_ref()
                .map(|s| s.degeneracy_notes())
                .unwrap_or_default();
            if let Some((n, wm)) = spec.as_ref().and_then(|s| s.as_complete_wheel_corona()) {
                notes.extend(pdlab::structure::corona_family_notes(n, wm));
            }
            let report = analyze(&g, &m, notes);
            let content = match format {
                Format::Json => {
                    let body = serde_json::json!({
                        "tool": ToolInfo::current(),
                        "command": "analyze",
                        "graph": GraphInfo::new(&g, spec.as_ref()),
                        "report": report,
                    });
                    let mut s = serde_json::to_string_pretty(&body)?;
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    s.push_str(&format!("strong groups: {}\n", report.strong_groups.len()));
                    for grp in &report.strong_groups {
                        s.push_str(&format!("  {{{}}}\n", grp.join(", ")));
                    }
                    s.push_str(&format!("strong pairs: {}\n", report.strong_pairs.len()));
                    s.push_str(&format!(
                        "weak pairs (literal or geodesic): {}\n",
                        report.weak_pairs.len()
                    ));
                    s.push_str(&format!(
                        "same-level classes: {}\n",
                        report.same_level_classes.len()
                    ));
                    for class in &report.same_level_classes {
                        s.push_str(&format!("  {{{}}}\n", class.join(", ")));
                    }
                    for n in &report.notes {
                        s.push_str(&format!("note: {n}\n"));
                    }
                    s
                }
                _ => return usage("analyze supports --format text|json"),
            };
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { input, format, out } => {
            let (g, spec) = load_graph(&input)?;
            let m = all_pairs_distances(&g);
            let lbs = lower_bounds(&g, &m)?;
            let (_, upper) = chartrand_bounds(&g, &m)?;
            let report = BoundsReport {
                tool: ToolInfo::current(),
                command: "bounds".to_string(),
                graph: GraphInfo::new(&g, spec.as_ref()),
                lower_bounds: lbs.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                combined_lower: *lbs.values().max().unwrap(),
                chartrand_upper: upper,
                notes: spec.map(|s| s.degeneracy_notes()).unwrap_or_default(),
            };
            let content = match format {
                Format::Json => to_json_string(&report),
                Format::Text => report.to_text(),
                _ => return usage("bounds supports --format text|json"),
            };
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Pd {
            input,
            k,
            solver,
            format,
            out,
        } => {
            let (g, spec) = load_graph(&input)?;
            let opts = solver.opts();
            let tag = spec.as_ref().and_then(|s| s.family_tag());
            let notes = spec
                .as_ref()
                .map(|s| s.degeneracy_notes())
                .unwrap_or_default();
            let config = PdConfig {
                input: spec
                    .as_ref()
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| input.clone()),
                k,
                budget_nodes: opts.budget.nodes,
                budget_seconds: opts.budget.seconds,
                prune_twins: opts.prune_twins,
                symmetry: opts.symmetry,
            };
            let graph_info = GraphInfo::new(&g, spec.as_ref());

            let (report, code) = match k {
                None => {
                    let result = partition_dimension(&g, &opts, tag)?;
                    let code = match result.pd() {
                        Some(_) => ExitCode::SUCCESS,
                        None => ExitCode::from(3),
                    };
                    (
                        PdReport::from_result(config, graph_info, &result, &g, notes, solver.stats),
                        code,
                    )
                }
                Some(k) => {
                    let m = all_pairs_distances(&g);
                    let lbs = lower_bounds(&g, &m)?;
                    let (_, upper) = chartrand_bounds(&g, &m)?;
                    let (outcome, stats) = exists_resolving_partition(&g, &m, k, &opts, tag)?;
                    let (status, witness, code) = match outcome {
                        KOutcome::Found(p) => (
                            "exists",
                            Some(PartitionClasses::from_partition(&p, &g)),
                            ExitCode::SUCCESS,
                        ),
                        KOutcome::Exhausted => ("absent", None, ExitCode::SUCCESS),
                        KOutcome::BudgetExceeded => ("undecided", None, ExitCode::from(3)),
                    };
                    let report = PdReport {
                        tool: ToolInfo::current(),
                        command: "pd".to_string(),
                        config_hash: pdlab::report::config_hash(&config),
                        config,
                        graph: graph_info,
                        lower_bounds: lbs.iter().map(|(n, v)| (n.to_string(), *v)).collect(),
                        combined_lower: *lbs.values().max().unwrap(),
                        upper_bound: upper,
                        status: status.to_string(),
                        pd: None,
                        undecided_at_k: (status == "undecided").then_some(k),
                        witness,
                        notes,
                        stats: solver.stats.then_some(stats),
                    };
                    (report, code)
                }
            };
            let content = match format {
                Format::Json => to_json_string(&report),
                Format::Text => report.to_text(),
                _ => return usage("pd supports --format text|json"),
            };
            emit(&out, &content)?;
            Ok(code)
        }
        Command::Construct {
            family,
            n,
            interpretation,
            format,
            out,
        } => {
            let family = ConstructionFamily::parse(&family)?;
            let c = build_construction(&ConstructionSpec {
                family,
                n,
                interpretation,
            })?;
            let report = ConstructReport::from_construction(&c);
            let content = match format {
                Format::Json => to_json_string(&report),
                Format::Text => report.to_text(),
                _ => return usage("construct supports --format text|json"),
            };
            emit(&out, &content)?;
            Ok(if c.verdict.is_resolving() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::VerifyPaper {
            n_min,
            n_max,
            exact_max_order,
            solver,
            format,
            out,
        } => {
            if n_min > n_max {
                return usage("--n-min must not exceed --n-max");
            }
            let cfg = VerifyConfig {
                n_min,
                n_max,
                exact_max_order,
                opts: solver.opts(),
            };
            let reports = pdlab::claims::verify_claims(&cfg)?;
            let suite = ClaimSuiteReport::new(cfg, reports);
            let content = match format {
                Format::Json => to_json_string(&suite),
                Format::Markdown => suite.to_markdown(),
                Format::Text => {
                    let (c, r, u) = suite.counts();
                    let mut s = suite.to_markdown();
                    s.push_str(&format!("\n{c} confirmed, {r} refuted, {u} undecided\n"));
                    s
                }
                _ => return usage("verify-paper supports --format markdown|json|text"),
            };
            emit(&out, &content)?;
            let (_, refuted, undecided) = suite.counts();
            Ok(if refuted > 0 {
                ExitCode::from(1)
            } else if undecided > 0 {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn usage(msg: &str) -> pdlab::Result<ExitCode> {
    eprintln!("error: {msg}");
    Ok(ExitCode::from(2))
}
