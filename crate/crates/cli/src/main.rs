//! `pcf`: command-line front end for the PCF coloring toolkit.
//!
//! Every subcommand reads one input (a path, or '-' for stdin), writes its
//! result to stdout, and keeps diagnostics on stderr. Exit codes: 0 on
//! success, 1 on domain errors (unparsable data, unsatisfiable instances,
//! failed verification), 2 on usage errors.

use std::fs;
use std::io::{self, Read, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use pcf_core::coloring::{verify_pcf, Coloring};
use pcf_core::discharge::{audit, audit_planar, run, run_planar, AuditReport, ChargeLedger, RuleSetId};
use pcf_core::generate;
use pcf_core::graph::Graph;
use pcf_core::mad::mad_exact;
use pcf_core::plane::PlaneGraph;
use pcf_core::rational::{format_rational, parse_rational, Rational};
use pcf_core::reducer::{
    color_planar7, color_with_options, find_config, ColorOptions, Config, Mode, TerminalCase,
    TraceStep,
};
use pcf_core::solver::{chi_pcf_exact_with_limit, pcf_colorable_with_limit, DEFAULT_SOLVER_LIMIT};

#[derive(Parser)]
#[command(name = "pcf", version, about = "Proper conflict-free graph coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact maximum average degree: prints "p/q" and a densest vertex set.
    Mad {
        /// Edge-list file, or '-' for stdin.
        input: String,
    },
    /// Exact PCF chromatic number by exhaustive search.
    ChiPcf {
        /// Edge-list file, or '-' for stdin.
        input: String,
        /// Vertex cap for the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_SOLVER_LIMIT)]
        limit: usize,
        /// Decide each palette size with the parallel solver.
        #[arg(long)]
        parallel: bool,
    },
    /// Constructive PCF coloring; verifies before printing "v color" lines.
    Color {
        /// Edge-list file (rotation file with --planar), or '-' for stdin.
        input: String,
        /// Palette size.
        #[arg(long)]
        colors: u32,
        /// Reject inputs outside the guaranteed regime before reducing.
        #[arg(long, conflicts_with = "planar")]
        check: bool,
        /// Treat the input as a rotation system (palette must be 7).
        #[arg(long)]
        planar: bool,
        /// Hand irreducible leftovers to the exact solver when small enough.
        #[arg(long, conflicts_with = "planar")]
        exact_fallback: bool,
        /// Write the reduction trace as JSON lines to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Checks a coloring file against a graph: prints OK or the violation.
    Verify {
        /// Edge-list file (rotation file with --planar), or '-' for stdin.
        input: String,
        /// Palette size the coloring claims.
        #[arg(long)]
        colors: u32,
        /// Coloring file of "v color" lines, or '-' for stdin.
        #[arg(long)]
        coloring: String,
        /// Treat the input as a rotation system.
        #[arg(long)]
        planar: bool,
    },
    /// Writes a graph (or rotation system) from a fixed family.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Runs a discharging rule system and audits the final charges.
    Discharge {
        /// Edge-list file (rotation file for planar5), or '-' for stdin.
        input: String,
        /// One of: c4, c5, c6:<palette>, planar5.
        #[arg(long, value_parser = parse_rules)]
        rules: RuleSetId,
    },
    /// Prints the first reducible configuration, or NONE.
    FindConfig {
        /// Edge-list file (rotation file with --planar), or '-' for stdin.
        input: String,
        /// Palette size.
        #[arg(long)]
        colors: u32,
        /// Search the plane-graph families (palette must be 7).
        #[arg(long)]
        planar: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Cycle on n vertices.
    Cycle {
        #[arg(long)]
        n: u32,
        /// Emit the rotation system of the disc embedding.
        #[arg(long)]
        plane: bool,
    },
    /// Path on n vertices.
    Path {
        #[arg(long)]
        n: u32,
    },
    /// Complete graph on n vertices.
    Complete {
        #[arg(long)]
        n: u32,
    },
    /// K_k with every edge subdivided once.
    Kstar {
        #[arg(long)]
        k: u32,
    },
    /// Reads a graph and subdivides every edge once.
    OneSubdivision {
        /// Edge-list file (rotation file with --plane), or '-' for stdin.
        input: String,
        #[arg(long)]
        plane: bool,
    },
    /// Uniform random labeled tree.
    RandomTree {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        seed: u64,
    },
    /// Random connected graph kept under a mad cap.
    RandomSparse {
        #[arg(long)]
        n: u32,
        /// Strict upper bound on the maximum average degree, as "p/q".
        #[arg(long, value_parser = parse_cap)]
        mad_cap: Rational,
        #[arg(long)]
        seed: u64,
    },
    /// Random r-regular graph by pairing-model retries.
    RandomRegular {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        seed: u64,
    },
    /// The dodecahedron (girth-5, 3-regular, planar).
    Dodecahedron {
        /// Emit the rotation system of the standard embedding.
        #[arg(long)]
        plane: bool,
    },
    /// Random girth-5 outerplanar rotation system.
    Outerplanar {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<pcf_core::Error> for Failure {
    fn from(e: pcf_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{path}: {e}")))
    }
}

fn load_graph(path: &str) -> Result<Graph, Failure> {
    Ok(Graph::parse(&read_input(path)?)?)
}

fn load_plane(path: &str) -> Result<PlaneGraph, Failure> {
    Ok(PlaneGraph::parse(&read_input(path)?)?)
}

fn parse_rules(s: &str) -> Result<RuleSetId, String> {
    match s {
        "c4" => Ok(RuleSetId::C4),
        "c5" => Ok(RuleSetId::C5),
        "planar5" => Ok(RuleSetId::Planar5),
        other => match other.strip_prefix("c6:") {
            Some(c) => c
                .parse()
                .map(RuleSetId::C6Plus)
                .map_err(|_| format!("bad palette in '{other}'")),
            None => Err(format!("expected c4, c5, c6:<palette>, or planar5, got '{other}'")),
        },
    }
}

fn parse_cap(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn dispatch(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.cmd {
        Cmd::Mad { input } => cmd_mad(&input),
        Cmd::ChiPcf {
            input,
            limit,
            parallel,
        } => cmd_chi_pcf(&input, limit, parallel),
        Cmd::Color {
            input,
            colors,
            check,
            planar,
            exact_fallback,
            trace,
        } => cmd_color(&input, colors, check, planar, exact_fallback, trace.as_deref()),
        Cmd::Verify {
            input,
            colors,
            coloring,
            planar,
        } => cmd_verify(&input, colors, &coloring, planar),
        Cmd::Generate { family } => cmd_generate(family),
        Cmd::Discharge { input, rules } => cmd_discharge(&input, rules),
        Cmd::FindConfig {
            input,
            colors,
            planar,
        } => cmd_find_config(&input, colors, planar),
    }
}

fn cmd_mad(input: &str) -> Result<ExitCode, Failure> {
    let g = load_graph(input)?;
    let res = mad_exact(&g)?;
    println!("{}", format_rational(res.value));
    let ids: Vec<String> = res.witness.iter().map(ToString::to_string).collect();
    println!("witness {}", ids.join(" "));
    Ok(ExitCode::SUCCESS)
}

fn cmd_chi_pcf(input: &str, limit: usize, parallel: bool) -> Result<ExitCode, Failure> {
    let g = load_graph(input)?;
    let chi = if parallel {
        if g.n_vertices() == 0 {
            0
        } else {
            let mut c = if g.n_edges() == 0 { 1 } else { 2 };
            while !pcf_colorable_with_limit(&g, c, limit)? {
                c += 1;
            }
            c
        }
    } else {
        chi_pcf_exact_with_limit(&g, limit)?
    };
    println!("{chi}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_color(
    input: &str,
    colors: u32,
    check: bool,
    planar: bool,
    exact_fallback: bool,
    trace_path: Option<&std::path::Path>,
) -> Result<ExitCode, Failure> {
    let (g, phi, trace) = if planar {
        if colors != 7 {
            return Err(Failure::Usage(format!(
                "--planar colors with palette 7, got --colors {colors}"
            )));
        }
        let pg = load_plane(input)?;
        let (phi, trace) = color_planar7(&pg)?;
        (pg.graph().clone(), phi, trace)
    } else {
        let g = load_graph(input)?;
        let opts = ColorOptions {
            check_hypotheses: check,
            exact_fallback,
        };
        let (phi, trace) = color_with_options(&g, colors, opts)?;
        (g, phi, trace)
    };
    // The printed coloring is re-checked here, independent of any promise the
    // reducer makes internally.
    let violations = verify_pcf(&g, &phi)?;
    if let Some(first) = violations.first() {
        return Err(Failure::Domain(format!("produced coloring fails: {first}")));
    }
    if let Some(path) = trace_path {
        let mut out = String::new();
        for step in &trace.steps {
            out.push_str(&trace_line(step).to_string());
            out.push('\n');
        }
        fs::write(path, out).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    }
    print!("{phi}");
    io::stdout().flush()?;
    Ok(ExitCode::SUCCESS)
}

/// One reduction step as a JSON line (keys serialize alphabetically).
fn trace_line(step: &TraceStep) -> serde_json::Value {
    match step {
        TraceStep::Reduce { config, n_before } => {
            let actors: Vec<serde_json::Value> =
                config.actors().iter().map(|(name, ids)| json!([name, ids])).collect();
            json!({
                "step": "reduce",
                "n_before": n_before,
                "kind": config.kind_name(),
                "actors": actors,
                "delete": config.deletion_set(),
            })
        }
        TraceStep::Terminal { case, n_before } => match case {
            TerminalCase::Empty => json!({"step": "terminal", "n_before": n_before, "case": "empty"}),
            TerminalCase::CycleComponent { vertices } => json!({
                "step": "terminal",
                "n_before": n_before,
                "case": "cycle-component",
                "vertices": vertices,
            }),
            TerminalCase::RegularSubdivision { r } => json!({
                "step": "terminal",
                "n_before": n_before,
                "case": "regular-subdivision",
                "r": r,
            }),
            TerminalCase::ExactFallback { vertices } => json!({
                "step": "terminal",
                "n_before": n_before,
                "case": "exact-fallback",
                "vertices": vertices,
            }),
        },
    }
}

fn cmd_verify(input: &str, colors: u32, coloring: &str, planar: bool) -> Result<ExitCode, Failure> {
    if input == "-" && coloring == "-" {
        return Err(Failure::Usage(
            "only one of the graph and the coloring can come from stdin".into(),
        ));
    }
    let g = if planar {
        load_plane(input)?.graph().clone()
    } else {
        load_graph(input)?
    };
    let phi = Coloring::parse(&read_input(coloring)?, colors)?;
    let violations = verify_pcf(&g, &phi)?;
    match violations.first() {
        None => {
            println!("OK");
            Ok(ExitCode::SUCCESS)
        }
        Some(first) => {
            println!("{first}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_generate(family: Family) -> Result<ExitCode, Failure> {
    let text = match family {
        Family::Cycle { n, plane: false } => generate::cycle(n)?.to_string(),
        Family::Cycle { n, plane: true } => generate::cycle_plane(n)?.to_string(),
        Family::Path { n } => generate::path(n)?.to_string(),
        Family::Complete { n } => generate::complete(n)?.to_string(),
        Family::Kstar { k } => generate::kstar(k)?.to_string(),
        Family::OneSubdivision { input, plane: false } => {
            generate::one_subdivision(&load_graph(&input)?).to_string()
        }
        Family::OneSubdivision { input, plane: true } => {
            generate::one_subdivision_plane(&load_plane(&input)?).to_string()
        }
        Family::RandomTree { n, seed } => generate::random_tree(n, seed)?.to_string(),
        Family::RandomSparse { n, mad_cap, seed } => {
            generate::random_sparse(n, mad_cap, seed)?.to_string()
        }
        Family::RandomRegular { n, degree, seed } => {
            generate::random_regular(n, degree, seed)?.to_string()
        }
        Family::Dodecahedron { plane: false } => generate::dodecahedron().to_string(),
        Family::Dodecahedron { plane: true } => generate::dodecahedron_plane().to_string(),
        Family::Outerplanar { n, seed } => generate::random_outerplanar_girth5(n, seed)?.to_string(),
    };
    print!("{text}");
    io::stdout().flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_discharge(input: &str, rules: RuleSetId) -> Result<ExitCode, Failure> {
    let (ledger, report) = if rules == RuleSetId::Planar5 {
        let pg = load_plane(input)?;
        (run_planar(&pg)?, audit_planar(&pg)?)
    } else {
        let g = load_graph(input)?;
        (run(&g, rules)?, audit(&g, rules)?)
    };
    print!("{}", render_discharge(rules, &ledger, &report));
    io::stdout().flush()?;
    Ok(ExitCode::SUCCESS)
}

/// Ledger and audit as self-describing lines: `charge <elem> <initial>
/// <final>`, `transfer <rule> <from> <to> <amount>`, then one summary line
/// per fact and the audit's verdict on every deficient element.
fn render_discharge(rules: RuleSetId, ledger: &ChargeLedger, report: &AuditReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("rules {rules}\n"));
    for (elem, init) in &ledger.initial {
        let fin = ledger.final_charges[elem];
        out.push_str(&format!(
            "charge {elem} {} {}\n",
            format_rational(*init),
            format_rational(fin)
        ));
    }
    for t in &ledger.transfers {
        out.push_str(&format!(
            "transfer {} {} {} {}\n",
            t.rule,
            t.from,
            t.to,
            format_rational(t.amount)
        ));
    }
    out.push_str(&format!(
        "total {} {}\n",
        format_rational(ledger.total_initial()),
        format_rational(ledger.total_final())
    ));
    out.push_str(&format!("conserved {}\n", report.conserved));
    out.push_str(&format!("bound {}\n", format_rational(report.bound)));
    out.push_str(&format!("min {}\n", format_rational(report.min_final)));
    for (elem, charge, config) in &report.deficient {
        let reason = match config {
            Some(cfg) => render_config_line(cfg),
            None => "none".into(),
        };
        out.push_str(&format!(
            "deficient {elem} {} {reason}\n",
            format_rational(*charge)
        ));
    }
    if let Some((g0, r)) = &report.tight_structure {
        out.push_str(&format!(
            "tight {r}-regular {} vertices\n",
            g0.n_vertices()
        ));
    }
    out
}

fn cmd_find_config(input: &str, colors: u32, planar: bool) -> Result<ExitCode, Failure> {
    let found = if planar {
        if colors != 7 {
            return Err(Failure::Usage(format!(
                "--planar searches with palette 7, got --colors {colors}"
            )));
        }
        let pg = load_plane(input)?;
        find_config(pg.graph(), 7, Mode::Planar7, Some(&pg))?
    } else {
        let g = load_graph(input)?;
        find_config(&g, colors, Mode::Sparse, None)?
    };
    match found {
        Some(cfg) => {
            println!("{}", render_config_line(&cfg));
            let ids: Vec<String> = cfg.deletion_set().iter().map(ToString::to_string).collect();
            println!("delete {}", ids.join(" "));
        }
        None => println!("NONE"),
    }
    Ok(ExitCode::SUCCESS)
}

/// `<kind> <actor>=<ids>...`, ids comma-joined.
fn render_config_line(cfg: &Config) -> String {
    let mut line = cfg.kind_name().to_string();
    for (name, ids) in cfg.actors() {
        let ids: Vec<String> = ids.iter().map(ToString::to_string).collect();
        line.push_str(&format!(" {name}={}", ids.join(",")));
    }
    line
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_strings_round_trip() {
        assert_eq!(parse_rules("c4"), Ok(RuleSetId::C4));
        assert_eq!(parse_rules("c5"), Ok(RuleSetId::C5));
        assert_eq!(parse_rules("c6:9"), Ok(RuleSetId::C6Plus(9)));
        assert_eq!(parse_rules("planar5"), Ok(RuleSetId::Planar5));
        assert!(parse_rules("c7").is_err());
        assert!(parse_rules("c6:x").is_err());
        for s in ["c4", "c5", "c6:9", "planar5"] {
            assert_eq!(parse_rules(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn config_line_is_compact() {
        let k4 = generate::complete(4).unwrap();
        let cfg = find_config(&k4, 6, Mode::Sparse, None).unwrap().unwrap();
        assert_eq!(render_config_line(&cfg), "combine v1=0 v2=1");
        // Two hubs joined by a 4-thread, a 5-thread, and two 2-threads.
        let g = Graph::from_edges([
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 9),
            (0, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (0, 10),
            (10, 11),
            (11, 9),
            (0, 12),
            (12, 13),
            (13, 9),
        ])
        .unwrap();
        let cfg = find_config(&g, 4, Mode::Sparse, None).unwrap().unwrap();
        assert_eq!(render_config_line(&cfg), "four-thread u1=0 run=1,2,3,4 u2=9");
    }

    #[test]
    fn trace_lines_are_json_objects() {
        let step = TraceStep::Terminal {
            case: TerminalCase::RegularSubdivision { r: 5 },
            n_before: 21,
        };
        let line = trace_line(&step).to_string();
        assert_eq!(
            line,
            r#"{"case":"regular-subdivision","n_before":21,"r":5,"step":"terminal"}"#
        );
    }
}
