//! Batch command surface: per-graph analysis, Betti tables, exhaustive
//! verification sweeps, and Monte Carlo experiments.
//!
//! [`run`] is the whole program minus process I/O, so tests can drive it
//! directly. Exit codes: 0 success, 1 verification failure or unexplained
//! discrepancy, 2 usage or input error.

use std::collections::BTreeMap;
use std::io::Read as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use compedge::experiments::{
    estimate_licci_probability, threshold_sweep, to_csv, EdgeProbability, ExperimentConfig,
};
use compedge::invariants::{
    cross_validate, huneke_ulrich_check, implication_suite, is_licci, predict_invariants, Claim,
    GraphClass, InvariantReport, LicciReason, Mismatch, OracleInvariants, Tension,
};
use compedge::{enumerate_graphs, hochster_betti, parse_graph, BettiTable, FieldTag, SimpleGraph, SquarefreeIdeal};

mod verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// What a command produced: the payload for stdout and diagnostics for
/// stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome { exit_code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        CommandOutcome { exit_code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "compedge", version, about = "Complementary edge ideals: licci verdicts, Betti numbers, random-graph experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Predicted invariants and licci verdict for a graph.
    Analyze {
        /// Graph file (text or JSON), `-` for stdin.
        graph: String,
        /// Add oracle values, the Betti table and any mismatches.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        field: FieldArg,
        /// Compact single-line JSON instead of pretty-printed.
        #[arg(long)]
        json: bool,
    },
    /// Graded Betti table of S/I_c(G) via Hochster's formula.
    Betti {
        graph: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Exhaustive formula-vs-oracle check over all graphs with 3..=N vertices.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Monte Carlo estimate of the licci fraction for G(n, p), as CSV.
    Montecarlo {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "c", required_unless_present = "c")]
        p: Option<f64>,
        /// Scaled probability p = c / n.
        #[arg(long)]
        c: Option<f64>,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Licci fraction for several c values (p = c / n), as CSV.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        c: Vec<f64>,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Maximum subgraph density m(H) as an exact fraction.
    Mdensity { graph: String },
}

#[derive(Args, Debug, Clone, Copy)]
struct FieldArg {
    /// Coefficient field: gf2 or q.
    #[arg(long = "field", default_value = "gf2")]
    field: FieldTag,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CommandOutcome::ok(text)
            } else {
                CommandOutcome { exit_code: code, stdout: String::new(), stderr: text }
            };
        }
    };
    match cli.command {
        Command::Analyze { graph, oracle, field, json } => {
            with_graph(&graph, |g| analyze(g, oracle, field.field, json))
        }
        Command::Betti { graph, field } => with_graph(&graph, |g| betti(g, field.field)),
        Command::Verify { max_n, field } => verify::run_verify(max_n, field.field),
        Command::Montecarlo { n, p, c, trials, seed } => {
            let spec = match (p, c) {
                (Some(p), None) => EdgeProbability::Absolute(p),
                (None, Some(c)) => EdgeProbability::Scaled(c),
                _ => return CommandOutcome::usage("exactly one of --p and --c is required"),
            };
            match ExperimentConfig::new(n, spec, trials, seed) {
                Ok(cfg) => CommandOutcome::ok(to_csv(&[estimate_licci_probability(&cfg)])),
                Err(e) => CommandOutcome::usage(e),
            }
        }
        Command::Sweep { n, c, trials, seed } => match threshold_sweep(n, &c, trials, seed) {
            Ok(sweep) => {
                let mut out = CommandOutcome::ok(to_csv(&sweep.rows));
                for k in sweep.trend_violations {
                    out.stderr.push_str(&format!(
                        "warning: licci fraction rose from c={} to c={} beyond Monte Carlo noise\n",
                        sweep.rows[k - 1].config.c(),
                        sweep.rows[k].config.c()
                    ));
                }
                out
            }
            Err(e) => CommandOutcome::usage(e),
        },
        Command::Mdensity { graph } => with_graph(&graph, |g| match g.max_subgraph_density() {
            Ok(d) => CommandOutcome::ok(format!("{d}\n")),
            Err(e) => CommandOutcome::usage(e),
        }),
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(Path::new(path)).map_err(|e| format!("{path}: {e}"))
}

fn with_graph(path: &str, f: impl FnOnce(&SimpleGraph) -> CommandOutcome) -> CommandOutcome {
    let text = match read_input(path) {
        Ok(t) => t,
        Err(e) => return CommandOutcome::usage(e),
    };
    match parse_graph(&text) {
        Ok(g) => f(&g),
        Err(e) => CommandOutcome::usage(format!("{path}: {e}")),
    }
}

pub(crate) fn to_json<T: Serialize>(value: &T, compact: bool) -> String {
    let mut s = if compact {
        serde_json::to_string(value)
    } else {
        serde_json::to_string_pretty(value)
    }
    .expect("report types serialize infallibly");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct AnalyzeOutput<'a> {
    graph: &'a SimpleGraph,
    ideal: SquarefreeIdeal,
    #[serde(flatten)]
    report: InvariantReport,
    licci_reason: LicciReason,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleSection>,
}

#[derive(Serialize)]
struct OracleSection {
    field: FieldTag,
    #[serde(flatten)]
    values: OracleInvariants,
    huneke_ulrich: bool,
    betti: BettiTable,
    mismatches: Vec<Mismatch>,
}

fn analyze(g: &SimpleGraph, with_oracle: bool, field: FieldTag, compact: bool) -> CommandOutcome {
    let report = match predict_invariants(g) {
        Ok(r) => r,
        Err(e) => return CommandOutcome::usage(e),
    };
    let verdict = is_licci(g).expect("validated by predict_invariants");
    let ideal = SquarefreeIdeal::complementary_edge_ideal(g).expect("validated by predict_invariants");
    let mut exit_code = EXIT_OK;
    let oracle = if with_oracle {
        let section = hochster_betti(&ideal, field)
            .map_err(|e| e.to_string())
            .and_then(|betti| {
                let d = cross_validate(g, field).map_err(|e| e.to_string())?;
                if d.unexplained().next().is_some() {
                    exit_code = EXIT_DISCREPANCY;
                }
                Ok(OracleSection {
                    field,
                    values: d.oracle,
                    huneke_ulrich: huneke_ulrich_check(d.oracle.reg_quotient, d.oracle.height, d.oracle.indeg),
                    betti,
                    mismatches: d.mismatches,
                })
            });
        match section {
            Ok(s) => Some(s),
            Err(e) => return CommandOutcome::usage(e),
        }
    } else {
        None
    };
    let out = AnalyzeOutput { graph: g, ideal, report, licci_reason: verdict.reason, oracle };
    CommandOutcome { exit_code, stdout: to_json(&out, compact), stderr: String::new() }
}

fn betti(g: &SimpleGraph, field: FieldTag) -> CommandOutcome {
    let ideal = match SquarefreeIdeal::complementary_edge_ideal(g) {
        Ok(i) if !i.is_zero() => i,
        Ok(_) => return CommandOutcome::usage("edgeless graph: I_c(G) is the zero ideal"),
        Err(e) => return CommandOutcome::usage(e),
    };
    match hochster_betti(&ideal, field) {
        Ok(t) => CommandOutcome::ok(to_json(&t, false)),
        Err(e) => CommandOutcome::usage(e),
    }
}

/// Per-graph results of the exhaustive check, shared by `verify` and tests.
#[derive(Debug, Clone, Serialize)]
pub struct GraphCheck {
    pub graph: SimpleGraph,
    pub mismatches: Vec<Mismatch>,
    /// Licci verdict disagrees with `(CM and height 2) or K_3` on the oracle.
    pub licci_equivalence_ok: bool,
    pub huneke_ulrich_ok: bool,
    pub claim_failures: Vec<(Claim, Option<Tension>)>,
}

impl GraphCheck {
    /// Tensions explaining every failure of this graph, or `None` if some
    /// failure is unexplained.
    pub fn explained_by(&self) -> Option<Vec<Tension>> {
        let isolated = !self.graph.isolated_vertices().is_empty();
        let mut out = Vec::new();
        for m in &self.mismatches {
            out.push(m.tension?);
        }
        for (_, t) in &self.claim_failures {
            out.push((*t)?);
        }
        if !self.licci_equivalence_ok || !self.huneke_ulrich_ok {
            if !isolated {
                return None;
            }
            out.push(Tension::IsolatedVertices);
        }
        out.sort();
        out.dedup();
        Some(out)
    }
}

pub fn check_graph(g: &SimpleGraph, field: FieldTag) -> Result<GraphCheck, String> {
    let d = cross_validate(g, field).map_err(|e| e.to_string())?;
    let verdict = is_licci(g).map_err(|e| e.to_string())?;
    let o = d.oracle;
    let k3 = g.n() == 3 && g.is_complete();
    let licci_equivalence_ok = verdict.licci == ((o.cohen_macaulay && o.height == 2) || k3);
    let huneke_ulrich_ok = !verdict.licci || huneke_ulrich_check(o.reg_quotient, o.height, o.indeg);
    let claim_failures = if verdict.licci {
        implication_suite(g, field).map_err(|e| e.to_string())?.violations
    } else {
        Vec::new()
    };
    Ok(GraphCheck { graph: g.clone(), mismatches: d.mismatches, licci_equivalence_ok, huneke_ulrich_ok, claim_failures })
}

/// Every labeled graph with at least one edge on `n` vertices.
pub fn nonempty_graphs(n: usize) -> Result<impl Iterator<Item = SimpleGraph>, String> {
    Ok(enumerate_graphs(n).map_err(|e| e.to_string())?.filter(|g| g.edge_count() > 0))
}

pub(crate) fn class_name(g: &SimpleGraph) -> GraphClass {
    GraphClass::of(g)
}

pub(crate) fn tension_summary(counts: &BTreeMap<Tension, (u64, SimpleGraph)>) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (t, (count, example)) in counts {
        let key = serde_json::to_value(t).expect("tension names serialize");
        map.insert(
            key.as_str().expect("tension serializes as a string").to_string(),
            json!({ "graphs": count, "example": example }),
        );
    }
    serde_json::Value::Object(map)
}
