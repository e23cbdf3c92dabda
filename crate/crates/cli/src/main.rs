//! Command line front end for the hyperforge library.
//!
//! Exit codes: 0 when the command succeeds and every requested check
//! passes, 1 when some mathematical check fails (a bound is violated, a
//! predicate is false, an input lacks a required property), 2 on usage or
//! input errors, 3 when a search exceeds its budget. Human-readable
//! messages go to stderr; with `--format json` a machine-readable record
//! goes to stdout carrying `"schema": "hyperforge/1"`. CSV output exists
//! only for the flat tables of `bounds`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperforge::bounds::{
    bound_report, deza_order_f, deza_size_bound, furedi_order_bound, furedi_size_bound,
    hall_conjecture_bound, majumder_kernel_bound, nontrivial_order_conjecture,
    ord_ker_bound_1_intersecting, sps_order_bound, sps_size_bound, BoundEntry, BoundValue,
    ReportContext,
};
use hyperforge::constructions::{
    furedi_order_family, lambda_lift, one_intersecting_h_a, sps_star_family, sunflower_family,
    ConstructionError, ConstructionManifest,
};
use hyperforge::diagnostics::{
    classify_degrees, edge_vertex_bound_check, heavy_edge_bound_check, mccarthy_vanstone_check,
    mccarthy_vanstone_max,
};
use hyperforge::geometry::{AffinePlane, ProjectivePlane};
use hyperforge::io::{format_hypergraph, parse_hypergraph};
use hyperforge::kernel::{kernel_degree_rule, min_kernel_exact, KernelBudget, KernelError};
use hyperforge::oracle::{
    enumerate_trees, max_order, max_size, min_kernel_brute, labeled_tree_count, OracleError,
    Predicate, SearchSpace, DEFAULT_NODE_BUDGET,
};
use hyperforge::sps::{
    classify_a_graph, is_bounded, is_one_cross_intersecting, sps_order, sps_report, tree_odd_sum,
    verify_sps, AGraphClass, SetPairSystem, Tree,
};
use hyperforge::{Hypergraph, SCHEMA};

#[derive(Parser)]
#[command(name = "hyperforge")]
#[command(about = "Construction and verification workbench for intersecting hypergraphs \
                   and set pair systems")]
#[command(version)]
struct Cli {
    /// Output format (csv only for the flat tables of `bounds`)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named instance and its manifest of predicted statistics
    #[command(subcommand)]
    Construct(ConstructCommand),

    /// Measure a hypergraph file and check predicates, bounds, and lemmas
    Verify {
        /// Hypergraph file, one edge per line of vertex ids
        #[arg(long)]
        input: PathBuf,

        /// Require the family to be exactly lambda-intersecting
        #[arg(long)]
        lambda: Option<u64>,

        /// Already-known kernel size to report instead of recomputing
        #[arg(long)]
        kernel: Option<u64>,

        /// Also run the structural lemma checks (needs --lambda)
        #[arg(long)]
        diagnostics: bool,
    },

    /// Kernel computations on a hypergraph file
    #[command(subcommand)]
    Kernel(KernelCommand),

    /// Evaluate one closed-form bound at given parameters
    Bounds {
        /// Which bound to evaluate
        #[arg(long, value_enum)]
        theorem: Theorem,

        /// Uniformity k
        #[arg(long)]
        k: Option<u64>,

        /// Pairwise intersection size lambda
        #[arg(long)]
        lambda: Option<u64>,

        /// Maximum degree
        #[arg(long)]
        delta: Option<u64>,

        /// B-side size bound n
        #[arg(long)]
        n: Option<u64>,
    },

    /// Set pair system checks
    #[command(subcommand)]
    Sps(SpsCommand),

    /// Exhaustive searches over small ground sets
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Projective plane of prime order q as a (q+1)-uniform hypergraph
    ProjectivePlane {
        #[arg(long)]
        q: u64,
        /// Write the object here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Affine plane of prime order q (not intersecting; a negative control)
    AffinePlane {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Intersecting k-graph of near-maximal order for max degree delta
    FurediOrder {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        delta: u64,
        /// Uniformity, default 2(q+1)
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Non-sunflower 1-intersecting k-graph with a split classes
    #[command(name = "h-a")]
    HA {
        #[arg(long)]
        k: u64,
        /// How many parallel classes to split, 0..=q+1
        #[arg(long)]
        a: u64,
        /// Plane order, default the largest prime the uniformity affords
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Add lambda-1 shared fresh vertices to a 1-intersecting input
    LambdaLift {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Sunflower with core size lambda and m petals (negative control)
    Sunflower {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Order-extremal (2,n)-bounded 1-cross-intersecting set pair system
    SpsStar {
        /// Positive multiple of 3
        #[arg(long)]
        n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum KernelCommand {
    /// Exhaustive minimum kernel with a certified witness
    Exact {
        #[arg(long)]
        input: PathBuf,
        /// Largest support the search will accept (default 24, max 64)
        #[arg(long)]
        support_limit: Option<usize>,
        /// Worker threads; any count reproduces the single-worker answer
        #[arg(long)]
        workers: Option<usize>,
    },

    /// Closed-form kernel of a 1-intersecting input: degree >= 2 vertices
    DegreeRule {
        #[arg(long)]
        input: PathBuf,
    },

    /// Independent brute-force minimum kernel, size only
    Brute {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    FurediSize,
    DezaSize,
    FurediOrder,
    MajumderKernel,
    #[value(name = "ord-ker-1-intersecting")]
    OrdKer1Intersecting,
    DezaOrderF,
    SpsSize,
    SpsOrder,
    HallConjecture,
    OrderConjecture,
}

#[derive(Subcommand)]
enum SpsCommand {
    /// Check separation, (2,n)-boundedness, and 1-cross-intersection
    Verify {
        /// Set pair system as JSON {"pairs": [{"a": [...], "b": [...]}]}
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: usize,
    },

    /// Measure a system and compare it against the size and order maxima
    Report {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: usize,
    },

    /// Bipartition sum of a tree: sum of odd-distance set sizes over edges
    TreeSum {
        /// Tree edges as id-id pairs, e.g. "1-2,2-3,2-4"
        #[arg(long)]
        edges: String,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Largest edge count over all families in the search space
    MaxSize(OracleSearchArgs),

    /// Largest order over all families in the search space
    MaxOrder(OracleSearchArgs),

    /// Brute-force minimum kernel of a hypergraph file
    MinKernel {
        #[arg(long)]
        input: PathBuf,
    },

    /// Enumerate labeled trees on {1..n} and report the count
    Trees {
        #[arg(long)]
        n: usize,
        /// Also print every tree as space-separated id-id edges
        #[arg(long)]
        list: bool,
    },
}

#[derive(clap::Args)]
struct OracleSearchArgs {
    /// Uniformity of the enumerated edges
    #[arg(long)]
    k: usize,

    /// Ground set is {1..n_max}, at most 12
    #[arg(long)]
    n_max: usize,

    /// Cap on the number of edges per family
    #[arg(long)]
    m_max: Option<usize>,

    /// Keep only pairwise intersecting families
    #[arg(long)]
    intersecting: bool,

    /// Keep only exactly lambda-intersecting families
    #[arg(long)]
    lambda: Option<usize>,

    /// Drop sunflowers (including families of at most two edges)
    #[arg(long)]
    non_sunflower: bool,

    /// Cap on the degree of every vertex
    #[arg(long)]
    max_degree: Option<usize>,

    /// Node budget; overrides HYPERFORGE_BUDGET and the built-in default
    #[arg(long)]
    budget: Option<u64>,
}

// ---------------------------------------------------------------------------
// error plumbing

struct CliError {
    code: u8,
    message: String,
    /// Machine record for stdout when the failing command ran under
    /// --format json.
    payload: Option<Value>,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError { code: 2, message: message.into(), payload: None }
}

fn failed_check(message: impl Into<String>) -> CliError {
    CliError { code: 1, message: message.into(), payload: None }
}

fn budget_exceeded(message: impl Into<String>) -> CliError {
    CliError { code: 3, message: message.into(), payload: None }
}

impl CliError {
    fn with_payload(mut self, format: Format, payload: Value) -> CliError {
        if format == Format::Json {
            self.payload = Some(payload);
        }
        self
    }
}

fn main() -> ExitCode {
    // die quietly on a closed pipe like any line-oriented tool
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if let Some(payload) = &e.payload {
                print_json(payload);
            }
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let format = cli.format;
    if format == Format::Csv && !matches!(cli.command, Command::Bounds { .. }) {
        return Err(usage("csv output exists only for `bounds`"));
    }
    match cli.command {
        Command::Construct(c) => run_construct(c, format),
        Command::Verify { input, lambda, kernel, diagnostics } => {
            run_verify(&input, lambda, kernel, diagnostics, format)
        }
        Command::Kernel(c) => run_kernel(c, format),
        Command::Bounds { theorem, k, lambda, delta, n } => {
            run_bounds(theorem, k, lambda, delta, n, format)
        }
        Command::Sps(c) => run_sps(c, format),
        Command::Oracle(c) => run_oracle(c, format),
    }
}

// ---------------------------------------------------------------------------
// shared helpers

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json serializes"));
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_hypergraph(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_sps(path: &Path) -> Result<SetPairSystem, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    SetPairSystem::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("HYPERFORGE_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| usage(format!("HYPERFORGE_BUDGET is not a nonnegative integer: {s:?}"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn opt_u64(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn a_class_text(c: &AGraphClass) -> String {
    match c {
        AGraphClass::OddCycle { length } => format!("odd cycle of length {length}"),
        AGraphClass::Forest { components } => format!("forest with {components} component(s)"),
        AGraphClass::Other => "other".to_string(),
    }
}

fn bound_entry_text(e: &BoundEntry) -> String {
    let tag = match e.status {
        hyperforge::bounds::BoundStatus::Theorem => "",
        hyperforge::bounds::BoundStatus::Conjecture => " [conjecture]",
    };
    if !e.applicable {
        return format!("bound {}{tag}: not applicable", e.bound);
    }
    let value = e.value.as_ref().expect("applicable entries carry a value");
    let verdict = e.verdict.expect("applicable entries carry a verdict");
    let measured = e.measured.expect("applicable entries carry a measurement");
    format!(
        "bound {}{tag}: {} (measured {measured}, bound {})",
        e.bound,
        verdict.as_str(),
        value.display,
    )
}

// ---------------------------------------------------------------------------
// construct

enum Constructed {
    Hypergraph(Hypergraph),
    Sps(SetPairSystem),
}

impl Constructed {
    fn file_text(&self) -> String {
        match self {
            Constructed::Hypergraph(h) => format_hypergraph(h),
            Constructed::Sps(s) => {
                let mut text =
                    serde_json::to_string_pretty(&s.to_json()).expect("json serializes");
                text.push('\n');
                text
            }
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Constructed::Hypergraph(_) => "hypergraph",
            Constructed::Sps(_) => "sps",
        }
    }
}

fn run_construct(cmd: ConstructCommand, format: Format) -> Result<u8, CliError> {
    let (object, manifest, out) = build_construct(cmd)?;
    match format {
        Format::Text => {
            if let Some(path) = &out {
                write_file(path, &object.file_text())?;
                println!("wrote {}", path.display());
                println!("name: {}", manifest.name);
                let params: Vec<String> = manifest
                    .parameters
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                println!("parameters: {}", params.join(" "));
                println!("predicted edges: {}", manifest.predicted_edge_count);
                println!("predicted order: {}", manifest.predicted_order);
                println!("predicted kernel: {}", opt_u64(manifest.predicted_kernel));
            } else {
                print!("{}", object.file_text());
            }
        }
        Format::Json => {
            let mut body = json!({
                "schema": SCHEMA,
                "command": "construct",
                "kind": object.kind(),
                "manifest": manifest.to_json(),
            });
            if let Some(path) = &out {
                write_file(path, &object.file_text())?;
                body["output"] = json!(path.display().to_string());
            } else {
                match &object {
                    Constructed::Hypergraph(h) => body["hypergraph"] = json!(format_hypergraph(h)),
                    Constructed::Sps(s) => body["sps"] = s.to_json(),
                }
            }
            print_json(&body);
        }
        Format::Csv => unreachable!("rejected in run"),
    }
    Ok(0)
}

fn build_construct(
    cmd: ConstructCommand,
) -> Result<(Constructed, ConstructionManifest, Option<PathBuf>), CliError> {
    match cmd {
        ConstructCommand::ProjectivePlane { q, out } => {
            let plane = ProjectivePlane::new(q).map_err(|e| usage(e.to_string()))?;
            let points = q * q + q + 1;
            let manifest = ConstructionManifest {
                name: "projective-plane".into(),
                parameters: BTreeMap::from([("q".to_string(), q)]),
                predicted_edge_count: points,
                predicted_order: points,
                // 1-intersecting with every point of degree q+1 >= 2, so
                // the degree rule keeps every point
                predicted_kernel: Some(points),
            };
            Ok((Constructed::Hypergraph(plane.to_hypergraph()), manifest, out))
        }
        ConstructCommand::AffinePlane { q, out } => {
            let plane = AffinePlane::new(q).map_err(|e| usage(e.to_string()))?;
            let manifest = ConstructionManifest {
                name: "affine-plane".into(),
                parameters: BTreeMap::from([("q".to_string(), q)]),
                predicted_edge_count: q * q + q,
                predicted_order: q * q,
                predicted_kernel: None,
            };
            Ok((Constructed::Hypergraph(plane.to_hypergraph()), manifest, out))
        }
        ConstructCommand::FurediOrder { q, delta, k, out } => {
            let (h, manifest) =
                furedi_order_family(q, delta, k).map_err(construction_usage)?;
            Ok((Constructed::Hypergraph(h), manifest, out))
        }
        ConstructCommand::HA { k, a, q, out } => {
            let (h, manifest) = one_intersecting_h_a(k, a, q).map_err(construction_usage)?;
            Ok((Constructed::Hypergraph(h), manifest, out))
        }
        ConstructCommand::LambdaLift { input, lambda, out } => {
            let base = read_hypergraph(&input)?;
            let lifted = lambda_lift(&base, lambda).map_err(|e| match e {
                ConstructionError::LambdaNotPositive => usage(e.to_string()),
                _ => failed_check(format!("{}: {e}", input.display())),
            })?;
            let manifest = ConstructionManifest {
                name: "lambda-lift".into(),
                parameters: BTreeMap::from([("lambda".to_string(), lambda)]),
                predicted_edge_count: base.edge_count() as u64,
                predicted_order: base.order() as u64 + lambda - 1,
                // for lambda >= 2 any one of the added shared vertices is
                // a singleton kernel
                predicted_kernel: (lambda >= 2).then_some(1),
            };
            Ok((Constructed::Hypergraph(lifted), manifest, out))
        }
        ConstructCommand::Sunflower { k, lambda, m, out } => {
            let h = sunflower_family(k, lambda, m).map_err(construction_usage)?;
            let manifest = ConstructionManifest {
                name: "sunflower-family".into(),
                parameters: BTreeMap::from([
                    ("k".to_string(), k),
                    ("lambda".to_string(), lambda),
                    ("m".to_string(), m),
                ]),
                predicted_edge_count: m,
                predicted_order: lambda + m * (k - lambda),
                // a single core vertex hits every edge and every trace;
                // with an empty core the family is intersecting only when
                // it is a single edge
                predicted_kernel: (lambda >= 1 || m == 1).then_some(1),
            };
            Ok((Constructed::Hypergraph(h), manifest, out))
        }
        ConstructCommand::SpsStar { n, out } => {
            let (s, manifest) = sps_star_family(n).map_err(construction_usage)?;
            Ok((Constructed::Sps(s), manifest, out))
        }
    }
}

fn construction_usage(e: ConstructionError) -> CliError {
    usage(e.to_string())
}

// ---------------------------------------------------------------------------
// verify

struct DiagRecord {
    check: &'static str,
    /// pass, fail, or skipped
    outcome: &'static str,
    detail: Option<String>,
}

fn diag_record<T>(
    check: &'static str,
    result: Result<T, hyperforge::diagnostics::DiagnosticsError>,
    judge: impl FnOnce(&T) -> (bool, Option<String>),
) -> DiagRecord {
    match result {
        Ok(value) => {
            let (pass, detail) = judge(&value);
            DiagRecord { check, outcome: if pass { "pass" } else { "fail" }, detail }
        }
        Err(e) => DiagRecord { check, outcome: "skipped", detail: Some(e.to_string()) },
    }
}

fn run_verify(
    input: &Path,
    lambda: Option<u64>,
    kernel: Option<u64>,
    diagnostics: bool,
    format: Format,
) -> Result<u8, CliError> {
    if diagnostics && lambda.is_none() {
        return Err(usage("--diagnostics needs --lambda"));
    }
    let h = read_hypergraph(input)?;

    let mut checks: Vec<(String, bool)> = Vec::new();
    if let Some(l) = lambda {
        checks.push((
            format!("lambda-intersecting({l})"),
            h.is_lambda_intersecting(l as usize),
        ));
    }

    let ctx = ReportContext { lambda, kernel };
    let report = bound_report(&h, &ctx);

    let diag_records: Vec<DiagRecord> = if diagnostics {
        let l = lambda.expect("checked above");
        vec![
            diag_record("edge-vertex-bound", edge_vertex_bound_check(&h, l), |&ok| (ok, None)),
            diag_record("degree-residual", mccarthy_vanstone_check(&h, l), |&ok| {
                let max = mccarthy_vanstone_max(&h, l).expect("same preconditions");
                (ok, Some(format!("max residual {max}")))
            }),
            diag_record("degree-dichotomy", classify_degrees(&h, l), |c| {
                (
                    c.violations.is_empty(),
                    Some(format!(
                        "low {}, heavy {}, violations {}",
                        c.low.len(),
                        c.heavy.len(),
                        c.violations.len()
                    )),
                )
            }),
            diag_record("heavy-edges", heavy_edge_bound_check(&h, l), |&ok| (ok, None)),
        ]
    } else {
        Vec::new()
    };

    let passed = checks.iter().all(|(_, ok)| *ok)
        && report.all_theorems_hold()
        && diag_records.iter().all(|d| d.outcome != "fail");

    match format {
        Format::Text => {
            let s = &report.stats;
            println!("edges: {}", s.edge_count);
            println!("order: {}", s.order);
            println!("max degree: {}", s.max_degree);
            println!("uniformity: {}", opt_u64(s.uniformity));
            println!("lambda: {}", opt_u64(s.lambda));
            println!("kernel: {}", opt_u64(s.kernel));
            println!("intersecting: {}", yes_no(s.intersecting));
            println!("sunflower: {}", yes_no(s.sunflower));
            println!("trivial: {}", yes_no(s.trivial_intersecting));
            for (name, ok) in &checks {
                println!("check {name}: {}", if *ok { "pass" } else { "fail" });
            }
            for e in &report.entries {
                println!("{}", bound_entry_text(e));
            }
            for d in &diag_records {
                match &d.detail {
                    Some(detail) => println!("diagnostic {}: {} ({detail})", d.check, d.outcome),
                    None => println!("diagnostic {}: {}", d.check, d.outcome),
                }
            }
            println!("result: {}", if passed { "PASS" } else { "FAIL" });
        }
        Format::Json => {
            let body = json!({
                "schema": SCHEMA,
                "command": "verify",
                "input": input.display().to_string(),
                "checks": checks
                    .iter()
                    .map(|(name, ok)| json!({"check": name, "outcome": if *ok { "pass" } else { "fail" }}))
                    .collect::<Vec<_>>(),
                "report": report.to_json(),
                "diagnostics": if diagnostics {
                    json!(diag_records
                        .iter()
                        .map(|d| json!({
                            "check": d.check,
                            "outcome": d.outcome,
                            "detail": d.detail,
                        }))
                        .collect::<Vec<_>>())
                } else {
                    Value::Null
                },
                "passed": passed,
            });
            print_json(&body);
        }
        Format::Csv => unreachable!("rejected in run"),
    }
    Ok(if passed { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// kernel

fn run_kernel(cmd: KernelCommand, format: Format) -> Result<u8, CliError> {
    match cmd {
        KernelCommand::Exact { input, support_limit, workers } => {
            let h = read_hypergraph(&input)?;
            let defaults = KernelBudget::default();
            let budget = KernelBudget {
                support_limit: support_limit.unwrap_or(defaults.support_limit),
                workers: workers.unwrap_or(defaults.workers),
            };
            let result = min_kernel_exact(&h, &budget).map_err(|e| kernel_error(e, format))?;
            let witness: Vec<u64> = result.witness.iter().map(|v| v.0).collect();
            match format {
                Format::Text => {
                    println!("size: {}", result.size);
                    let ids: Vec<String> = witness.iter().map(u64::to_string).collect();
                    println!("witness: {}", ids.join(" "));
                }
                Format::Json => print_json(&json!({
                    "schema": SCHEMA,
                    "command": "kernel-exact",
                    "size": result.size,
                    "witness": witness,
                })),
                Format::Csv => unreachable!("rejected in run"),
            }
            Ok(0)
        }
        KernelCommand::DegreeRule { input } => {
            let h = read_hypergraph(&input)?;
            let set = kernel_degree_rule(&h).map_err(|e| kernel_error(e, format))?;
            let members: Vec<u64> = set.iter().map(|v| v.0).collect();
            match format {
                Format::Text => {
                    println!("size: {}", members.len());
                    let ids: Vec<String> = members.iter().map(u64::to_string).collect();
                    println!("witness: {}", ids.join(" "));
                }
                Format::Json => print_json(&json!({
                    "schema": SCHEMA,
                    "command": "kernel-degree-rule",
                    "size": members.len(),
                    "witness": members,
                })),
                Format::Csv => unreachable!("rejected in run"),
            }
            Ok(0)
        }
        KernelCommand::Brute { input } => {
            let h = read_hypergraph(&input)?;
            let size = min_kernel_brute(&h).map_err(|e| oracle_error(e, format))?;
            match format {
                Format::Text => println!("size: {size}"),
                Format::Json => print_json(&json!({
                    "schema": SCHEMA,
                    "command": "kernel-brute",
                    "size": size,
                })),
                Format::Csv => unreachable!("rejected in run"),
            }
            Ok(0)
        }
    }
}

fn kernel_error(e: KernelError, format: Format) -> CliError {
    match e {
        KernelError::SupportLimitExceeded { support, limit, upper_bound } => {
            budget_exceeded(e.to_string()).with_payload(
                format,
                json!({
                    "schema": SCHEMA,
                    "command": "kernel-exact",
                    "error": "support-limit-exceeded",
                    "support": support,
                    "limit": limit,
                    "upper_bound": upper_bound,
                }),
            )
        }
        KernelError::NotIntersecting
        | KernelError::NotOneIntersecting
        | KernelError::DegreeRuleTooFewEdges(_) => failed_check(e.to_string()),
        KernelError::OutsideSupport(_) => usage(e.to_string()),
    }
}

fn oracle_error(e: OracleError, format: Format) -> CliError {
    match e {
        OracleError::BudgetExceeded { budget } => budget_exceeded(e.to_string()).with_payload(
            format,
            json!({
                "schema": SCHEMA,
                "command": "oracle",
                "error": "budget-exceeded",
                "budget": budget,
            }),
        ),
        OracleError::SupportTooLarge { support } => {
            budget_exceeded(e.to_string()).with_payload(
                format,
                json!({
                    "schema": SCHEMA,
                    "command": "oracle",
                    "error": "support-too-large",
                    "support": support,
                }),
            )
        }
        OracleError::NotIntersecting => failed_check(e.to_string()),
        OracleError::GroundSetTooLarge { .. }
        | OracleError::BadUniformity { .. }
        | OracleError::TreeCountOutOfRange { .. } => usage(e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// bounds

fn run_bounds(
    theorem: Theorem,
    k: Option<u64>,
    lambda: Option<u64>,
    delta: Option<u64>,
    n: Option<u64>,
    format: Format,
) -> Result<u8, CliError> {
    struct Param {
        flag: &'static str,
        given: Option<u64>,
        needed: bool,
    }
    let needs = |t: Theorem| -> (&'static str, [bool; 4]) {
        // (name, [k, lambda, delta, n])
        match t {
            Theorem::FurediSize => ("furedi-size", [true, false, true, false]),
            Theorem::DezaSize => ("deza-size", [true, true, false, false]),
            Theorem::FurediOrder => ("furedi-order", [true, false, true, false]),
            Theorem::MajumderKernel => ("majumder-kernel", [true, false, false, false]),
            Theorem::OrdKer1Intersecting => {
                ("ord-ker-1-intersecting", [true, false, false, false])
            }
            Theorem::DezaOrderF => ("deza-order-f", [true, true, false, false]),
            Theorem::SpsSize => ("sps-size", [false, false, false, true]),
            Theorem::SpsOrder => ("sps-order", [false, false, false, true]),
            Theorem::HallConjecture => ("hall-conjecture", [true, true, false, false]),
            Theorem::OrderConjecture => ("order-conjecture", [true, true, false, false]),
        }
    };
    let (name, mask) = needs(theorem);
    let params = [
        Param { flag: "--k", given: k, needed: mask[0] },
        Param { flag: "--lambda", given: lambda, needed: mask[1] },
        Param { flag: "--delta", given: delta, needed: mask[2] },
        Param { flag: "--n", given: n, needed: mask[3] },
    ];
    for p in &params {
        if p.needed && p.given.is_none() {
            return Err(usage(format!("{name} needs {}", p.flag)));
        }
        if !p.needed && p.given.is_some() {
            return Err(usage(format!("{name} does not take {}", p.flag)));
        }
    }
    let value: BoundValue = match theorem {
        Theorem::FurediSize => furedi_size_bound(k.unwrap(), delta.unwrap()),
        Theorem::DezaSize => deza_size_bound(k.unwrap(), lambda.unwrap()),
        Theorem::FurediOrder => furedi_order_bound(k.unwrap(), delta.unwrap()),
        Theorem::MajumderKernel => majumder_kernel_bound(k.unwrap()),
        Theorem::OrdKer1Intersecting => ord_ker_bound_1_intersecting(k.unwrap()),
        Theorem::DezaOrderF => deza_order_f(k.unwrap(), lambda.unwrap()),
        Theorem::SpsSize => sps_size_bound(n.unwrap()),
        Theorem::SpsOrder => sps_order_bound(n.unwrap()),
        Theorem::HallConjecture => hall_conjecture_bound(k.unwrap(), lambda.unwrap()),
        Theorem::OrderConjecture => nontrivial_order_conjecture(k.unwrap(), lambda.unwrap()),
    }
    .map_err(|e| usage(e.to_string()))?;

    match format {
        Format::Text => {
            let shown: Vec<String> = params
                .iter()
                .filter_map(|p| p.given.map(|v| format!("{} = {v}", &p.flag[2..])))
                .collect();
            println!("{name}({})", shown.join(", "));
            println!("value: {}", value.display);
            if let Some(exact) = &value.exact {
                println!("exact: {exact}");
            }
            println!(
                "certified: [{}, {}]",
                value.floor_certified, value.ceil_certified
            );
            println!("status: {}", value.status.as_str());
        }
        Format::Json => {
            let mut parameters = serde_json::Map::new();
            for p in &params {
                if let Some(v) = p.given {
                    parameters.insert(p.flag[2..].to_string(), json!(v));
                }
            }
            print_json(&json!({
                "schema": SCHEMA,
                "command": "bounds",
                "theorem": name,
                "parameters": parameters,
                "value": value.to_json(),
            }));
        }
        Format::Csv => {
            println!("theorem,k,lambda,delta,n,exact,floor_certified,ceil_certified,display,status");
            println!(
                "{name},{},{},{},{},{},{},{},{},{}",
                opt_csv(k),
                opt_csv(lambda),
                opt_csv(delta),
                opt_csv(n),
                value.exact.as_ref().map_or_else(String::new, |r| r.to_string()),
                value.floor_certified,
                value.ceil_certified,
                value.display,
                value.status.as_str(),
            );
        }
    }
    Ok(0)
}

fn opt_csv(v: Option<u64>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

// ---------------------------------------------------------------------------
// sps

fn run_sps(cmd: SpsCommand, format: Format) -> Result<u8, CliError> {
    match cmd {
        SpsCommand::Verify { input, n } => {
            let s = read_sps(&input)?;
            let separated = verify_sps(&s);
            let bounded = is_bounded(&s, 2, n);
            let cross = separated && is_one_cross_intersecting(&s).unwrap_or(false);
            let a_class = classify_a_graph(&s).ok();
            let passed = separated && bounded && cross;
            match format {
                Format::Text => {
                    println!("pairs: {}", s.len());
                    println!("order: {}", sps_order(&s));
                    println!("check set-pair-system: {}", if separated { "pass" } else { "fail" });
                    println!("check bounded(2, {n}): {}", if bounded { "pass" } else { "fail" });
                    println!(
                        "check one-cross-intersecting: {}",
                        if cross { "pass" } else { "fail" }
                    );
                    match &a_class {
                        Some(c) => println!("a-graph: {}", a_class_text(c)),
                        None => println!("a-graph: -"),
                    }
                    println!("result: {}", if passed { "PASS" } else { "FAIL" });
                }
                Format::Json => print_json(&json!({
                    "schema": SCHEMA,
                    "command": "sps-verify",
                    "n": n,
                    "pairs": s.len(),
                    "order": sps_order(&s),
                    "checks": [
                        {"check": "set-pair-system", "outcome": if separated { "pass" } else { "fail" }},
                        {"check": format!("bounded(2, {n})"), "outcome": if bounded { "pass" } else { "fail" }},
                        {"check": "one-cross-intersecting", "outcome": if cross { "pass" } else { "fail" }},
                    ],
                    "a_graph": a_class.map(|c| a_class_text(&c)),
                    "passed": passed,
                })),
                Format::Csv => unreachable!("rejected in run"),
            }
            Ok(if passed { 0 } else { 1 })
        }
        SpsCommand::Report { input, n } => {
            let s = read_sps(&input)?;
            let report = sps_report(&s, n).map_err(|e| failed_check(e.to_string()))?;
            let passed = report.all_theorems_hold();
            match format {
                Format::Text => {
                    println!("n: {}", report.n);
                    println!("pairs: {}", report.pair_count);
                    println!("order: {}", report.order);
                    match &report.a_class {
                        Some(c) => println!("a-graph: {}", a_class_text(c)),
                        None => println!("a-graph: -"),
                    }
                    for e in &report.entries {
                        println!("{}", bound_entry_text(e));
                    }
                    println!("result: {}", if passed { "PASS" } else { "FAIL" });
                }
                Format::Json => {
                    let mut body = json!({
                        "schema": SCHEMA,
                        "command": "sps-report",
                        "passed": passed,
                    });
                    body["report"] = report.to_json();
                    print_json(&body);
                }
                Format::Csv => unreachable!("rejected in run"),
            }
            Ok(if passed { 0 } else { 1 })
        }
        SpsCommand::TreeSum { edges } => {
            let tree = parse_tree(&edges)?;
            let (sum, b, w) = tree_odd_sum(&tree);
            let t = tree.edge_count() as u64;
            let lower = t * t / 2;
            let tight = sum == lower;
            match format {
                Format::Text => {
                    println!("edges: {t}");
                    println!("bipartition: {b} + {w}");
                    println!("sum: {sum}");
                    println!("lower bound floor(t^2/2): {lower}");
                    println!("tight: {}", yes_no(tight));
                }
                Format::Json => print_json(&json!({
                    "schema": SCHEMA,
                    "command": "sps-tree-sum",
                    "edges": t,
                    "classes": [b, w],
                    "sum": sum,
                    "lower_bound": lower,
                    "tight": tight,
                })),
                Format::Csv => unreachable!("rejected in run"),
            }
            Ok(0)
        }
    }
}

/// Parses "1-2,2-3" or "1-2 2-3" into a tree.
fn parse_tree(text: &str) -> Result<Tree, CliError> {
    let mut edges = Vec::new();
    for token in text.split([',', ' ']).filter(|t| !t.trim().is_empty()) {
        let (a, b) = token
            .trim()
            .split_once('-')
            .ok_or_else(|| usage(format!("edge {token:?} is not of the form id-id")))?;
        let a: u64 = a
            .parse()
            .map_err(|_| usage(format!("{a:?} is not a nonnegative integer vertex id")))?;
        let b: u64 = b
            .parse()
            .map_err(|_| usage(format!("{b:?} is not a nonnegative integer vertex id")))?;
        edges.push((a, b));
    }
    Tree::from_edge_ids(edges).map_err(|e| usage(e.to_string()))
}

// ---------------------------------------------------------------------------
// oracle

fn run_oracle(cmd: OracleCommand, format: Format) -> Result<u8, CliError> {
    match cmd {
        OracleCommand::MaxSize(args) => run_search(args, format, "oracle-max-size", max_size),
        OracleCommand::MaxOrder(args) => run_search(args, format, "oracle-max-order", max_order),
        OracleCommand::MinKernel { input } => {
            let h = read_hypergraph(&input)?;
            let size = min_kernel_brute(&h).map_err(|e| oracle_error(e, format))?;
            match format {
                Format::Text => println!("size: {size}"),
                Format::Json => print_json(&json!({
                    "schema": SCHEMA,
                    "command": "oracle-min-kernel",
                    "size": size,
                })),
                Format::Csv => unreachable!("rejected in run"),
            }
            Ok(0)
        }
        OracleCommand::Trees { n, list } => {
            let trees = enumerate_trees(n).map_err(|e| oracle_error(e, format))?;
            let count = labeled_tree_count(n);
            match format {
                Format::Text => {
                    println!("n: {n}");
                    println!("count: {count}");
                    if list {
                        for tree in trees {
                            println!("{}", tree_text(&tree));
                        }
                    }
                }
                Format::Json => {
                    let listed: Option<Vec<String>> =
                        list.then(|| trees.map(|t| tree_text(&t)).collect());
                    print_json(&json!({
                        "schema": SCHEMA,
                        "command": "oracle-trees",
                        "n": n,
                        "count": count,
                        "trees": listed,
                    }));
                }
                Format::Csv => unreachable!("rejected in run"),
            }
            Ok(0)
        }
    }
}

fn tree_text(tree: &Tree) -> String {
    let edges: Vec<String> = tree
        .edges()
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect();
    edges.join(" ")
}

fn run_search(
    args: OracleSearchArgs,
    format: Format,
    command: &'static str,
    search: fn(&SearchSpace) -> Result<hyperforge::oracle::SearchOutcome, OracleError>,
) -> Result<u8, CliError> {
    let mut space = SearchSpace::new(args.k, args.n_max)
        .with_budget(resolve_budget(args.budget)?);
    if let Some(m) = args.m_max {
        space = space.with_m_max(m);
    }
    if args.intersecting {
        space = space.with_predicate(Predicate::Intersecting);
    }
    if let Some(l) = args.lambda {
        space = space.with_predicate(Predicate::LambdaIntersecting(l));
    }
    if let Some(d) = args.max_degree {
        space = space.with_predicate(Predicate::MaxDegreeAtMost(d));
    }
    if args.non_sunflower {
        space = space.with_predicate(Predicate::NonSunflower);
    }
    let outcome = search(&space).map_err(|e| oracle_error(e, format))?;
    match format {
        Format::Text => {
            println!("best: {}", outcome.best);
            println!("nodes: {}", outcome.nodes);
            println!("witness:");
            print!("{}", format_hypergraph(&outcome.witness));
        }
        Format::Json => print_json(&json!({
            "schema": SCHEMA,
            "command": command,
            "best": outcome.best,
            "nodes": outcome.nodes,
            "witness": format_hypergraph(&outcome.witness),
        })),
        Format::Csv => unreachable!("rejected in run"),
    }
    Ok(0)
}
