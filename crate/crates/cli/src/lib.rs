// SPDX-License-Identifier: Apache-2.0

//! Command surface of `ehcube`: parsing, dispatch and report rendering.
//!
//! Vertices are read and printed as `x_n ... x_1`, the highest position
//! first. That is the reverse of the position numbering, so `0010` in
//! `Q_{4,k}` has position 2 set.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or domain
//! error, 3 oracle resource cap.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use enhanced_hypercube::oracle::{
    self, fault_diameter_exact, predicted_value, verify_path_set, FaultDiameterReport, FaultKind,
    FaultSet, OracleConfig, WideDiameterReport, WideMethod, ORACLE_CAP_ENV, ORACLE_HARD_WALL,
};
use enhanced_hypercube::{disjoint_paths, EnhancedHypercube, Error, Guarantee, PathSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    Vertex,
    Edge,
}

impl From<FaultArg> for FaultKind {
    fn from(arg: FaultArg) -> Self {
        match arg {
            FaultArg::Vertex => FaultKind::Vertex,
            FaultArg::Edge => FaultKind::Edge,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ehcube", version)]
#[command(
    about = "Disjoint routing and fault/wide diameter certification for enhanced hypercubes Q_{n,k}"
)]
pub struct Cli {
    /// Output format; json is stable, text is for people
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Largest n accepted by the exhaustive oracles (hard limit 6)
    #[arg(long, global = true, env = ORACLE_CAP_ENV)]
    pub oracle_cap: Option<u32>,

    /// Worker threads for the oracles; never changes the output
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, degree, diameter and the predicted fault/wide diameter table
    Info { n: u32, k: u32 },
    /// Build disjoint paths between two vertices (written x_n...x_1)
    Route {
        n: u32,
        k: u32,
        source: String,
        target: String,
        /// Number of paths to return (default n + 1)
        #[arg(long = "paths")]
        paths: Option<usize>,
    },
    /// Compare exhaustive fault and wide diameters with the predicted values
    Certify {
        n: u32,
        k: u32,
        /// Single omega to check
        #[arg(long, conflicts_with = "all")]
        omega: Option<usize>,
        /// Check every omega in 1..=n+1 (the default)
        #[arg(long)]
        all: bool,
        #[arg(long = "faults", value_enum, default_value = "vertex")]
        faults: FaultArg,
    },
}

/// Validated settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub graph: EnhancedHypercube,
    pub format: Format,
    pub oracle: OracleConfig,
}

/// What a run printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn out(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn err(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::OracleCapExceeded { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn fail(err: Error) -> Outcome {
    let mut msg = format!("error: {err}\n");
    if let Error::OracleCapExceeded { cap, .. } = err {
        let _ = writeln!(
            msg,
            "hint: exhaustive checks are exponential in n; raise the cap with --oracle-cap \
             or {ORACLE_CAP_ENV} (current {cap}, at most {ORACLE_HARD_WALL})"
        );
    }
    Outcome::err(exit_code(&err), msg)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::err(code, text)
            } else {
                Outcome::out(code, text)
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let (n, k) = match cli.command {
        Command::Info { n, k } | Command::Route { n, k, .. } | Command::Certify { n, k, .. } => {
            (n, k)
        }
    };
    let graph = match EnhancedHypercube::new(n, k) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let mut oracle = OracleConfig::default();
    if let Some(cap) = cli.oracle_cap {
        oracle.cap = cap;
    }
    if let Some(workers) = cli.workers {
        oracle = oracle.with_workers(workers);
    }
    let config = RunConfig {
        graph,
        format: cli.format,
        oracle,
    };
    let result = match &cli.command {
        Command::Info { .. } => Ok(cmd_info(&config)),
        Command::Route {
            source,
            target,
            paths,
            ..
        } => cmd_route(&config, source, target, *paths),
        Command::Certify { omega, faults, .. } => cmd_certify(&config, *omega, (*faults).into()),
    };
    result.unwrap_or_else(fail)
}

fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
struct InfoReport {
    n: u32,
    k: u32,
    command: &'static str,
    vertices: u64,
    degree: usize,
    diameter: u32,
    connectivity: usize,
    breakpoint: usize,
    predicted: Vec<u32>,
}

pub fn cmd_info(config: &RunConfig) -> Outcome {
    let g = &config.graph;
    let report = InfoReport {
        n: g.n(),
        k: g.k(),
        command: "info",
        vertices: g.vertex_count(),
        degree: g.degree(),
        diameter: g.diameter(),
        connectivity: g.degree(),
        breakpoint: oracle::breakpoint(g),
        predicted: (1..=g.degree()).map(|w| predicted_value(g, w)).collect(),
    };
    let text = match config.format {
        Format::Json => render(&report),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{g}");
            let _ = writeln!(s, "  vertices      {}", report.vertices);
            let _ = writeln!(s, "  degree        {}", report.degree);
            let _ = writeln!(s, "  diameter      {}", report.diameter);
            let _ = writeln!(s, "  connectivity  {}", report.connectivity);
            let _ = writeln!(s, "  breakpoint    omega = {}", report.breakpoint);
            let _ = writeln!(s, "  omega  fault/wide diameter");
            for (idx, value) in report.predicted.iter().enumerate() {
                let _ = writeln!(s, "  {:>5}  {value}", idx + 1);
            }
            s
        }
    };
    Outcome::out(EXIT_OK, text)
}

#[derive(Debug, Serialize)]
struct PathEntry {
    vertices: Vec<String>,
    dims: Vec<usize>,
    length: usize,
}

#[derive(Debug, Serialize)]
struct CertificateEntry {
    ok: bool,
    violations: Vec<String>,
}

#[derive(Debug, Serialize)]
struct RouteReport {
    n: u32,
    k: u32,
    command: &'static str,
    paths: Vec<PathEntry>,
    guarantee: Guarantee,
    certificate: CertificateEntry,
}

fn route_report(g: &EnhancedHypercube, set: &PathSet) -> RouteReport {
    let violations = match verify_path_set(g, set) {
        Ok(_) => Vec::new(),
        Err(v) => vec![v.to_string()],
    };
    RouteReport {
        n: g.n(),
        k: g.k(),
        command: "route",
        paths: set
            .paths
            .iter()
            .map(|p| PathEntry {
                vertices: p.vertices.iter().map(|&x| g.format_vertex(x)).collect(),
                dims: p.dims.entries().to_vec(),
                length: p.length(),
            })
            .collect(),
        guarantee: set.guarantee,
        certificate: CertificateEntry {
            ok: violations.is_empty(),
            violations,
        },
    }
}

pub fn cmd_route(
    config: &RunConfig,
    source: &str,
    target: &str,
    paths: Option<usize>,
) -> Result<Outcome, Error> {
    let g = &config.graph;
    let u = g.parse_vertex(source)?;
    let v = g.parse_vertex(target)?;
    let omega = paths.unwrap_or(g.degree());
    let set = disjoint_paths(g, u, v, omega)?;
    let report = route_report(g, &set);
    let code = if report.certificate.ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    let text = match config.format {
        Format::Json => render(&report),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{g}: {} paths from {source} to {target}",
                report.paths.len()
            );
            for (idx, p) in report.paths.iter().enumerate() {
                let dims: Vec<String> = p.dims.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    s,
                    "  #{idx:<2} len {:<2} ({})  {}",
                    p.length,
                    dims.join(","),
                    p.vertices.join(" -> ")
                );
            }
            let gu = report.guarantee;
            let _ = writeln!(
                s,
                "guarantee: every path <= {}, {} of them <= {}",
                gu.bound_all, gu.count_short, gu.bound_short
            );
            if report.certificate.ok {
                let _ = writeln!(s, "certificate: ok");
            } else {
                let _ = writeln!(
                    s,
                    "certificate: FAILED {}",
                    report.certificate.violations.join("; ")
                );
            }
            s
        }
    };
    Ok(Outcome::out(code, text))
}

#[derive(Debug, Serialize)]
struct WideEntry {
    value: u32,
    exact: bool,
    #[serde(flatten)]
    method: WideMethod,
}

#[derive(Debug, Serialize)]
struct CertifyRow {
    omega: usize,
    predicted: u32,
    fault_diameter: u32,
    witness_faults: WitnessFaults,
    witness_pair: [String; 2],
    wide_diameter: WideEntry,
    matches: bool,
}

#[derive(Debug, Serialize)]
struct CertifyReport {
    n: u32,
    k: u32,
    command: &'static str,
    fault_kind: FaultKind,
    rows: Vec<CertifyRow>,
    ok: bool,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum WitnessFaults {
    Vertices(Vec<String>),
    Edges(Vec<[String; 2]>),
}

fn witness_strings(g: &EnhancedHypercube, set: &FaultSet) -> WitnessFaults {
    match set {
        FaultSet::Vertices(vs) => {
            WitnessFaults::Vertices(vs.iter().map(|&x| g.format_vertex(x)).collect())
        }
        FaultSet::Edges(es) => WitnessFaults::Edges(
            es.iter()
                .map(|&(a, b)| [g.format_vertex(a), g.format_vertex(b)])
                .collect(),
        ),
    }
}

fn wide_for(
    g: &EnhancedHypercube,
    omega: usize,
    fault: &FaultDiameterReport,
    oracle: &OracleConfig,
) -> Result<WideDiameterReport, Error> {
    if g.vertex_count() <= oracle::EXACT_SEARCH_MAX_VERTICES {
        oracle::wide_diameter_exact_search(g, omega, oracle)
    } else {
        let lower = if fault.kind == FaultKind::Vertex {
            fault.worst_value
        } else {
            fault_diameter_exact(g, omega, FaultKind::Vertex, oracle)?.worst_value
        };
        oracle::wide_diameter_sandwich(g, omega, lower, oracle)
    }
}

pub fn cmd_certify(
    config: &RunConfig,
    omega: Option<usize>,
    kind: FaultKind,
) -> Result<Outcome, Error> {
    let g = &config.graph;
    config.oracle.check(g)?;
    let omegas: Vec<usize> = match omega {
        Some(w) => vec![w],
        None => (1..=g.degree()).collect(),
    };
    let mut rows = Vec::with_capacity(omegas.len());
    for w in omegas {
        let fault = fault_diameter_exact(g, w, kind, &config.oracle)?;
        let wide = wide_for(g, w, &fault, &config.oracle)?;
        let predicted = predicted_value(g, w);
        let matches = fault.worst_value == predicted && wide.is_exact() && wide.value == predicted;
        let (a, b) = fault.witness_pair;
        rows.push(CertifyRow {
            omega: w,
            predicted,
            fault_diameter: fault.worst_value,
            witness_faults: witness_strings(g, &fault.witness_faults),
            witness_pair: [g.format_vertex(a), g.format_vertex(b)],
            wide_diameter: WideEntry {
                value: wide.value,
                exact: wide.is_exact(),
                method: wide.method,
            },
            matches,
        });
    }
    let ok = rows.iter().all(|r| r.matches);
    let report = CertifyReport {
        n: g.n(),
        k: g.k(),
        command: "certify",
        fault_kind: kind,
        rows,
        ok,
    };
    let text = match config.format {
        Format::Json => render(&report),
        Format::Text => {
            let mut s = String::new();
            let kind = match kind {
                FaultKind::Vertex => "vertex",
                FaultKind::Edge => "edge",
            };
            let _ = writeln!(s, "{g}, {kind} faults");
            let _ = writeln!(s, "  omega  predicted  fault  wide  status");
            for r in &report.rows {
                let wide = if r.wide_diameter.exact {
                    r.wide_diameter.value.to_string()
                } else {
                    format!("<={}", r.wide_diameter.value)
                };
                let _ = writeln!(
                    s,
                    "  {:>5}  {:>9}  {:>5}  {:>4}  {}",
                    r.omega,
                    r.predicted,
                    r.fault_diameter,
                    wide,
                    if r.matches { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(
                s,
                "{}",
                if report.ok {
                    "all rows match"
                } else {
                    "mismatch found"
                }
            );
            s
        }
    };
    Ok(Outcome::out(if ok { EXIT_OK } else { EXIT_MISMATCH }, text))
}
