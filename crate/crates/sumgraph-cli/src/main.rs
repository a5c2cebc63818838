//! Command-line front end: generate integral sum graphs, list edge-sum
//! classes, color edges, compute chromatic indices, label stars, compare
//! interval extremes, and replay the verification suite.
//!
//! Exit codes: 0 success, 1 domain/validation error, 2 verification failure,
//! 64 usage error. Errors go to stderr as one-line JSON objects.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sumgraph::coloring::{
    self, certificate_g0s, certificate_g_minus1_s, certificate_g_ss, chi_via_certificate,
    edge_sum_coloring, exact_chromatic_index, search_certificate, theorem_coloring,
    verify_certificate, ChiEstimate, ColorCertificate, DEFAULT_EDGE_BUDGET,
};
use sumgraph::edge_sum::EdgeSumPartition;
use sumgraph::extremal;
use sumgraph::graph::IntegralSumGraph;
use sumgraph::star;
use sumgraph::suite;

const SOLVER_BUDGET_VAR: &str = "SUMGRAPH_SOLVER_BUDGET";

#[derive(Parser)]
#[command(name = "sumgraph", version, about = "Integral sum graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and emit its canonical document
    Gen {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        out: Output,
    },
    /// Partition the edge set into edge-sum classes
    Classes {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        out: Output,
    },
    /// Color the edges with the chosen scheme
    Color {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[command(flatten)]
        out: Output,
    },
    /// Compute or bound the chromatic index
    Chi {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        method: Method,
        #[command(flatten)]
        out: Output,
    },
    /// Label the star on N vertices from seed T and multiplier D
    Star {
        n: usize,
        t: u64,
        d: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate a closed-form degree or edge-count formula
    Formula {
        #[command(subcommand)]
        which: Formula,
    },
    /// Compare all interval graphs of a fixed order by edge count
    Extremal {
        #[arg(long)]
        order: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Verify a certificate against a graph, or replay the whole suite
    Verify {
        /// Run the full verification suite
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        source: OptionalGraphSource,
        /// Certificate document to check against the graph
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
#[command(rename_all = "kebab-case")]
enum Formula {
    /// Degree of vertex I in G_n = G+([1, N])
    DegreeGn {
        n: i64,
        #[arg(allow_negative_numbers = true)]
        i: i64,
    },
    /// Degree of vertex I in G_(R,S)
    DegreeGrs {
        #[arg(allow_negative_numbers = true)]
        r: i64,
        s: i64,
        #[arg(allow_negative_numbers = true)]
        i: i64,
    },
    /// Edge count of G_n
    EdgesGn { n: i64 },
    /// Edge count of G_(R,S)
    EdgesGrs {
        #[arg(allow_negative_numbers = true)]
        r: i64,
        s: i64,
    },
    /// Edge count of G_(R,S), parity-case form
    EdgesParity {
        #[arg(allow_negative_numbers = true)]
        r: i64,
        s: i64,
    },
    /// Edge sum chromatic number of G_(R,S)
    ChiSum {
        #[arg(allow_negative_numbers = true)]
        r: i64,
        s: i64,
    },
}

/// Exactly one way of naming the graph.
#[derive(Args)]
struct GraphSource {
    /// Interval bounds r s (r <= 0 <= s)
    #[arg(long, num_args = 2, value_names = ["R", "S"], allow_negative_numbers = true)]
    interval: Option<Vec<i64>>,
    /// Comma-separated labels, e.g. -2,-1,0,4
    #[arg(long, allow_hyphen_values = true)]
    labels: Option<String>,
    /// Graph document produced by `gen --format json`
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct OptionalGraphSource {
    #[arg(long, num_args = 2, value_names = ["R", "S"], allow_negative_numbers = true)]
    interval: Option<Vec<i64>>,
    #[arg(long, allow_hyphen_values = true)]
    labels: Option<String>,
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to a file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Theorem,
    Edgesum,
    Exact,
    Certificate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Certificate,
}

/// One-line machine-readable failure plus the exit code to use.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            kind: "domain",
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind: "verification",
            message: message.into(),
        }
    }
}

impl From<sumgraph::Error> for Failure {
    fn from(e: sumgraph::Error) -> Self {
        match e {
            sumgraph::Error::InvalidCertificate(_) | sumgraph::Error::ForeignEdge(_) => {
                Failure::verification(e.to_string())
            }
            _ => Failure::domain(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    return ExitCode::SUCCESS;
                }
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!(
                "{}",
                json!({"error": {"kind": f.kind, "message": f.message}})
            );
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen { source, out } => {
            let g = load_graph(&source)?;
            let doc = match out.format {
                Format::Json => g.to_json(),
                Format::Dot => sumgraph::dot::graph_dot(&g),
            };
            emit(&out, doc)
        }
        Command::Classes { source, out } => {
            let g = load_graph(&source)?;
            let doc = match out.format {
                Format::Json => EdgeSumPartition::of(&g).to_json(),
                // DOT view: edges tinted by class rank.
                Format::Dot => sumgraph::dot::coloring_dot(&g, &edge_sum_coloring(&g)),
            };
            emit(&out, doc)
        }
        Command::Color {
            source,
            scheme,
            out,
        } => {
            let g = load_graph(&source)?;
            let coloring = build_coloring(&g, scheme)?;
            let report = coloring::verify_coloring(&g, &coloring).map_err(Failure::from)?;
            if !report.is_valid() {
                return Err(Failure::verification(format!(
                    "coloring failed verification: {}",
                    report.summary()
                )));
            }
            let doc = match out.format {
                Format::Json => coloring.to_json(),
                Format::Dot => sumgraph::dot::coloring_dot(&g, &coloring),
            };
            emit(&out, doc)
        }
        Command::Chi {
            source,
            method,
            out,
        } => {
            let g = load_graph(&source)?;
            require_json(&out, "chi")?;
            let doc = match method {
                Method::Exact => {
                    let result = exact_chromatic_index(&g, solver_budget()?)?;
                    json!({"method": "exact", "chi": result.chi, "delta": result.delta})
                }
                Method::Certificate => {
                    let cert = family_certificate(&g)?;
                    match chi_via_certificate(&g, &cert)? {
                        ChiEstimate::Exact(chi) => {
                            json!({"method": "certificate", "chi": chi, "delta": g.max_degree()})
                        }
                        ChiEstimate::Bounds { lower, upper } => json!({
                            "method": "certificate", "lower": lower, "upper": upper
                        }),
                    }
                }
            };
            emit(&out, doc.to_string())
        }
        Command::Star { n, t, d, out } => {
            let sl = star::star_labels(n, t, d)?;
            let report = star::verify_star(&sl);
            require_json(&out, "star")?;
            let labels: Vec<String> = sl.labels.iter().map(|b| b.to_string()).collect();
            let doc = json!({
                "n": n, "t": t, "d": d,
                "labels": labels,
                "report": serde_json::to_value(&report).expect("report serializes"),
            });
            emit(&out, doc.to_string())
        }
        Command::Formula { which } => {
            let grs_domain = |r: i64, s: i64| {
                if r < 0 && 0 < s {
                    Ok(())
                } else {
                    Err(Failure::domain(format!(
                        "formula needs r < 0 < s, got ({r}, {s})"
                    )))
                }
            };
            let (name, value) = match which {
                Formula::DegreeGn { n, i } => ("degree-gn", sumgraph::formulas::degree_gn(n, i)?),
                Formula::DegreeGrs { r, s, i } => {
                    ("degree-grs", sumgraph::formulas::degree_grs(r, s, i)?)
                }
                Formula::EdgesGn { n } => {
                    if n < 1 {
                        return Err(Failure::domain(format!("G_n needs n >= 1, got {n}")));
                    }
                    ("edges-gn", sumgraph::formulas::edge_count_gn(n))
                }
                Formula::EdgesGrs { r, s } => {
                    grs_domain(r, s)?;
                    ("edges-grs", sumgraph::formulas::edge_count_grs(r, s))
                }
                Formula::EdgesParity { r, s } => {
                    grs_domain(r, s)?;
                    ("edges-parity", sumgraph::formulas::edge_count_parity(r, s))
                }
                Formula::ChiSum { r, s } => {
                    grs_domain(r, s)?;
                    ("chi-sum", sumgraph::formulas::chi_sum_grs(r, s))
                }
            };
            println!("{}", json!({"formula": name, "value": value}));
            Ok(())
        }
        Command::Extremal { order, out } => {
            let m = extremal::interval_maximum(order)?;
            require_json(&out, "extremal")?;
            let table: Vec<_> = m
                .table
                .iter()
                .map(|(spec, edges)| json!({"r": spec.r, "s": spec.s, "edges": edges}))
                .collect();
            let ties: Vec<_> = m.ties.iter().map(|t| json!({"r": t.r, "s": t.s})).collect();
            let doc = json!({
                "order": m.order,
                "best": {"r": m.best.r, "s": m.best.s, "edges": m.best_edges},
                "ties": ties,
                "table": table,
            });
            emit(&out, doc.to_string())
        }
        Command::Verify {
            all,
            source,
            certificate,
            out,
        } => {
            require_json(&out, "verify")?;
            if all {
                let report = suite::run_all(solver_budget()?);
                let doc = serde_json::to_string(&report).expect("report serializes");
                emit(&out, doc)?;
                if !report.all_passed {
                    return Err(Failure::verification("suite reported failures"));
                }
                return Ok(());
            }
            let cert_path = certificate.ok_or_else(|| {
                Failure::domain("verify needs --all or a graph with --certificate")
            })?;
            let g = load_graph(&GraphSource {
                interval: source.interval,
                labels: source.labels,
                input: source.input,
            })?;
            let text = fs::read_to_string(&cert_path)
                .map_err(|e| Failure::domain(format!("{}: {e}", cert_path.display())))?;
            let cert = ColorCertificate::from_json(&text)?;
            let report = verify_certificate(&g, &cert)?;
            emit(
                &out,
                serde_json::to_string(&report).expect("report serializes"),
            )?;
            if !report.is_valid() {
                return Err(Failure::verification(report.summary()));
            }
            Ok(())
        }
    }
}

fn load_graph(source: &GraphSource) -> Result<IntegralSumGraph, Failure> {
    let picked = [
        source.interval.is_some(),
        source.labels.is_some(),
        source.input.is_some(),
    ]
    .iter()
    .filter(|&&x| x)
    .count();
    if picked != 1 {
        return Err(Failure::domain(
            "name the graph with exactly one of --interval, --labels, --input",
        ));
    }
    if let Some(bounds) = &source.interval {
        return Ok(IntegralSumGraph::interval(bounds[0], bounds[1])?);
    }
    if let Some(csv) = &source.labels {
        let labels: Vec<i64> = csv
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|_| Failure::domain(format!("bad label '{part}'")))
            })
            .collect::<Result<_, _>>()?;
        return Ok(IntegralSumGraph::from_labels(labels)?);
    }
    let path = source.input.as_ref().expect("one source picked");
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::domain(format!("{}: {e}", path.display())))?;
    Ok(IntegralSumGraph::from_json(&text)?)
}

fn build_coloring(g: &IntegralSumGraph, scheme: Scheme) -> Result<coloring::EdgeColoring, Failure> {
    match scheme {
        Scheme::Edgesum => Ok(edge_sum_coloring(g)),
        Scheme::Theorem => {
            let (r, s) = as_interval(g)?;
            Ok(theorem_coloring(r, s)?)
        }
        Scheme::Exact => {
            let budget = solver_budget()?;
            let result = exact_chromatic_index(g, budget)?;
            match result.witness {
                Some(w) => Ok(w),
                // Class 2: a (delta + 1)-coloring exists; search it out.
                None => Ok(search_certificate(g, result.delta + 1, budget)?
                    .expect("Vizing guarantees delta + 1 colors suffice")
                    .to_coloring()?),
            }
        }
        Scheme::Certificate => {
            let cert = family_certificate(g)?;
            let report = verify_certificate(g, &cert)?;
            if !report.is_valid() {
                return Err(Failure::verification(format!(
                    "stored certificate fails verification: {}",
                    report.summary()
                )));
            }
            Ok(cert.to_coloring()?)
        }
    }
}

/// The stored/derived certificate family for interval graphs: `G_{0,s}`,
/// `G_{-1,s}` or `G_{-s,s}`.
fn family_certificate(g: &IntegralSumGraph) -> Result<ColorCertificate, Failure> {
    let (r, s) = as_interval(g)?;
    if r == 0 && s >= 1 {
        Ok(certificate_g0s(s)?)
    } else if r == -1 && s >= 2 {
        Ok(certificate_g_minus1_s(s)?)
    } else if r == -s {
        Ok(certificate_g_ss(s)?)
    } else {
        Err(Failure::domain(format!(
            "no certificate family covers G_({r},{s}); use --scheme theorem or exact"
        )))
    }
}

fn as_interval(g: &IntegralSumGraph) -> Result<(i64, i64), Failure> {
    let labels = g.labels();
    let (r, s) = (labels[0], labels[labels.len() - 1]);
    if labels.len() as i64 != s - r + 1 {
        return Err(Failure::domain(
            "this scheme needs an interval label set [r, s]",
        ));
    }
    Ok((r, s))
}

fn solver_budget() -> Result<usize, Failure> {
    match std::env::var(SOLVER_BUDGET_VAR) {
        Ok(text) => text
            .parse::<usize>()
            .map_err(|_| Failure::domain(format!("{SOLVER_BUDGET_VAR} must be an integer"))),
        Err(_) => Ok(DEFAULT_EDGE_BUDGET),
    }
}

fn require_json(out: &Output, what: &str) -> Result<(), Failure> {
    if out.format == Format::Dot {
        return Err(Failure::domain(format!("{what} has no DOT form")));
    }
    Ok(())
}

fn emit(out: &Output, doc: String) -> Result<(), Failure> {
    let mut doc = doc;
    if !doc.ends_with('\n') {
        doc.push('\n');
    }
    match &out.output {
        Some(path) => fs::write(path, doc.as_bytes())
            .map_err(|e| Failure::domain(format!("{}: {e}", path.display()))),
        None => {
            print!("{doc}");
            Ok(())
        }
    }
}
