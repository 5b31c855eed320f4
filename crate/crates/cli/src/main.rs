//! `rho-bounds` command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when at least one check is
//! violated, 2 on input or configuration errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rho_bounds::bounds::{BoundReport, PhiSequence};
use rho_bounds::equality::{classify_equality, EqualityCertificate};
use rho_bounds::graph::{enumerate_connected, gen_named, parse_edge_list, parse_graph6, Family};
use rho_bounds::harness::{
    run_campaign_with, CampaignConfig, CampaignError, Check, CsvWriter, GraphRecord, OutputFormat, Source,
    DEFAULT_EQUALITY_TOL, DEFAULT_SOUNDNESS_TOL, JOBS_ENV,
};
use rho_bounds::replay::{row_sums_scaled, ReplayError};
use rho_bounds::spectral::{spectral_radius_power, PowerOptions};
use rho_bounds::{DegreeSequence, Graph};

#[derive(Parser)]
#[command(name = "rho-bounds", version, about = "Degree-sequence bounds on the spectral radius of connected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every bound, the phi sequence and the equality certificate for one input
    Bound(BoundArgs),
    /// Run verification checks over an enumerated or file-based corpus
    Verify(VerifyArgs),
    /// Print every connected labeled graph on n vertices in graph6
    Enumerate(EnumerateArgs),
    /// Scaled row sums for one graph and level
    Replay(ReplayArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Csv,
    Json,
}

#[derive(Args)]
struct GraphInput {
    /// File holding the graph (first record is used)
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: InputFormat,
    /// Inline graph6 record
    #[arg(long, conflicts_with = "input")]
    graph6: Option<String>,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Comma-separated degree sequence instead of a graph
    #[arg(long, conflicts_with_all = ["input", "graph6"], value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    /// Named family: complete, star, path or cycle (with --n)
    #[arg(long, conflicts_with_all = ["input", "graph6", "degrees"], requires = "n")]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Enumerate all connected graphs on n vertices
    #[arg(long, conflicts_with = "input")]
    n: Option<usize>,
    /// graph6 or edge-list corpus file
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: InputFormat,
    /// Slack for rho <= bound checks
    #[arg(long, default_value_t = DEFAULT_SOUNDNESS_TOL)]
    tol: f64,
    /// Window for numeric equality phi_l = rho
    #[arg(long, default_value_t = DEFAULT_EQUALITY_TOL)]
    eq_tol: f64,
    /// soundness,dominance,equality,unimodality,replay or all
    #[arg(long, default_value = "all")]
    checks: String,
    /// json: campaign summary; csv: one row per graph (summary on stderr)
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
    #[arg(long, env = JOBS_ENV, default_value_t = 0)]
    jobs: usize,
    /// Permit n = 8 enumeration
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct ReplayArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Level l in 1..=n
    #[arg(long)]
    level: usize,
    #[arg(long, default_value_t = DEFAULT_SOUNDNESS_TOL)]
    tol: f64,
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Violation(anyhow::Error),
    Input(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Bound(args) => bound(args),
        Command::Verify(args) => verify(args),
        Command::Enumerate(args) => enumerate(args),
        Command::Replay(args) => replay(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph> {
    if let Some(text) = &input.graph6 {
        return parse_graph6(text).context("invalid graph6 record");
    }
    let path = input.input.as_ref().ok_or_else(|| anyhow!("no graph given (use --input or --graph6)"))?;
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    match input.format {
        InputFormat::Graph6 => {
            let line = text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| anyhow!("{} is empty", path.display()))?;
            parse_graph6(line).with_context(|| format!("invalid graph6 record in {}", path.display()))
        }
        InputFormat::Edgelist => parse_edge_list(&text).with_context(|| format!("invalid edge list in {}", path.display())),
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        bail!("graph {} is disconnected; the bounds are stated for connected graphs only", g.to_graph6());
    }
    Ok(())
}

#[derive(Serialize)]
struct BoundOutput {
    id: Option<String>,
    degrees: Vec<usize>,
    report: BoundReport<f64>,
    phi: PhiSequence<f64>,
    certificate: Option<EqualityCertificate>,
}

fn bound(args: BoundArgs) -> Result<(), Failure> {
    let (graph, seq) = if let Some(degrees) = args.degrees {
        let seq = DegreeSequence::new(degrees).context("invalid degree sequence")?;
        if !seq.is_graphical() {
            eprintln!("warning: degree sequence {:?} is not graphical", seq.degrees());
        }
        (None, seq)
    } else {
        let g = match args.family {
            Some(family) => gen_named(family, args.n.unwrap()).context("cannot build named graph")?,
            None => read_graph(&args.graph)?,
        };
        require_connected(&g)?;
        let seq = g.degree_sequence();
        (Some(g), seq)
    };

    let rho = match &graph {
        Some(g) => Some(spectral_radius_power::<f64>(g, &PowerOptions::default()).context("spectral oracle failed")?.rho),
        None => None,
    };
    let report = BoundReport::new(&seq, rho);
    let certificate = if seq.len() >= 2 { classify_equality(&seq).ok() } else { None };
    let id = graph.as_ref().map(Graph::to_graph6);

    let stdout = io::stdout().lock();
    match args.output {
        Output::Json => {
            let out = BoundOutput { id, degrees: seq.degrees().to_vec(), phi: PhiSequence::new(&seq), report, certificate };
            write_line(stdout, &serde_json::to_string_pretty(&out).context("serialize report")?)?;
        }
        Output::Csv => {
            let record = GraphRecord::new(0, id.unwrap_or_default(), report, certificate);
            let mut writer = CsvWriter::new(stdout).map_err(anyhow::Error::from)?;
            writer.write(&record).map_err(anyhow::Error::from)?;
            writer.finish().map_err(anyhow::Error::from)?;
        }
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let source = match (args.n, args.input) {
        (Some(n), None) => Source::Enumerate { n, allow_large: args.allow_large },
        (None, Some(path)) => match args.format {
            InputFormat::Graph6 => Source::Graph6File(path),
            InputFormat::Edgelist => Source::EdgeListFile(path),
        },
        _ => return Err(anyhow!("give exactly one of --n or --input").into()),
    };
    let checks = Check::parse_list(&args.checks).map_err(|e| anyhow!(e))?;
    let cfg = CampaignConfig {
        source,
        tol: args.tol,
        equality_tol: args.eq_tol,
        checks,
        output_format: match args.output {
            Output::Csv => OutputFormat::Csv,
            Output::Json => OutputFormat::Json,
        },
        jobs: args.jobs,
    };

    let result = match cfg.output_format {
        OutputFormat::Csv => {
            let mut writer = CsvWriter::new(io::stdout().lock()).map_err(anyhow::Error::from)?;
            let mut write_error = None;
            let result = run_campaign_with(&cfg, |record| {
                if write_error.is_none() {
                    write_error = writer.write(record).err();
                }
            });
            if let Some(e) = write_error {
                return Err(anyhow::Error::from(e).into());
            }
            writer.finish().map_err(anyhow::Error::from)?;
            let result = result.map_err(campaign_error)?;
            eprintln!(
                "checked {} graphs ({} disconnected skipped), {} violations",
                result.graphs_checked,
                result.skipped_disconnected,
                result.violations.len()
            );
            result
        }
        OutputFormat::Json => {
            let result = run_campaign_with(&cfg, |_| {}).map_err(campaign_error)?;
            write_line(io::stdout().lock(), &result.to_json())?;
            result
        }
    };
    eprintln!("wall time {:.3}s", result.wall_time.as_secs_f64());
    for v in result.violations.iter().take(20) {
        eprintln!("violation: graph #{} {} [{}] {}", v.index, v.id, v.check, v.details);
    }
    if !result.passed() {
        return Err(Failure::Violation(anyhow!("{} violations", result.violations.len())));
    }
    Ok(())
}

fn campaign_error(e: CampaignError) -> Failure {
    Failure::Input(e.into())
}

fn enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let stream = enumerate_connected(args.n, args.allow_large).context("cannot enumerate")?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    for (_, g) in stream {
        writeln!(out, "{}", g.to_graph6()).context("write graph6")?;
    }
    out.flush().context("write graph6")?;
    Ok(())
}

fn replay(args: ReplayArgs) -> Result<(), Failure> {
    let g = read_graph(&args.graph)?;
    require_connected(&g)?;
    let rho = spectral_radius_power::<f64>(&g, &PowerOptions::default()).context("spectral oracle failed")?.rho;
    let cert = match row_sums_scaled::<f64>(&g, args.level, args.tol) {
        Ok(cert) => cert,
        Err(e @ ReplayError::CertificateViolation { .. }) => return Err(Failure::Violation(e.into())),
        Err(e) => return Err(Failure::Input(e.into())),
    };
    #[derive(Serialize)]
    struct ReplayOutput<'a> {
        id: String,
        rho: f64,
        certificate: &'a rho_bounds::ScalingCertificate<f64>,
    }
    let out = ReplayOutput { id: g.to_graph6(), rho, certificate: &cert };
    write_line(io::stdout().lock(), &serde_json::to_string_pretty(&out).context("serialize certificate")?)?;
    if rho > cert.max_row_sum + args.tol {
        return Err(Failure::Violation(anyhow!("rho {rho} exceeds max scaled row sum {}", cert.max_row_sum)));
    }
    Ok(())
}

fn write_line(mut out: impl Write, text: &str) -> Result<()> {
    writeln!(out, "{text}").context("write output")
}
