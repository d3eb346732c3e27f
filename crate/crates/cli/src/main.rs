use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tailgraph::analysis::{analyze, jacobi_measure, AnalysisOptions, MeasureSummary, Mode, SCHEMA};
use tailgraph::generators::{generate, GraphKind};
use tailgraph::graph_file::GraphSpec;
use tailgraph::oracle::{OracleOptions, DEFAULT_DELTA, DEFAULT_TOL};
use tailgraph::scalar::parse_rational;
use tailgraph::TailAttachment;

const EXIT_INPUT: u8 = 2;
const EXIT_ORACLE: u8 = 3;
const MIN_SAMPLES: usize = 8;

#[derive(Parser)]
#[command(name = "tailgraph", version, about = "Spectra of finite graphs with infinite tails")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph-spec document for one of the built-in families.
    Gen(GenArgs),
    /// Reduce, compute the spectrum and optionally check it by truncation.
    Analyze(AnalyzeArgs),
    /// Sample the spectral density of the Jacobi component as CSV.
    Density(DensityArgs),
    /// Print the Jost polynomial and its roots in (-1, 1).
    Jost(JostArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Path,
    Cycle,
    Star,
    WeightedStar,
    MultipleStar,
    CompleteBipartite,
    Wheel,
    Sword,
    Umbrella,
    Propeller,
    Kite,
}

#[derive(Args)]
struct GenArgs {
    kind: Kind,
    #[arg(short)]
    n: Option<usize>,
    #[arg(short)]
    m: Option<usize>,
    #[arg(short)]
    p: Option<usize>,
    #[arg(short)]
    q: Option<usize>,
    /// Comma-separated leaf weights for weighted-star.
    #[arg(long, value_delimiter = ',')]
    weights: Vec<String>,
    /// Leave out the tail at the family's attachment vertex.
    #[arg(long)]
    no_tail: bool,
    #[arg(short, long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct ModeArgs {
    /// Rational arithmetic (default).
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Double precision.
    #[arg(long)]
    float: bool,
}

impl ModeArgs {
    fn mode(&self) -> Mode {
        if self.float {
            Mode::Float
        } else {
            Mode::Exact
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    spec: PathBuf,
    #[command(flatten)]
    mode: ModeArgs,
    /// Include point masses and the mass audit.
    #[arg(long)]
    measure: bool,
    /// Compare against truncations keeping N vertices per ray.
    #[arg(long, value_name = "N")]
    oracle: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    delta: f64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DensityArgs {
    spec: PathBuf,
    #[arg(long, short = 'k', default_value_t = 512)]
    samples: usize,
    #[arg(short, long)]
    out: PathBuf,
    #[command(flatten)]
    mode: ModeArgs,
}

#[derive(Args)]
struct JostArgs {
    spec: PathBuf,
    #[command(flatten)]
    mode: ModeArgs,
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn input_error(msg: impl Into<String>) -> anyhow::Error {
    Exit(EXIT_INPUT, msg.into()).into()
}

fn need(value: Option<usize>, flag: &str, kind: &str) -> anyhow::Result<usize> {
    value.ok_or_else(|| input_error(format!("{kind} needs -{flag}")))
}

fn graph_kind(a: &GenArgs) -> anyhow::Result<GraphKind> {
    Ok(match a.kind {
        Kind::Path => GraphKind::Path { m: need(a.m, "m", "path")? },
        Kind::Cycle => GraphKind::Cycle { m: need(a.m, "m", "cycle")? },
        Kind::Kite => GraphKind::Kite { m: need(a.m, "m", "kite")? },
        Kind::Star => GraphKind::Star { n: need(a.n, "n", "star")? },
        Kind::Wheel => GraphKind::Wheel { n: need(a.n, "n", "wheel")? },
        Kind::Propeller => GraphKind::Propeller { n: need(a.n, "n", "propeller")? },
        Kind::MultipleStar => GraphKind::MultipleStar {
            n: need(a.n, "n", "multiple-star")?,
            p: need(a.p, "p", "multiple-star")?,
        },
        Kind::CompleteBipartite => GraphKind::CompleteBipartite {
            p: need(a.p, "p", "complete-bipartite")?,
            q: need(a.q, "q", "complete-bipartite")?,
        },
        Kind::WeightedStar => GraphKind::WeightedStar {
            weights: a.weights.iter().map(|w| parse_rational(w)).collect::<Result<_, _>>()?,
        },
        Kind::Sword => GraphKind::Sword,
        Kind::Umbrella => GraphKind::Umbrella,
    })
}

fn read_spec(path: &Path) -> anyhow::Result<GraphSpec> {
    let text = fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    Ok(GraphSpec::from_json(&text)?)
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{text}")?;
            Ok(())
        }
    }
}

fn cmd_gen(a: GenArgs) -> anyhow::Result<()> {
    let kind = graph_kind(&a)?;
    let g = generate(&kind)?;
    let tails = if a.no_tail {
        Vec::new()
    } else {
        vec![TailAttachment::free(kind.tail_vertex())]
    };
    let text = GraphSpec::from_parts(&g, &tails).to_json();
    if let Some(p) = &a.out {
        if p.exists() && !a.force {
            return Err(input_error(format!("{} exists; pass --force to overwrite", p.display())));
        }
    }
    emit(&text, a.out.as_deref())
}

fn cmd_analyze(a: AnalyzeArgs) -> anyhow::Result<()> {
    let spec = read_spec(&a.spec)?;
    let opts = AnalysisOptions {
        mode: a.mode.mode(),
        measure: a.measure,
        oracle: a.oracle,
        oracle_options: OracleOptions {
            delta: a.delta,
            tol: a.tol,
        },
    };
    let report = analyze(&spec, &opts)?;
    emit(&report.to_json(), a.out.as_deref())?;
    if let Some(notice) = &report.notice {
        eprintln!("note: {notice}");
    }
    if report.oracle_failed() {
        return Err(Exit(EXIT_ORACLE, "truncation check failed".into()).into());
    }
    Ok(())
}

fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

fn masses_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}.masses.json"))
}

fn cmd_density(a: DensityArgs) -> anyhow::Result<()> {
    if a.samples < MIN_SAMPLES {
        bail!(input_error(format!("at least {MIN_SAMPLES} samples required, got {}", a.samples)));
    }
    let spec = read_spec(&a.spec)?;
    let m = jacobi_measure(&spec, a.mode.mode())?;
    let edge = m.edge();
    let k = a.samples;
    let mut csv = String::from("x,w\n");
    for i in 1..k {
        let x = -edge + 2.0 * edge * i as f64 / k as f64;
        csv.push_str(&format!("{},{}\n", sig17(x), sig17(m.density(x)?)));
    }
    fs::write(&a.out, csv).with_context(|| format!("writing {}", a.out.display()))?;
    let sidecar = json!({ "schema": SCHEMA, "measure": MeasureSummary::new(&m) });
    let side = masses_path(&a.out);
    fs::write(&side, format!("{}\n", serde_json::to_string_pretty(&sidecar)?))
        .with_context(|| format!("writing {}", side.display()))?;
    Ok(())
}

fn cmd_jost(a: JostArgs) -> anyhow::Result<()> {
    let spec = read_spec(&a.spec)?;
    let opts = AnalysisOptions {
        mode: a.mode.mode(),
        ..Default::default()
    };
    let report = analyze(&spec, &opts)?;
    let out = json!({ "schema": SCHEMA, "notice": report.notice, "jost": report.jost });
    emit(&serde_json::to_string_pretty(&out)?, None)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if let Some(Exit(code, _)) = e.downcast_ref::<Exit>() {
        return *code;
    }
    match e.downcast_ref::<tailgraph::Error>() {
        Some(
            tailgraph::Error::InvalidParameter(_)
            | tailgraph::Error::InvalidGraph(_)
            | tailgraph::Error::Parse(_)
            | tailgraph::Error::NotSymmetric { .. }
            | tailgraph::Error::Dimension(_)
            | tailgraph::Error::OracleOnly(_)
            | tailgraph::Error::NotExact(_),
        ) => EXIT_INPUT,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Density(a) => cmd_density(a),
        Command::Jost(a) => cmd_jost(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
