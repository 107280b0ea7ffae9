use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use nonaligned::algo::{draw, Algo};
use nonaligned::generate::{generate, GraphType};
use nonaligned::io::{drawing_from_json, drawing_to_json, graph_from_json, graph_to_json};
use nonaligned::stats::{stats_row, StatsRow, CSV_HEADER};
use nonaligned::svg::{to_svg, SvgOptions};
use nonaligned::verify::{run_named, CheckReport};
use nonaligned::PlanarEmbedding;

/// Non-aligned, rook and rectangle-of-influence drawings of planar graphs.
#[derive(Parser)]
#[command(name = "nonaligned", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph and print it as JSON.
    Gen(GenArgs),
    /// Draw a graph; exits non-zero if a requested check fails.
    Draw(DrawArgs),
    /// Check a drawing read from JSON.
    Verify(VerifyArgs),
    /// Measure algorithms over a seeded corpus, as CSV.
    Stats(StatsArgs),
}

#[derive(Args)]
struct Source {
    /// random-triangulation, apollonian, nested, octahedron, double-wheel, four-connected
    #[arg(long = "type", default_value = "random-triangulation")]
    kind: String,
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Levels for nested graphs.
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    src: Source,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DrawArgs {
    #[arg(long)]
    algo: String,
    /// Graph JSON; generated from the source flags when absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[command(flatten)]
    src: Source,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Comma-separated: planar, ri, nonaligned, rook, grid, slopes.
    /// Defaults to the checks the algorithm guarantees.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Pixels per grid unit in the SVG.
    #[arg(long, default_value_t = 40.0)]
    scale: f64,
    #[arg(long)]
    no_grid: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "planar")]
    checks: Vec<String>,
    /// Grid as WxH for the grid check; the bounding box otherwise.
    #[arg(long)]
    grid: Option<String>,
}

#[derive(Args)]
struct StatsArgs {
    /// Comma-separated algorithm names; may be empty.
    #[arg(long, value_delimiter = ',', default_value = "schnyder,inc-x,inc-nonaligned,rook-bends")]
    algo: Vec<String>,
    #[arg(long = "type", default_value = "random-triangulation")]
    kind: String,
    /// Vertex counts as N or A..B (inclusive).
    #[arg(long, default_value = "10..20")]
    n: String,
    #[arg(long, default_value_t = 1)]
    step: usize,
    /// Seeds as S or A..B (inclusive).
    #[arg(long, default_value = "0")]
    seeds: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn range(s: &str) -> Result<(u64, u64)> {
    let parse = |t: &str| t.trim().parse::<u64>().with_context(|| format!("bad number {t:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                bail!("empty range {s}");
            }
            Ok((a, b))
        }
        None => {
            let a = parse(s)?;
            Ok((a, a))
        }
    }
}

fn emit(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                out.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn source_graph(src: &Source) -> Result<PlanarEmbedding> {
    let kind: GraphType = src.kind.parse()?;
    Ok(generate(kind, src.n, src.k, src.seed)?)
}

fn report(reports: &[CheckReport]) -> Result<bool> {
    eprintln!("{}", serde_json::to_string_pretty(reports)?);
    Ok(reports.iter().all(|r| r.passed))
}

fn cmd_draw(a: &DrawArgs) -> Result<bool> {
    let algo: Algo = a.algo.parse()?;
    let emb = match &a.input {
        Some(p) => graph_from_json(&fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?)?,
        None => source_graph(&a.src)?,
    };
    let out = draw(algo, &emb).with_context(|| format!("{algo} drawing"))?;
    if let Some(bad) = out.run_checks(algo, algo.declared_checks()).into_iter().find(|r| !r.passed) {
        bail!("{algo} output failed its own {} check: {:?}", bad.check, bad.violation);
    }
    emit(a.out.as_ref(), &drawing_to_json(&out.drawing))?;
    if let Some(p) = &a.svg {
        let opt = SvgOptions { scale: a.scale, grid: !a.no_grid, labels: true };
        fs::write(p, to_svg(&out.drawing, opt)).with_context(|| format!("writing {}", p.display()))?;
    }
    let checks: Vec<&str> = match &a.checks {
        Some(c) => c.iter().map(String::as_str).collect(),
        None => algo.declared_checks().to_vec(),
    };
    report(&out.run_checks(algo, &checks))
}

fn cmd_verify(a: &VerifyArgs) -> Result<bool> {
    let d = drawing_from_json(&fs::read_to_string(&a.input).with_context(|| format!("reading {}", a.input.display()))?)?;
    let grid = match &a.grid {
        Some(g) => {
            let (w, h) = g.split_once('x').context("grid must be WxH")?;
            Some((w.parse()?, h.parse()?))
        }
        None => None,
    };
    let reports = run_named(&d, &a.checks, grid);
    println!("{}", serde_json::to_string_pretty(&reports)?);
    Ok(reports.iter().all(|r| r.passed))
}

fn cmd_stats(a: &StatsArgs) -> Result<bool> {
    let algos: Vec<Algo> = a.algo.iter().filter(|s| !s.is_empty()).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let kind: GraphType = a.kind.parse()?;
    let (n0, n1) = range(&a.n)?;
    let (s0, s1) = range(&a.seeds)?;
    let mut cells = Vec::new();
    for n in (n0..=n1).step_by(a.step.max(1)) {
        for seed in s0..=s1 {
            for &algo in &algos {
                cells.push((n as usize, seed, algo));
            }
        }
    }
    let rows: Vec<StatsRow> = cells
        .par_iter()
        .map(|&(n, seed, algo)| -> Result<StatsRow> {
            let g = generate(kind, n, n / 3, seed)?;
            Ok(stats_row(&format!("{kind}-n{n}-s{seed}"), &g, algo))
        })
        .collect::<Result<_>>()?;
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in &rows {
        w.serialize(r)?;
    }
    let text = String::from_utf8(w.into_inner()?)?;
    emit(a.out.as_ref(), &text)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Gen(a) => source_graph(&a.src).and_then(|g| emit(a.out.as_ref(), &graph_to_json(&g))).map(|_| true),
        Cmd::Draw(a) => cmd_draw(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Stats(a) => cmd_stats(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
