mod plot;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zgon_core::oracle::FieldKind;
use zgon_core::par::ExecMode;
use zgon_core::rep::{self, Interval};
use zgon_core::stable::{self, phi_inv};
use zgon_core::verify::{run_suite, EmbeddingKind, Suite, SuiteReport, VerifyConfig};
use zgon_core::{Arc, GonConfig, HomReport};

/// Exit status for bad input, mirroring clap's own usage errors.
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "zgon",
    version,
    about = "Nakayama representations on the infinity-gon and their stable category"
)]
struct Cli {
    /// Report format for `hom` and `verify`.
    #[arg(long, value_enum, global = true, default_value_t = Output::Text)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Hom dimensions, projective part and hammock between two objects.
    Hom(HomArgs),
    /// Run the verification suites on a window.
    Verify(VerifyArgs),
    /// Export the AR quiver of the stable category on a window.
    Arquiver(QuiverArgs),
    /// Draw arcs and intervals on the infinity-gon as SVG.
    Plot(PlotArgs),
}

#[derive(Args)]
struct Gon {
    /// Number of accumulation points.
    #[arg(long, default_value_t = 1)]
    m: u32,
}

impl Gon {
    fn config(&self) -> anyhow::Result<GonConfig> {
        Ok(GonConfig::new(self.m)?)
    }
}

#[derive(Args)]
struct HomArgs {
    #[command(flatten)]
    gon: Gon,
    /// Read the objects as arcs `(p:n|q:k)` instead of intervals `(p:n, q:k; h)`.
    #[arg(long)]
    arcs: bool,
    source: String,
    target: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    gon: Gon,
    #[arg(long, default_value_t = 4)]
    window: i64,
    #[arg(long, default_value = "rational")]
    field: FieldKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "standard")]
    embedding: EmbeddingKind,
    #[arg(long)]
    mode: Option<ExecMode>,
    /// Restrict to the named suites (repeatable); all suites by default.
    #[arg(long = "suite")]
    suites: Vec<Suite>,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct QuiverArgs {
    #[command(flatten)]
    gon: Gon,
    /// Index bound per copy; 0 gives an empty quiver.
    #[arg(long, default_value_t = 3)]
    window: i64,
    #[arg(long, value_enum, default_value_t = QuiverFormat::Dot)]
    format: QuiverFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotFormat {
    Svg,
}

#[derive(Args)]
struct PlotArgs {
    #[command(flatten)]
    gon: Gon,
    /// Index bound per copy for drawn points and hammock members.
    #[arg(long, default_value_t = 4)]
    window: i64,
    #[arg(long, value_enum, default_value_t = PlotFormat::Svg)]
    format: PlotFormat,
    /// Shade the hammocks of every arc drawn.
    #[arg(long)]
    hammocks: bool,
    /// Draw the almost split triangle ending in this arc.
    #[arg(long)]
    triangle: Option<Arc>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Arcs `(p:n|q:k)` and intervals `(p:n, q:k; h)`.
    objects: Vec<String>,
}

#[derive(Serialize)]
struct HomOutput {
    source: Interval,
    target: Interval,
    #[serde(skip_serializing_if = "Option::is_none")]
    source_arc: Option<Arc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    target_arc: Option<Arc>,
    #[serde(flatten)]
    report: HomReport,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.command {
        Command::Hom(args) => hom(cli.output, args),
        Command::Verify(args) => verify(cli.output, args),
        Command::Arquiver(args) => arquiver(args),
        Command::Plot(args) => plot_cmd(args),
    }
}

fn hom(output: Output, args: &HomArgs) -> anyhow::Result<ExitCode> {
    let cfg = args.gon.config()?;
    let out = if args.arcs {
        let a: Arc = args.source.parse()?;
        let b: Arc = args.target.parse()?;
        a.validate(&cfg)?;
        b.validate(&cfg)?;
        let (u, v) = (phi_inv(&a)?, phi_inv(&b)?);
        HomOutput {
            source: u,
            target: v,
            source_arc: Some(a),
            target_arc: Some(b),
            report: rep::hom_report(&u, &v),
        }
    } else {
        let u: Interval = args.source.parse()?;
        let v: Interval = args.target.parse()?;
        u.validate(&cfg)?;
        v.validate(&cfg)?;
        HomOutput {
            source: u,
            target: v,
            source_arc: None,
            target_arc: None,
            report: rep::hom_report(&u, &v),
        }
    };
    match output {
        Output::Json => println!("{}", serde_json::to_string_pretty(&out)?),
        Output::Text => {
            if let (Some(a), Some(b)) = (out.source_arc, out.target_arc) {
                println!("arcs       {a} -> {b}");
                println!("dim        {}", stable::hom_dim(&a, &b));
            }
            println!("intervals  {} -> {}", out.source, out.target);
            println!("dim_rep    {}", out.report.dim_rep);
            println!("dim_proj   {}", out.report.dim_proj);
            println!("dim_stable {}", out.report.dim_stable);
            println!("hammock    {:?}", out.report.hammock);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(output: Output, args: &VerifyArgs) -> anyhow::Result<ExitCode> {
    let mut cfg = VerifyConfig::new(args.gon.m, args.window)?;
    cfg.field = args.field;
    cfg.seed = args.seed;
    cfg.embedding = args.embedding;
    if let Some(mode) = args.mode {
        cfg.mode = mode;
    }
    let suites: Vec<Suite> = if args.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.suites.clone()
    };
    let mut reports = Vec::new();
    let mut stdout = io::stdout().lock();
    for suite in suites {
        let r = run_suite(suite, &cfg);
        if output == Output::Text {
            write_report(&mut stdout, &r)?;
        }
        reports.push(r);
    }
    let passed = reports.iter().all(SuiteReport::passed);
    if output == Output::Json {
        serde_json::to_writer_pretty(&mut stdout, &reports)?;
        writeln!(stdout)?;
    } else {
        writeln!(
            stdout,
            "{}",
            if passed {
                "all suites passed"
            } else {
                "MISMATCH"
            }
        )?;
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn write_report(w: &mut impl Write, r: &SuiteReport) -> io::Result<()> {
    writeln!(
        w,
        "{:<20} {} checked {:>8} skipped {:>5} failed {:>5} sha256 {}",
        r.suite.name(),
        if r.passed() { "PASS" } else { "FAIL" },
        r.checked,
        r.skipped,
        r.failures.len(),
        r.digest
    )?;
    for c in &r.failures {
        writeln!(
            w,
            "  {}: closed form {} oracle {}",
            c.subject, c.closed_form, c.oracle
        )?;
    }
    Ok(())
}

fn arquiver(args: &QuiverArgs) -> anyhow::Result<ExitCode> {
    let cfg = args.gon.config()?;
    if args.window < 0 {
        bail!("window must be nonnegative, got {}", args.window);
    }
    let q = stable::ar_quiver(&cfg, args.window);
    let text = match args.format {
        QuiverFormat::Dot => q.to_dot(),
        QuiverFormat::Json => serde_json::to_string_pretty(&q.adjacency())? + "\n",
    };
    emit(args.out.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn plot_cmd(args: &PlotArgs) -> anyhow::Result<ExitCode> {
    let cfg = args.gon.config()?;
    if args.window < 0 {
        bail!("window must be nonnegative, got {}", args.window);
    }
    let mut objects = Vec::new();
    for s in &args.objects {
        let obj = if s.contains('|') {
            let a: Arc = s.parse()?;
            a.validate(&cfg)?;
            plot::Object::Arc(a)
        } else {
            let u: Interval = s.parse()?;
            u.validate(&cfg)?;
            plot::Object::Interval(u)
        };
        objects.push(obj);
    }
    if let Some(t) = &args.triangle {
        t.validate(&cfg)?;
    }
    let svg = match args.format {
        PlotFormat::Svg => plot::Figure {
            cfg: &cfg,
            window: args.window,
            objects: &objects,
            hammocks: args.hammocks,
            triangle: args.triangle.map(|a| stable::almost_split_triangle(&a)),
        }
        .render(),
    };
    emit(args.out.as_ref(), &svg)?;
    Ok(ExitCode::SUCCESS)
}

fn emit(path: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(io::stdout().lock().write_all(text.as_bytes())?),
    }
}
