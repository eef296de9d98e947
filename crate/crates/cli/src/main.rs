//! `hilbert-kit`: render convex-geometry scene files to SVG and Ipe
//! figures, query Funk/Hilbert distances, and validate scenes.
//!
//! Exit codes: 0 on success, 1 for I/O and parse failures (diagnostic with
//! line and column on stderr), 2 for validation failures (diagnostic names
//! the offending request). Data output goes to stdout, diagnostics to
//! stderr, never interleaved.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hilbert_kit::render::fmt_f64;
use hilbert_kit::scene::{execute, parse_scene, ExecOptions, Scene, SceneError};
use hilbert_kit::{emit_ipe, emit_svg, metrics};

#[derive(Parser)]
#[command(name = "hilbert-kit", version, about = "Convex-geometry figures: metric balls, Macbeath regions, polar duals, booleans, Minkowski sums, enclosing balls and metric spanning trees", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a scene file to figure documents.
    Render(RenderArgs),
    /// Evaluate one metric distance between two scene points.
    Dist(DistArgs),
    /// Parse and validate a scene file without rendering.
    Check(CheckArgs),
}

#[derive(Args)]
struct RenderArgs {
    /// Scene file to render.
    scene: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,
    /// Output path. With --format both, the extension is replaced by .svg
    /// and .ipe.
    #[arg(short, long)]
    output: PathBuf,
    /// Seed for the minimum-enclosing-ball shuffle.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Translate polygons to their centroid before polar duality.
    #[arg(long)]
    translate_centroid: bool,
    /// Report per-request progress on stderr.
    #[arg(short, long)]
    verbose: bool,
}

#[derive(Args)]
struct DistArgs {
    /// Scene file declaring the domain and the points.
    scene: PathBuf,
    /// Metric to evaluate.
    #[arg(long, value_enum)]
    metric: Metric,
    /// Source point reference, e.g. `a` or `pts[2]`.
    #[arg(long)]
    from: String,
    /// Target point reference.
    #[arg(long)]
    to: String,
}

#[derive(Args)]
struct CheckArgs {
    /// Scene file to validate.
    scene: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Svg,
    Ipe,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Metric {
    Funk,
    ReverseFunk,
    Hilbert,
}

const EXIT_PARSE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hilbert-kit: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl From<SceneError> for CliError {
    fn from(e: SceneError) -> Self {
        let code = match e {
            SceneError::Parse { .. } => EXIT_PARSE,
            SceneError::Validation { .. } => EXIT_VALIDATION,
        };
        CliError { code, message: e.to_string() }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Render(args) => render(args),
        Command::Dist(args) => dist(args),
        Command::Check(args) => check(args),
    }
}

fn load_scene(path: &Path) -> Result<Scene, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError {
        code: EXIT_PARSE,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(parse_scene(&text)?)
}

fn render(args: RenderArgs) -> Result<(), CliError> {
    let scene = load_scene(&args.scene)?;
    let opts = ExecOptions { seed: args.seed, translate_centroid: args.translate_centroid };
    if args.verbose {
        eprintln!("{}: {} request(s)", args.scene.display(), scene.requests.len());
    }
    let results = execute(&scene, &opts)?;

    let write = |path: &Path, data: &str| -> Result<(), CliError> {
        fs::write(path, data).map_err(|e| CliError {
            code: EXIT_PARSE,
            message: format!("cannot write {}: {e}", path.display()),
        })?;
        if args.verbose {
            eprintln!("wrote {}", path.display());
        }
        Ok(())
    };

    match args.format {
        Format::Svg => write(&args.output, &emit_svg(&scene, &results))?,
        Format::Ipe => write(&args.output, &emit_ipe(&scene, &results))?,
        Format::Both => {
            write(&args.output.with_extension("svg"), &emit_svg(&scene, &results))?;
            write(&args.output.with_extension("ipe"), &emit_ipe(&scene, &results))?;
        }
    }
    Ok(())
}

fn dist(args: DistArgs) -> Result<(), CliError> {
    let scene = load_scene(&args.scene)?;
    let invalid = |message: String| CliError { code: EXIT_VALIDATION, message };

    let resolve = |spec: &str| -> Result<hilbert_kit::Point, CliError> {
        let r = parse_point_ref(spec)
            .ok_or_else(|| invalid(format!("malformed point reference `{spec}`")))?;
        scene
            .point(&r)
            .ok_or_else(|| invalid(format!("unknown point `{spec}`")))
    };
    let domain = scene
        .domain
        .as_ref()
        .ok_or_else(|| invalid("the scene declares no domain".into()))?;
    let p = resolve(&args.from)?;
    let q = resolve(&args.to)?;
    let kind = match args.metric {
        Metric::Funk => metrics::MetricKind::Funk,
        Metric::ReverseFunk => metrics::MetricKind::ReverseFunk,
        Metric::Hilbert => metrics::MetricKind::Hilbert,
    };
    let d = metrics::distance(domain, kind, p, q)
        .map_err(|e| invalid(format!("dist {} -> {}: {e}", args.from, args.to)))?;
    println!("{}", fmt_f64(d, 12, false));
    Ok(())
}

fn check(args: CheckArgs) -> Result<(), CliError> {
    let scene = load_scene(&args.scene)?;
    println!("ok: {} request(s)", scene.requests.len());
    Ok(())
}

fn parse_point_ref(spec: &str) -> Option<hilbert_kit::scene::PointRef> {
    let (name, index) = match spec.find('[') {
        Some(open) if spec.ends_with(']') => {
            (&spec[..open], spec[open + 1..spec.len() - 1].parse().ok()?)
        }
        Some(_) => return None,
        None => (spec, 0),
    };
    if name.is_empty() {
        return None;
    }
    Some(hilbert_kit::scene::PointRef { set: name.to_string(), index })
}
