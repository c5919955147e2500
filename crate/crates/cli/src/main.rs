//! Command-line front end: analyze polygons, build triangulations, cut
//! decompositions, verify the claim catalog, run randomized search sweeps,
//! generate polygons, and render SVG diagrams.
//!
//! Exit codes: 0 when everything passed, 1 when verification or search
//! found violations, 2 on input or usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use vertex_extrema::decomposition::{decompose, ClaimSelection, Diagonal};
use vertex_extrema::extremality::analyze;
use vertex_extrema::generator::{random_generic_convex, GenSpec};
use vertex_extrema::polygon::Polygon;
use vertex_extrema::search::{execute_search, SearchConfig};
use vertex_extrema::svg::{render, CircleMode, RenderOptions};
use vertex_extrema::triangulation::{
    anti_delaunay_triangulation, delaunay_triangulation, TriangulationKind,
};

#[derive(Parser)]
#[command(
    name = "vertex-extrema",
    version,
    about = "Exact classification of extremal polygon vertices, triangulations, decompositions, and randomized claim verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Delaunay,
    Anti,
}

impl From<KindArg> for TriangulationKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Delaunay => TriangulationKind::Delaunay,
            KindArg::Anti => TriangulationKind::AntiDelaunay,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CirclesArg {
    None,
    Extremal,
    All,
}

impl From<CirclesArg> for CircleMode {
    fn from(c: CirclesArg) -> Self {
        match c {
            CirclesArg::None => CircleMode::Hidden,
            CirclesArg::Extremal => CircleMode::Extremal,
            CirclesArg::All => CircleMode::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify every vertex of a polygon; emits the report as JSON.
    Analyze {
        /// Polygon JSON file: {"vertices": [["x","y"], ...]}.
        polygon: PathBuf,
    },
    /// Build the Delaunay or anti-Delaunay triangulation of a convex polygon.
    Triangulate {
        polygon: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Cut a polygon along a diagonal into two parts.
    Decompose {
        polygon: PathBuf,
        /// Diagonal endpoints as two vertex indices, e.g. --diagonal 1,4.
        #[arg(long, value_parser = parse_index_pair)]
        diagonal: (usize, usize),
    },
    /// Evaluate the claim catalog on one polygon; emits one JSON record
    /// per line.
    Verify {
        polygon: PathBuf,
        /// Comma-separated claim tags; all claims when omitted.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
    },
    /// Generate random polygons and evaluate the claim catalog on every
    /// one of them, hunting for counterexamples.
    Search {
        #[arg(long)]
        trials: u64,
        #[arg(long = "n-min", default_value_t = 4)]
        n_min: usize,
        #[arg(long = "n-max", default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated claim tags; all claims when omitted.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Write the report JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also stream every record as JSON lines to this file.
        #[arg(long)]
        records: Option<PathBuf>,
        /// Worker threads (also settable via VERTEX_EXTREMA_THREADS).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Generate one seeded generic convex polygon as JSON.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        radius_scale: u32,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a polygon with its extremality classification as SVG.
    Render {
        polygon: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Which neighbor circles to draw.
        #[arg(long, value_enum, default_value = "extremal")]
        circles: CirclesArg,
        /// Overlay the diagonals of a triangulation.
        #[arg(long, value_enum)]
        triangulation: Option<KindArg>,
    },
}

fn parse_index_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| "expected two comma-separated indices, e.g. 1,4".to_owned())?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad index {t:?}: {e}"))
    };
    Ok((parse(a)?, parse(b)?))
}

/// Any failure that should terminate with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn load_polygon(path: &Path) -> Result<Polygon, UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    Polygon::from_json(&text)
        .map_err(|e| UsageError(format!("cannot parse {}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), UsageError> {
    match path {
        Some(path) => fs::write(path, content)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            std::io::stdout().flush().map_err(UsageError::from)
        }
    }
}

fn claim_selection(tags: &[String]) -> Result<ClaimSelection, UsageError> {
    if tags.is_empty() {
        Ok(ClaimSelection::all())
    } else {
        ClaimSelection::from_tags(tags).map_err(UsageError::from)
    }
}

fn run(cli: Cli) -> Result<u8, UsageError> {
    match cli.command {
        Command::Analyze { polygon } => {
            let p = load_polygon(&polygon)?;
            let report = analyze(&p)?;
            println!("{}", report.to_json());
            Ok(0)
        }
        Command::Triangulate { polygon, kind } => {
            let p = load_polygon(&polygon)?;
            let tri = match kind.into() {
                TriangulationKind::Delaunay => delaunay_triangulation(&p)?,
                TriangulationKind::AntiDelaunay => anti_delaunay_triangulation(&p)?,
            };
            println!("{}", tri.to_json());
            Ok(0)
        }
        Command::Decompose { polygon, diagonal } => {
            let p = load_polygon(&polygon)?;
            let dec = decompose(&p, Diagonal::new(diagonal.0, diagonal.1))?;
            let doc = json!({
                "diagonal": [dec.diagonal.i, dec.diagonal.j],
                "p1": {
                    "polygon": serde_json::to_value(&dec.p1.polygon).unwrap(),
                    "parent_indices": dec.p1.parent_indices,
                },
                "p2": {
                    "polygon": serde_json::to_value(&dec.p2.polygon).unwrap(),
                    "parent_indices": dec.p2.parent_indices,
                },
            });
            println!("{doc}");
            Ok(0)
        }
        Command::Verify { polygon, claims } => {
            let p = load_polygon(&polygon)?;
            let selection = claim_selection(&claims)?;
            let records = vertex_extrema::decomposition::verify_polygon(&p, &selection)?;
            let mut failed = 0usize;
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for rec in &records {
                writeln!(out, "{}", rec.to_json_line()).map_err(UsageError::from)?;
                if !rec.passed {
                    failed += 1;
                }
            }
            eprintln!(
                "verified {} records on n={}: {} failed",
                records.len(),
                p.n(),
                failed
            );
            Ok(if failed > 0 { 1 } else { 0 })
        }
        Command::Search {
            trials,
            n_min,
            n_max,
            seed,
            claims,
            out,
            records,
            threads,
        } => {
            let mut cfg = SearchConfig::new(trials, n_min, n_max, seed);
            cfg.claims = claim_selection(&claims)?;
            cfg.threads = threads;
            let mut record_file = match &records {
                Some(path) => Some(fs::File::create(path).map_err(|e| {
                    UsageError(format!("cannot create {}: {e}", path.display()))
                })?),
                None => None,
            };
            let report = execute_search(
                &cfg,
                record_file.as_mut().map(|f| f as &mut dyn Write),
            )?;
            write_output(out.as_deref(), &(report.to_json() + "\n"))?;
            eprintln!(
                "search: {} trials, {} records, {} violations in {:.2}s",
                report.trials_run,
                report.records_evaluated,
                report.violations.len(),
                report.elapsed_seconds
            );
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Generate {
            n,
            seed,
            radius_scale,
            out,
        } => {
            let mut spec = GenSpec::new(n, seed);
            spec.radius_scale = radius_scale;
            let polygon = random_generic_convex(&spec)?;
            write_output(out.as_deref(), &(polygon.to_json() + "\n"))?;
            Ok(0)
        }
        Command::Render {
            polygon,
            out,
            circles,
            triangulation,
        } => {
            let p = load_polygon(&polygon)?;
            let options = RenderOptions {
                circles: circles.into(),
                triangulation: triangulation.map(Into::into),
            };
            let svg = render(&p, &options)?;
            fs::write(&out, svg)
                .map_err(|e| UsageError(format!("cannot write {}: {e}", out.display())))?;
            eprintln!("wrote {}", out.display());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
