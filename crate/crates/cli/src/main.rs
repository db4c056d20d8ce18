//! Command-line front end: polynomial I/O, the toolkit operations as
//! subcommands, golden-example reproduction, and plot-data emission.
//!
//! Exit codes: 0 success, 1 a `reproduce` report failed, 2 input error,
//! 3 mathematical precondition failure (nullification, degree bounds, a
//! sample on a projection root).

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use projcad::delineability::{
    cell_bounds_1d, check_finite_set, desingularize_at, project_classical, project_projective,
    projective_roots_above, section_sign_check, ProjectionMode,
};
use projcad::elimination::{discriminant_fixed, resultant_fixed};
use projcad::forms::{homogenize, moebius_transform, pullback};
use projcad::json;
use projcad::poly::MultiPoly;
use projcad::rat::{parse_rat, Rat};
use projcad::tracking::{track_roots, BasePath, TrackMode, TrackOptions};
use projcad::Error;

mod reproduce;

#[derive(Parser)]
#[command(
    name = "projcad",
    about = "Exact projective root geometry and reduced CAD projection",
    version
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

/// Numeric defaults shared by the sampling subcommands.
#[derive(Args, Clone)]
struct Config {
    /// Sample count for paths (at least 16)
    #[arg(long, global = true, default_value_t = 256)]
    samples: usize,
    /// Branch-matching jump threshold on the projective circle, in (0, 1)
    #[arg(long, global = true, default_value_t = 0.2)]
    jump_threshold: f64,
    /// Output file; stdout when omitted
    #[arg(long, global = true)]
    output: Option<String>,
    /// Output format for tracking data
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Classical,
    Projective,
}

impl From<Mode> for ProjectionMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Classical => ProjectionMode::Classical,
            Mode::Projective => ProjectionMode::Projective,
        }
    }
}

#[derive(Args, Clone)]
struct PathArgs {
    /// Segment start point, comma-separated rationals (with --to)
    #[arg(long, allow_hyphen_values = true)]
    from: Option<String>,
    /// Segment end point
    #[arg(long, allow_hyphen_values = true)]
    to: Option<String>,
    /// Closed circle path in a 2-dimensional base
    #[arg(long)]
    circle: bool,
    /// Circle center, two comma-separated rationals
    #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
    center: String,
    /// Circle radius
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    radius: String,
}

#[derive(Subcommand)]
enum Command {
    /// Homogenize a polynomial to a binary form of the given degree
    Homogenize {
        /// Polynomial JSON file, or - for stdin
        poly: String,
        #[arg(long)]
        degree: usize,
    },
    /// Pull a binary form back to a polynomial (y := 1)
    Pullback {
        /// Binary form JSON file, or - for stdin
        form: String,
    },
    /// Möbius transform of a polynomial w.r.t. a matrix and reference degree
    Transform {
        poly: String,
        /// Matrix JSON ({"a":[["1","0"],["1","1"]]}), inline or a file path
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        degree: usize,
    },
    /// Fixed-degree resultant of two polynomials
    Resultant {
        poly1: String,
        poly2: String,
        /// Reference degree of the first polynomial (default: its degree)
        #[arg(short = 'p', long)]
        p: Option<usize>,
        /// Reference degree of the second polynomial (default: its degree)
        #[arg(short = 'q', long)]
        q: Option<usize>,
    },
    /// Fixed-degree discriminant of a polynomial
    Discriminant {
        poly: String,
        /// Reference degree (default: the polynomial's degree, at least 2)
        #[arg(short = 'p', long)]
        p: Option<usize>,
    },
    /// Projective roots of a univariate polynomial w.r.t. a reference degree
    Roots {
        poly: String,
        #[arg(long)]
        degree: usize,
    },
    /// Projective roots of a polynomial above a base point
    RootsAbove {
        poly: String,
        /// Base point, comma-separated rationals
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Track projective root branches along a path
    Track {
        poly: String,
        #[command(flatten)]
        path: PathArgs,
        /// Track only the real roots (no root at infinity)
        #[arg(long)]
        real_only: bool,
    },
    /// Exact delineability check over a finite set of base points
    CheckFinite {
        poly: String,
        /// Base points, semicolon-separated, coordinates comma-separated
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Reduced projection of a polynomial family
    Project {
        /// Polynomial JSON files
        polys: Vec<String>,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Maximal open interval around a sample bounded by projection roots
    Cell {
        polys: Vec<String>,
        /// Base sample (a rational)
        #[arg(long, allow_hyphen_values = true)]
        sample: String,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Unimodular matrix removing the root at infinity above a base point
    Desingularize {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Classify a second polynomial along the tracked branches of the first
    SectionCheck {
        poly1: String,
        poly2: String,
        #[command(flatten)]
        path: PathArgs,
    },
    /// Re-run a named worked example against its golden values
    Reproduce {
        /// One of: scc, cub-hyp, prop4-circle, finite-01, lc-line,
        /// p-del-not-proj
        id: String,
    },
    /// Branch traces as CSV for external plotting
    PlotData {
        polys: Vec<String>,
        #[command(flatten)]
        path: PathArgs,
        /// Sample count override for plotting
        #[arg(long)]
        resolution: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::BadInput(_)
        | Error::DimensionMismatch { .. }
        | Error::TooFewSamples { .. }
        | Error::BadCircleBase(_)
        | Error::BadCellDimension(_) => 2,
        _ => 3,
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::BadInput(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::BadInput(format!("cannot read {path}: {e}")))
    }
}

fn read_poly(path: &str) -> Result<MultiPoly, Error> {
    json::poly_from_json(&read_input(path)?)
}

fn read_polys(paths: &[String]) -> Result<Vec<MultiPoly>, Error> {
    if paths.is_empty() {
        return Err(Error::BadInput("at least one polynomial is required".into()));
    }
    paths.iter().map(|p| read_poly(p)).collect()
}

fn parse_point(s: &str) -> Result<Vec<Rat>, Error> {
    s.split(',').map(|c| parse_rat(c.trim())).collect()
}

fn emit(config: &Config, text: &str) -> Result<(), Error> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &config.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::BadInput(format!("cannot write {path}: {e}"))),
    }
}

fn build_path(args: &PathArgs, config: &Config, resolution: Option<usize>) -> Result<BasePath, Error> {
    let samples = resolution.unwrap_or(config.samples);
    if args.circle {
        let center = parse_point(&args.center)?;
        if center.len() != 2 {
            return Err(Error::BadCircleBase(center.len()));
        }
        BasePath::circle(
            [center[0].clone(), center[1].clone()],
            parse_rat(&args.radius)?,
            samples,
        )
    } else {
        match (&args.from, &args.to) {
            (Some(a), Some(b)) => BasePath::segment(parse_point(a)?, parse_point(b)?, samples),
            _ => Err(Error::BadInput(
                "a path needs either --circle or both --from and --to".into(),
            )),
        }
    }
}

fn track_options(config: &Config, real_only: bool) -> Result<TrackOptions, Error> {
    if !(config.jump_threshold > 0.0 && config.jump_threshold < 1.0) {
        return Err(Error::BadInput(
            "jump threshold must lie strictly between 0 and 1".into(),
        ));
    }
    Ok(TrackOptions {
        jump_threshold: config.jump_threshold,
        matching_margin: 0.25 * config.jump_threshold,
        mode: if real_only {
            TrackMode::RealOnly
        } else {
            TrackMode::Projective
        },
    })
}

/// Matrix argument: inline JSON or a file path.
fn read_matrix(arg: &str) -> Result<projcad::forms::Matrix2, Error> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read_input(arg)?
    };
    json::matrix_from_json(&text)
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let config = &cli.config;
    if config.samples < projcad::tracking::MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            min: projcad::tracking::MIN_SAMPLES,
            got: config.samples,
        });
    }
    match &cli.command {
        Command::Homogenize { poly, degree } => {
            let p = read_poly(poly)?;
            let g = homogenize(&p, *degree)?;
            emit(config, &json::form_to_json(&g))?;
        }
        Command::Pullback { form } => {
            let g = json::form_from_json(&read_input(form)?)?;
            emit(config, &json::poly_to_json(&pullback(&g)))?;
        }
        Command::Transform {
            poly,
            matrix,
            degree,
        } => {
            let p = read_poly(poly)?;
            let a = read_matrix(matrix)?;
            emit(config, &json::poly_to_json(&moebius_transform(&p, &a, *degree)?))?;
        }
        Command::Resultant { poly1, poly2, p, q } => {
            let f = read_poly(poly1)?;
            let g = read_poly(poly2)?;
            let dp = match p {
                Some(d) => *d,
                None => f.degree_in_last()?,
            };
            let dq = match q {
                Some(d) => *d,
                None => g.degree_in_last()?,
            };
            emit(config, &json::poly_to_json(&resultant_fixed(&f, &g, dp, dq)?))?;
        }
        Command::Discriminant { poly, p } => {
            let f = read_poly(poly)?;
            let dp = match p {
                Some(d) => *d,
                None => f.degree_in_last()?,
            };
            emit(config, &json::poly_to_json(&discriminant_fixed(&f, dp)?))?;
        }
        Command::Roots { poly, degree } => {
            let p = read_poly(poly)?;
            if p.nvars() > 1 {
                return Err(Error::BadInput(
                    "roots takes a univariate polynomial; use roots-above for more variables"
                        .into(),
                ));
            }
            let set = projcad::roots::projective_roots(&p.to_uni(), *degree)?;
            emit(config, &json::roots_to_json(&set))?;
        }
        Command::RootsAbove { poly, point } => {
            let p = read_poly(poly)?;
            let x0 = parse_point(point)?;
            let set = projective_roots_above(&p, &x0)?;
            emit(config, &json::roots_to_json(&set))?;
        }
        Command::Track {
            poly,
            path,
            real_only,
        } => {
            let p = read_poly(poly)?;
            let base_path = build_path(path, config, None)?;
            let opts = track_options(config, *real_only)?;
            let result = track_roots(&p, &base_path, &opts)?;
            match config.format {
                Format::Json => emit(config, &json::verdict_to_json(&result))?,
                Format::Csv => emit(config, &json::track_to_csv(&result))?,
            }
        }
        Command::CheckFinite { poly, points } => {
            let p = read_poly(poly)?;
            let pts: Vec<Vec<Rat>> = points
                .split(';')
                .map(parse_point)
                .collect::<Result<_, _>>()?;
            let v = check_finite_set(&p, &pts)?;
            emit(config, &json::finite_verdict_to_json(&v))?;
        }
        Command::Project { polys, mode } => {
            let family = read_polys(polys)?;
            let set = match mode {
                Mode::Classical => project_classical(&family)?,
                Mode::Projective => project_projective(&family)?,
            };
            emit(config, &json::projection_to_json(&set))?;
        }
        Command::Cell { polys, sample, mode } => {
            let family = read_polys(polys)?;
            let s = parse_rat(sample)?;
            let cell = cell_bounds_1d(&family, &s, (*mode).into())?;
            emit(config, &json::cell_to_json(&cell))?;
        }
        Command::Desingularize { poly, point } => {
            let p = read_poly(poly)?;
            let x0 = parse_point(point)?;
            let (a, hint) = desingularize_at(&p, &x0)?;
            let out = format!(
                "{{\"matrix\":{},\"nonvanishing\":{}}}",
                json::matrix_to_json(&a),
                json::poly_to_json(&hint)
            );
            emit(config, &out)?;
        }
        Command::SectionCheck { poly1, poly2, path } => {
            let p = read_poly(poly1)?;
            let q = read_poly(poly2)?;
            let base_path = build_path(path, config, None)?;
            let opts = track_options(config, false)?;
            let reports = section_sign_check(&p, &q, &base_path, &opts)?;
            emit(config, &json::section_reports_to_json(&reports))?;
        }
        Command::Reproduce { id } => {
            let report = reproduce::run(id, config.samples, config.jump_threshold)?;
            emit(config, &report.text)?;
            if !report.pass {
                return Ok(ExitCode::from(1));
            }
        }
        Command::PlotData {
            polys,
            path,
            resolution,
        } => {
            let family = read_polys(polys)?;
            let base_path = build_path(path, config, *resolution)?;
            let opts = track_options(config, false)?;
            let mut results = Vec::new();
            for p in &family {
                results.push(track_roots(p, &base_path, &opts)?);
            }
            emit(config, &json::plot_to_csv(&results))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
