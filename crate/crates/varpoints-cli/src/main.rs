//! Command-line front end: parses a ring/ideal/matrix document, runs the
//! library operations with seeded determinism, and emits JSON (or CSV for
//! line-probe sweeps).
//!
//! Exit codes: 0 success (an empty point list is a success), 2 search or
//! step budget exhausted, 3 contract or parse error, 4 internal error (an
//! emitted point failed its membership re-check, or the selftest found an
//! inconsistency).

mod input;
mod output;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use varpoints::dimension::{dim_via_bezout, DimensionFunction, DimensionOptions};
use varpoints::error::Error;
use varpoints::gb::Ideal;
use varpoints::minors::{extend_ideal_by_nonzero_minor, find_nonzero_minor};
use varpoints::points::{line_probe_outcomes, random_points, PointSearchOptions, Strategy};
use varpoints::poly::Replacement;
use varpoints::selftest::run_selftest;
use varpoints::transform::{
    generic_projection, projection_to_hypersurface, random_coordinate_change,
    CoordinateChangeOptions,
};

use input::{parse_input, InputDoc};
use output::{envelope, point_value};

#[derive(Parser)]
#[command(
    name = "varpoints",
    about = "Rational and geometric points on affine varieties over finite fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// How many points to request.
    #[arg(long, global = true, value_name = "N")]
    count: Option<usize>,

    /// Point-search strategy.
    #[arg(long, global = true, value_enum)]
    strategy: Option<StrategyArg>,

    /// Brute-force samples, or linear-space families per round.
    #[arg(long, global = true, value_name = "N")]
    attempts: Option<usize>,

    /// Accept points over extension fields.
    #[arg(long, global = true)]
    extend_field: bool,

    /// Homogeneous mode. Bare `--homogeneous` turns it on; commands whose
    /// default is on accept `--homogeneous=false`.
    #[arg(long, global = true, num_args = 0..=1, default_missing_value = "true", value_name = "BOOL")]
    homogeneous: Option<bool>,

    /// Linear-form shape for cuts and coordinate changes.
    #[arg(long, global = true, value_enum)]
    replacement: Option<ReplacementArg>,

    /// Worker threads for the brute-force scan.
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Dimension computation used by degeneracy checks and codimension.
    #[arg(long, global = true, value_enum)]
    dimension_function: Option<DimFnArg>,

    /// Estimates averaged by the probabilistic dimension command.
    #[arg(long, global = true, value_name = "N")]
    dim_attempts: Option<usize>,

    /// Minimum field size for dimension cuts; smaller fields get extended.
    #[arg(long, global = true, value_name = "Q")]
    min_field_size: Option<u64>,

    /// Dimensions to drop in a generic projection.
    #[arg(long, global = true, value_name = "N")]
    drop: Option<usize>,

    /// Known codimension for the hypersurface projection.
    #[arg(long, global = true, value_name = "C")]
    codim: Option<usize>,

    /// Size of the minor to extract.
    #[arg(long, global = true, value_name = "N")]
    minor_size: Option<usize>,

    /// Points at which to test the rank.
    #[arg(long, global = true, value_name = "N")]
    minor_attempts: Option<usize>,

    /// Coordinates allowed to become non-monomial in a coordinate change.
    #[arg(long, global = true, value_name = "N")]
    max_replace: Option<usize>,

    /// Line-probe trial count.
    #[arg(long, global = true, value_name = "N")]
    trials: Option<usize>,

    /// Master seed; falls back to VARPOINTS_SEED, then 0.
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,

    /// Output format. CSV is only for lineprobe sweeps.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    /// Input document path; stdin when omitted.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Find points on the variety of the input ideal.
    Points,
    /// Estimate the dimension probabilistically via linear-space cuts.
    Dim,
    /// Compute the exact dimension from a Gröbner basis.
    DimExact,
    /// Draw a random linear automorphism of the input ring.
    Coordchange,
    /// Generic projection of the input ideal.
    Project,
    /// Projection returning a single hypersurface equation.
    ProjectHypersurface,
    /// Find a nonvanishing minor of the input matrix at a variety point.
    Minor,
    /// Extend the input ideal by a nonvanishing minor's determinant.
    ExtendMinor,
    /// Estimate how often a random line meets the input hypersurface.
    Lineprobe,
    /// Run the built-in oracle suite over tiny fields.
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Points => "points",
            Command::Dim => "dim",
            Command::DimExact => "dim-exact",
            Command::Coordchange => "coordchange",
            Command::Project => "project",
            Command::ProjectHypersurface => "project-hypersurface",
            Command::Minor => "minor",
            Command::ExtendMinor => "extend-minor",
            Command::Lineprobe => "lineprobe",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum StrategyArg {
    Default,
    Brute,
    Linear,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum ReplacementArg {
    Monomial,
    Binomial,
    Trinomial,
    Full,
}

impl From<ReplacementArg> for Replacement {
    fn from(r: ReplacementArg) -> Replacement {
        match r {
            ReplacementArg::Monomial => Replacement::Monomial,
            ReplacementArg::Binomial => Replacement::Binomial,
            ReplacementArg::Trinomial => Replacement::Trinomial,
            ReplacementArg::Full => Replacement::Full,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum DimFnArg {
    Exact,
    Bezout,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum FormatArg {
    Json,
    Csv,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Budget(_) | Error::PointSearchFailure | Error::RankDeficient => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version print and succeed; real argument errors are
            // contract errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn resolve_seed(cli: &Cli) -> u64 {
    cli.seed
        .or_else(|| {
            std::env::var("VARPOINTS_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(0)
}

fn read_input(cli: &Cli) -> Result<String, Error> {
    match &cli.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| {
            Error::Contract(format!("cannot read input file {}: {e}", path.display()))
        }),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Contract(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn require_ideal(doc: &InputDoc) -> Result<Ideal, Error> {
    let gens = doc
        .ideal_gens
        .clone()
        .ok_or_else(|| Error::Contract("this command needs an `ideal:` statement".into()))?;
    Ideal::new(doc.ring.clone(), gens)
}

fn point_search_options(cli: &Cli, seed: u64) -> PointSearchOptions {
    PointSearchOptions {
        strategy: match cli.strategy {
            Some(StrategyArg::Brute) => Strategy::BruteForce,
            Some(StrategyArg::Linear) => Strategy::LinearIntersection,
            _ => Strategy::Default,
        },
        extend_field: cli.extend_field,
        homogeneous: cli.homogeneous.unwrap_or(false),
        replacement: cli
            .replacement
            .map(Replacement::from)
            .unwrap_or(Replacement::Binomial),
        point_check_attempts: cli.attempts,
        worker_count: cli.workers.unwrap_or(1),
        dimension_function: match cli.dimension_function {
            Some(DimFnArg::Bezout) => DimensionFunction::Bezout,
            _ => DimensionFunction::Exact,
        },
        seed,
    }
}

fn coordinate_change_options(cli: &Cli, seed: u64) -> CoordinateChangeOptions {
    CoordinateChangeOptions {
        replacement: cli
            .replacement
            .map(Replacement::from)
            .unwrap_or(Replacement::Full),
        max_coordinates_to_replace: cli.max_replace,
        homogeneous: cli.homogeneous.unwrap_or(true),
        seed,
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let seed = resolve_seed(cli);
    let format = cli.format.unwrap_or(FormatArg::Json);
    if format == FormatArg::Csv && cli.command != Command::Lineprobe {
        return Err(Error::Contract(
            "--format csv is only available for lineprobe".into(),
        ));
    }

    // selftest needs no input document
    if cli.command == Command::Selftest {
        let report = run_selftest(seed)?;
        let field = varpoints::ff::make_prime_field(3)?;
        let mut payload = Map::new();
        payload.insert("cases".into(), json!(report.cases));
        payload.insert("failures".into(), json!(report.failures));
        emit(&envelope("selftest", seed, &field, payload));
        return Ok(if report.passed() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(4)
        });
    }

    let text = read_input(cli)?;
    let doc = parse_input(&text, seed)?;
    let command = cli.command.name();

    match cli.command {
        Command::Points => {
            let ideal = require_ideal(&doc)?;
            let opts = point_search_options(cli, seed);
            let count = cli.count.unwrap_or(1);
            let pts = random_points(count, &ideal, &opts)?;
            // emission soundness: re-verify membership before printing
            for p in &pts {
                if !p.lies_on(&ideal).unwrap_or(false) {
                    eprintln!("internal error: emitted point fails membership re-check");
                    return Ok(ExitCode::from(4));
                }
            }
            let mut payload = Map::new();
            payload.insert(
                "points".into(),
                Value::Array(pts.iter().map(point_value).collect()),
            );
            emit(&envelope(command, seed, doc.ring.field(), payload));
        }
        Command::Dim => {
            let ideal = require_ideal(&doc)?;
            let opts = DimensionOptions {
                intersection_attempts: cli.dim_attempts,
                minimum_field_size: cli.min_field_size.unwrap_or(31),
                homogeneous: cli.homogeneous.unwrap_or(false),
                seed,
            };
            let dim = dim_via_bezout(&ideal, &opts)?;
            let mut payload = Map::new();
            payload.insert("dim".into(), json!(dim));
            emit(&envelope(command, seed, doc.ring.field(), payload));
        }
        Command::DimExact => {
            let ideal = require_ideal(&doc)?;
            let mut payload = Map::new();
            payload.insert("dim".into(), json!(ideal.krull_dim()));
            emit(&envelope(command, seed, doc.ring.field(), payload));
        }
        Command::Coordchange => {
            let opts = coordinate_change_options(cli, seed);
            let map = random_coordinate_change(&doc.ring, &opts)?;
            let images: Vec<Value> = map.images().iter().map(|f| json!(f.to_string())).collect();
            let mut payload = Map::new();
            payload.insert("map_images".into(), Value::Array(images));
            emit(&envelope(command, seed, doc.ring.field(), payload));
        }
        Command::Project => {
            let ideal = require_ideal(&doc)?;
            let opts = coordinate_change_options(cli, seed);
            let n_drop = cli.drop.unwrap_or(1);
            let (map, projected) = generic_projection(n_drop, &ideal, &opts)?;
            emit(&envelope(
                command,
                seed,
                doc.ring.field(),
                projection_payload(&map, &projected),
            ));
        }
        Command::ProjectHypersurface => {
            let ideal = require_ideal(&doc)?;
            let opts = coordinate_change_options(cli, seed);
            let dim_fn = match cli.dimension_function {
                Some(DimFnArg::Bezout) => DimensionFunction::Bezout,
                _ => DimensionFunction::Exact,
            };
            let (map, hypersurface) =
                projection_to_hypersurface(&ideal, cli.codim, dim_fn, &opts, None)?;
            emit(&envelope(
                command,
                seed,
                doc.ring.field(),
                projection_payload(&map, &hypersurface),
            ));
        }
        Command::Minor => {
            let ideal = require_ideal(&doc)?;
            let matrix = doc
                .matrix
                .clone()
                .ok_or_else(|| Error::Contract("this command needs a `matrix` statement".into()))?;
            let n = cli
                .minor_size
                .ok_or_else(|| Error::Contract("--minor-size is required".into()))?;
            let attempts = cli.minor_attempts.unwrap_or(5);
            let opts = point_search_options(cli, seed);
            let witness = find_nonzero_minor(n, &matrix, &ideal, attempts, &opts)?;
            if !witness.point.lies_on(&ideal).unwrap_or(false) {
                eprintln!("internal error: witness point fails membership re-check");
                return Ok(ExitCode::from(4));
            }
            let det = witness.submatrix.determinant()?;
            let mut payload = Map::new();
            payload.insert("cols".into(), json!(witness.column_indices));
            payload.insert("determinant".into(), json!(det.to_string()));
            payload.insert("point".into(), point_value(&witness.point));
            payload.insert("rows".into(), json!(witness.row_indices));
            let sub: Vec<Vec<String>> = (0..witness.submatrix.rows())
                .map(|r| {
                    (0..witness.submatrix.cols())
                        .map(|c| witness.submatrix.at(r, c).to_string())
                        .collect()
                })
                .collect();
            payload.insert("submatrix".into(), json!(sub));
            emit(&envelope(command, seed, doc.ring.field(), payload));
        }
        Command::ExtendMinor => {
            let ideal = require_ideal(&doc)?;
            let matrix = doc
                .matrix
                .clone()
                .ok_or_else(|| Error::Contract("this command needs a `matrix` statement".into()))?;
            let n = cli
                .minor_size
                .ok_or_else(|| Error::Contract("--minor-size is required".into()))?;
            let attempts = cli.minor_attempts.unwrap_or(5);
            let opts = point_search_options(cli, seed);
            let extended = extend_ideal_by_nonzero_minor(n, &matrix, &ideal, attempts, &opts)?;
            let gens: Vec<Value> = extended
                .generators()
                .iter()
                .map(|g| json!(g.to_string()))
                .collect();
            let mut payload = Map::new();
            payload.insert("ideal_generators".into(), Value::Array(gens));
            emit(&envelope(command, seed, doc.ring.field(), payload));
        }
        Command::Lineprobe => {
            let gens = doc
                .ideal_gens
                .clone()
                .ok_or_else(|| Error::Contract("lineprobe needs an `ideal:` statement".into()))?;
            if gens.len() != 1 {
                return Err(Error::Contract(
                    "lineprobe needs exactly one hypersurface equation".into(),
                ));
            }
            let trials = cli.trials.or(cli.attempts).unwrap_or(100);
            let outcomes = line_probe_outcomes(&gens[0], trials, seed)?;
            let hits = outcomes.iter().filter(|&&h| h).count();
            match format {
                FormatArg::Csv => {
                    let mut csv = String::from("trial,hit,seed\n");
                    for (i, hit) in outcomes.iter().enumerate() {
                        csv.push_str(&format!("{i},{},{seed}\n", u8::from(*hit)));
                    }
                    print!("{csv}");
                }
                FormatArg::Json => {
                    let rate = if trials == 0 {
                        0.0
                    } else {
                        hits as f64 / trials as f64
                    };
                    let mut payload = Map::new();
                    payload.insert("hits".into(), json!(hits));
                    payload.insert("rate".into(), json!(rate));
                    payload.insert("trials".into(), json!(trials));
                    emit(&envelope(command, seed, doc.ring.field(), payload));
                }
            }
        }
        Command::Selftest => unreachable!("handled above"),
    }
    Ok(ExitCode::SUCCESS)
}

fn projection_payload(map: &varpoints::poly::RingMap, ideal: &Ideal) -> Map<String, Value> {
    let images: Vec<Value> = map.images().iter().map(|f| json!(f.to_string())).collect();
    let gens: Vec<Value> = ideal
        .generators()
        .iter()
        .map(|g| json!(g.to_string()))
        .collect();
    let mut payload = Map::new();
    payload.insert("ideal_generators".into(), Value::Array(gens));
    payload.insert("map_images".into(), Value::Array(images));
    payload.insert("target_vars".into(), json!(ideal.ring().var_names()));
    payload
}

fn emit(value: &Value) {
    println!(
        "{}",
        serde_json::to_string(value).expect("JSON serialization")
    );
}
