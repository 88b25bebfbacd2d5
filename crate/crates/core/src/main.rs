//! Command-line front end: SAT construction, region-sum queries, corner
//! classification, randomized verification suites, and a SAT-vs-naive
//! rectangle-query benchmark.
//!
//! Exit codes: 0 on success, 1 when a verification suite or answer
//! cross-check fails, 2 on input errors (the clap default for usage errors).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use slantsum::curve::{
    tendency_from_indicator, CurvePosition, LatticePolyline, SegmentMode, TendencyIndicator,
};
use slantsum::formats::{parse_domain_file, parse_image, sat_to_csv, DomainGeometry, LoadedGrid};
use slantsum::grid::{build_sat, GridFunction};
use slantsum::oracle::brute_region_sum;
use slantsum::rectdomain::RectilinearDomain;
use slantsum::slanted::{naive_integral, oracle_region_value, region_integral, ScalarField};
use slantsum::verify::{self, random_cell_box_log, BenchRow, SuiteReport};

#[derive(Parser)]
#[command(
    name = "slantsum",
    version,
    about = "Region sums over grids via summed-area tables and slanted line integrals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a summed-area table from a PGM or CSV image and write it as CSV.
    SatBuild {
        /// Input image: PGM (P2/P5, maxval <= 65535) or CSV of numbers.
        input: PathBuf,
        /// Output path for the (width+1)x(height+1) cumulative table.
        output: PathBuf,
    },
    /// Integrate the image over the region described by a domain file.
    RegionSum {
        /// Input image: PGM or CSV.
        image: PathBuf,
        /// Domain file with `box` records (eq1) or a `curve` record.
        domain: PathBuf,
        /// Integration pipeline to run.
        #[arg(long, value_enum)]
        mode: QueryMode,
    },
    /// Print the corner classification of a domain file's geometry.
    Classify {
        /// Domain file with `box` records or a `curve` record.
        domain: PathBuf,
    },
    /// Run a randomized verification suite against the brute-force oracles.
    Verify {
        /// Number of randomized trials.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Seed for the deterministic random stream.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Which suite to run.
        #[arg(long, value_enum)]
        suite: SuiteName,
    },
    /// Time rectangle-sum queries: summed-area table vs. per-cell summation.
    Bench {
        /// Optional integer image to benchmark against.
        image: Option<PathBuf>,
        /// Number of random rectangle queries per subject.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        queries: u64,
        /// Comma-separated square grid sizes to synthesize and benchmark.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Seed for grid synthesis and query generation.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QueryMode {
    /// Corner-weighted antiderivative sum over a union of boxes.
    Eq1,
    /// Slanted line integrals along a closed boundary curve.
    Slanted,
    /// The flawed region functional (demonstration only).
    Naive,
    /// Brute-force reference: rasterize and sum every cell.
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    /// Corner sums over random box unions vs. direct cell summation.
    Eq1,
    /// Closed-boundary region integrals, grid and polynomial modes.
    Thm12,
    /// Additivity and orientation-reversal identities, plus decompositions.
    Claims,
    /// Piecewise-linear detachment calculus (FTC, trend, Rolle, Fermat, Darboux).
    #[value(name = "appB")]
    AppB,
    /// The naive functional's documented failures and their corrections.
    #[value(name = "appC")]
    AppC,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::SatBuild { input, output } => cmd_sat_build(&input, &output),
        Command::RegionSum {
            image,
            domain,
            mode,
        } => cmd_region_sum(&image, &domain, mode),
        Command::Classify { domain } => cmd_classify(&domain),
        Command::Verify {
            trials,
            seed,
            suite,
        } => Ok(cmd_verify(trials, seed, suite)),
        Command::Bench {
            image,
            queries,
            sizes,
            seed,
        } => cmd_bench(image.as_deref(), queries, &sizes, seed),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn cmd_sat_build(input: &Path, output: &Path) -> Result<ExitCode, String> {
    let bytes = read_bytes(input)?;
    let loaded = parse_image(&bytes).map_err(|e| e.to_string())?;
    let (width, height) = (loaded.width(), loaded.height());
    let (csv, total) = match loaded {
        LoadedGrid::Int(grid) => {
            let sat = build_sat(&grid).map_err(|e| e.to_string())?;
            let total = sat
                .vertex_sum(width as i64, height as i64)
                .map_err(|e| e.to_string())?;
            (sat_to_csv(&sat), total.to_string())
        }
        LoadedGrid::Float(grid) => {
            let sat = build_sat(&grid).map_err(|e| e.to_string())?;
            let total = sat
                .vertex_sum(width as i64, height as i64)
                .map_err(|e| e.to_string())?;
            (sat_to_csv(&sat), total.to_string())
        }
    };
    fs::write(output, csv).map_err(|e| format!("cannot write {}: {e}", output.display()))?;
    println!("dimensions: {width}x{height}");
    println!("total: {total}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_region_sum(image: &Path, domain: &Path, mode: QueryMode) -> Result<ExitCode, String> {
    let bytes = read_bytes(image)?;
    let loaded = parse_image(&bytes).map_err(|e| e.to_string())?;
    let geometry = parse_domain_file(&read_text(domain)?).map_err(|e| e.to_string())?;

    let printed = match geometry {
        DomainGeometry::Boxes(boxes) => {
            let region = RectilinearDomain::from_boxes(&boxes).map_err(|e| e.to_string())?;
            match mode {
                QueryMode::Eq1 => {
                    let field = field_from(loaded).map_err(|e| e.to_string())?;
                    region
                        .antiderivative_sum(&field)
                        .map_err(|e| e.to_string())?
                        .to_string()
                }
                QueryMode::Oracle => match loaded {
                    LoadedGrid::Int(grid) => brute_region_sum(region.cells(), &grid)
                        .map_err(|e| e.to_string())?
                        .to_string(),
                    LoadedGrid::Float(grid) => brute_region_sum(region.cells(), &grid)
                        .map_err(|e| e.to_string())?
                        .to_string(),
                },
                QueryMode::Slanted | QueryMode::Naive => {
                    return Err("box records require --mode eq1 or --mode oracle".into())
                }
            }
        }
        DomainGeometry::Curve(vertices) => {
            if mode == QueryMode::Eq1 {
                return Err("--mode eq1 requires box records, not a curve".into());
            }
            let curve = LatticePolyline::closed(vertices, SegmentMode::Monotone)
                .map_err(|e| e.to_string())?;
            let field = field_from(loaded).map_err(|e| e.to_string())?;
            let value = match mode {
                QueryMode::Slanted => region_integral(&curve, &field),
                QueryMode::Oracle => oracle_region_value(&curve, &field),
                QueryMode::Naive => {
                    eprintln!(
                        "warning: --mode naive evaluates a deliberately flawed functional \
                         (region terms only) for demonstration; do not use its output"
                    );
                    naive_integral(&curve, &field)
                }
                QueryMode::Eq1 => unreachable!("handled above"),
            };
            value.map_err(|e| e.to_string())?.to_string()
        }
        DomainGeometry::Polynomial(_) | DomainGeometry::Pwl(_) => {
            return Err("region-sum needs box or curve records in the domain file".into())
        }
    };
    println!("{printed}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(domain: &Path) -> Result<ExitCode, String> {
    let geometry = parse_domain_file(&read_text(domain)?).map_err(|e| e.to_string())?;
    match geometry {
        DomainGeometry::Boxes(boxes) => {
            let region = RectilinearDomain::from_boxes(&boxes).map_err(|e| e.to_string())?;
            for corner in region.corners() {
                println!("vertex {}  alpha {:+}", corner.vertex, corner.alpha);
            }
        }
        DomainGeometry::Curve(vertices) => {
            let curve = LatticePolyline::closed(vertices, SegmentMode::Monotone)
                .map_err(|e| e.to_string())?;
            for (index, vertex) in curve.vertices().iter().enumerate() {
                let indicator = curve
                    .indicator_at(CurvePosition::Vertex(index))
                    .map_err(|e| e.to_string())?;
                let tendency = tendency_from_indicator(&indicator);
                println!(
                    "vertex {}  indicator {}  tendency {}",
                    vertex,
                    format_indicator(&indicator),
                    format_signed(tendency)
                );
            }
        }
        DomainGeometry::Polynomial(_) | DomainGeometry::Pwl(_) => {
            return Err("classify needs box or curve records in the domain file".into())
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(trials: u64, seed: u64, suite: SuiteName) -> ExitCode {
    let reports: Vec<SuiteReport> = match suite {
        SuiteName::Eq1 => vec![verify::suite_eq1(trials, seed)],
        SuiteName::Thm12 => vec![
            verify::suite_thm12_grid(trials, seed),
            verify::suite_thm12_poly(trials, seed.wrapping_add(1)),
        ],
        SuiteName::Claims => vec![
            verify::suite_claims(trials, seed),
            verify::suite_lemma((trials / 10).max(1), seed.wrapping_add(1)),
        ],
        SuiteName::AppB => vec![verify::suite_appb(trials, seed)],
        SuiteName::AppC => vec![verify::suite_appc(trials, seed)],
    };
    let mut all_passed = true;
    for report in &reports {
        println!(
            "suite {}: {} passed, {} failed ({} trials)",
            report.suite, report.passed, report.failed, report.trials
        );
        if let Some(max_rel) = report.max_relative_error {
            println!("suite {}: max relative error {max_rel:e}", report.suite);
        }
        for failure in &report.failures {
            eprintln!("suite {}: {failure}", report.suite);
        }
        all_passed &= report.all_passed();
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_bench(
    image: Option<&Path>,
    queries: u64,
    sizes: &[usize],
    seed: u64,
) -> Result<ExitCode, String> {
    let mut rows: Vec<BenchRow> = Vec::new();
    if let Some(path) = image {
        let bytes = read_bytes(path)?;
        let grid = match parse_image(&bytes).map_err(|e| e.to_string())? {
            LoadedGrid::Int(grid) => grid,
            LoadedGrid::Float(_) => return Err("bench requires an integer image".into()),
        };
        match bench_image(&grid, queries, seed) {
            Ok(image_rows) => rows.extend(image_rows),
            Err(message) => return Ok(report_mismatch(&message)),
        }
    }
    if !sizes.is_empty() {
        match verify::bench_rect_queries(sizes, queries, seed) {
            Ok(size_rows) => rows.extend(size_rows),
            Err(message) => return Ok(report_mismatch(&message)),
        }
    }
    if rows.is_empty() {
        return Err("nothing to benchmark: give an image path or --sizes".into());
    }
    println!("size,method,total_ns,ns_per_query");
    for row in rows {
        println!(
            "{},{},{},{:.1}",
            row.size, row.method, row.total_ns, row.ns_per_query
        );
    }
    Ok(ExitCode::SUCCESS)
}

/// Times `queries` random rectangle sums over a loaded image, SAT vs. direct
/// per-cell summation, cross-checking every answer. Queries are drawn with
/// log-uniform side lengths inside the image's largest lower-left square.
fn bench_image(grid: &GridFunction<i64>, queries: u64, seed: u64) -> Result<Vec<BenchRow>, String> {
    let side = grid.width().min(grid.height());
    if side == 0 {
        return Err("benchmark image is empty".into());
    }
    let sat = build_sat(grid).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let boxes: Vec<_> = (0..queries)
        .map(|_| random_cell_box_log(&mut rng, side as i64))
        .collect();

    let start = Instant::now();
    let mut fast = Vec::with_capacity(boxes.len());
    for b in &boxes {
        fast.push(sat.rect_sum(*b).map_err(|e| e.to_string())?);
    }
    let fast_ns = start.elapsed().as_nanos();

    let start = Instant::now();
    let mut slow = Vec::with_capacity(boxes.len());
    for b in &boxes {
        slow.push(brute_region_sum(b.cells(), grid).map_err(|e| e.to_string())?);
    }
    let slow_ns = start.elapsed().as_nanos();

    if fast != slow {
        return Err("SAT and per-cell answers disagree on the benchmark image".into());
    }
    let per = |total: u128| total as f64 / queries as f64;
    Ok(vec![
        BenchRow {
            size: side,
            method: "sat",
            total_ns: fast_ns,
            ns_per_query: per(fast_ns),
        },
        BenchRow {
            size: side,
            method: "naive",
            total_ns: slow_ns,
            ns_per_query: per(slow_ns),
        },
    ])
}

fn report_mismatch(message: &str) -> ExitCode {
    eprintln!("cross-check failed: {message}");
    ExitCode::from(1)
}

fn field_from(loaded: LoadedGrid) -> Result<ScalarField, slantsum::grid::GridError> {
    match loaded {
        LoadedGrid::Int(grid) => ScalarField::from_grid_i64(grid),
        LoadedGrid::Float(grid) => ScalarField::from_grid_f64(grid),
    }
}

/// Renders a signed small integer with an explicit sign on nonzero values
/// (`+1`, `-1`) and a bare `0`, matching the corner-table conventions.
fn format_signed(value: i8) -> String {
    if value == 0 {
        "0".to_string()
    } else {
        format!("{value:+}")
    }
}

fn format_indicator(indicator: &TendencyIndicator) -> String {
    let (x_plus, x_minus, y_plus, y_minus) = indicator.as_tuple();
    format!(
        "({},{},{},{})",
        format_signed(x_plus),
        format_signed(x_minus),
        format_signed(y_plus),
        format_signed(y_minus)
    )
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, String> {
    fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn read_text(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}
