//! Seed-deterministic randomized verification suites and the query benchmark.
//!
//! Each suite generates random instances from a `ChaCha8` stream, checks an
//! exact (or tightly toleranced) identity against an independent brute-force
//! reference, and reports pass/fail counts. The same functions back the
//! `verify` CLI command and the acceptance checks, so a suite's behavior is
//! fully determined by `(trials, seed)`.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{LatticePolyline, RunSpan, SegmentMode};
use crate::detach::PiecewiseLinearFunction;
use crate::grid::{build_sat, CellBox, GridFunction};
use crate::oracle;
use crate::poly::BivariatePoly;
use crate::rectdomain::RectilinearDomain;
use crate::slanted::{
    check_additivity, check_lemma_decomposition, check_orientation, naive_failure_suite,
    region_integral, ScalarField, SlantedError,
};
use crate::{point, rational_to_f64, BigRational, Point, Scalar};

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    /// Suite name as selected on the command line.
    pub suite: &'static str,
    /// Number of individual checks run.
    pub trials: u64,
    /// Checks that passed.
    pub passed: u64,
    /// Checks that failed.
    pub failed: u64,
    /// Largest relative error observed, for toleranced suites.
    pub max_relative_error: Option<f64>,
    /// Descriptions of the first few failures.
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport {
            suite,
            trials: 0,
            passed: 0,
            failed: 0,
            max_relative_error: None,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, outcome: Result<(), String>) {
        self.trials += 1;
        match outcome {
            Ok(()) => self.passed += 1,
            Err(message) => {
                self.failed += 1;
                if self.failures.len() < 5 {
                    self.failures.push(message);
                }
            }
        }
    }

    /// True when every check ran and passed.
    pub fn all_passed(&self) -> bool {
        self.trials > 0 && self.failed == 0
    }
}

/// Checks the corner-weighted antiderivative sum against direct summation on
/// random unions of up to 8 boxes over random 64×64 integer grids.
pub fn suite_eq1(trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("eq1");
    for i in 0..trials {
        let outcome = (|| {
            let grid = random_int_grid(&mut rng, 64, 64);
            let box_count = rng.gen_range(1..=8);
            let boxes: Vec<CellBox> = (0..box_count)
                .map(|_| random_cell_box(&mut rng, 64, 64))
                .collect();
            let domain =
                RectilinearDomain::from_boxes(&boxes).map_err(|e| format!("trial {i}: {e}"))?;
            let direct = oracle::brute_region_sum(domain.cells(), &grid)
                .map_err(|e| format!("trial {i}: {e}"))?;
            let field = ScalarField::from_grid_i64(grid).map_err(|e| format!("trial {i}: {e}"))?;
            let corner = domain
                .antiderivative_sum(&field)
                .map_err(|e| format!("trial {i}: {e}"))?;
            if corner != Scalar::ExactHalves(2 * direct) {
                return Err(format!(
                    "trial {i}: corner sum {corner} differs from direct sum {direct}"
                ));
            }
            Ok(())
        })();
        report.record(outcome);
    }
    report
}

/// Checks the boundary-sum region integral against rasterization plus direct
/// summation on random simple closed rectilinear boundaries over random
/// 64×64 integer grids.
pub fn suite_thm12_grid(trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("thm12-grid");
    for i in 0..trials {
        let outcome = (|| {
            let grid = random_int_grid(&mut rng, 64, 64);
            let boundary = random_rectilinear_boundary(&mut rng);
            let cells = oracle::rasterize(&boundary).map_err(|e| format!("trial {i}: {e}"))?;
            let direct =
                oracle::brute_region_sum(cells, &grid).map_err(|e| format!("trial {i}: {e}"))?;
            let field = ScalarField::from_grid_i64(grid).map_err(|e| format!("trial {i}: {e}"))?;
            let value =
                region_integral(&boundary, &field).map_err(|e| format!("trial {i}: {e}"))?;
            if value != Scalar::ExactHalves(2 * direct) {
                return Err(format!(
                    "trial {i}: boundary sum {value} differs from raster sum {direct} on {:?}",
                    boundary.vertices()
                ));
            }
            Ok(())
        })();
        report.record(outcome);
    }
    report
}

/// Checks the boundary-sum region integral against exact polygon integration
/// on random monotone-polyline-bounded regions and random polynomials of
/// degree ≤ 3 with coefficients in [−4, 4].
pub fn suite_thm12_poly(trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("thm12-poly");
    let mut max_rel = 0.0f64;
    for i in 0..trials {
        let outcome = (|| {
            let f = random_poly(&mut rng);
            let boundary = random_monotone_region(&mut rng);
            let field = ScalarField::from_polynomial(f.clone());
            let value =
                region_integral(&boundary, &field).map_err(|e| format!("trial {i}: {e}"))?;
            let truth = oracle::polygon_integral(&f, boundary.vertices());
            let rel = if value == Scalar::Rational(truth.clone()) {
                0.0
            } else {
                let v = value.to_f64();
                let t = rational_to_f64(&truth);
                (v - t).abs() / t.abs().max(1.0)
            };
            if rel > max_rel {
                max_rel = rel;
            }
            if rel > 1e-9 {
                return Err(format!(
                    "trial {i}: relative error {rel:e} exceeds 1e-9 on {:?}",
                    boundary.vertices()
                ));
            }
            Ok(())
        })();
        report.record(outcome);
    }
    report.max_relative_error = Some(max_rel);
    report
}

/// Checks sub-curve additivity (split a run at an interior vertex) and
/// orientation antisymmetry (reverse a run in the reversed context) on random
/// staircase runs; residuals must vanish exactly in grid mode.
pub fn suite_claims(trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("claims");
    for i in 0..trials {
        let grid = random_int_grid(&mut rng, 64, 64);
        let field = match ScalarField::from_grid_i64(grid) {
            Ok(field) => field,
            Err(e) => {
                report.record(Err(format!("trial {i}: {e}")));
                report.record(Err(format!("trial {i}: {e}")));
                continue;
            }
        };
        let (context, run) = random_claims_target(&mut rng);
        let split = rng.gen_range(1..run.segment_count);
        let additivity = (|| {
            let residual = check_additivity(
                &context,
                run.start_segment,
                run.segment_count,
                split,
                &field,
            )
            .map_err(|e| format!("trial {i}: {e}"))?;
            if !residual.is_zero() {
                return Err(format!(
                    "trial {i}: split residual {residual} on {:?}",
                    context.vertices()
                ));
            }
            Ok(())
        })();
        report.record(additivity);
        let orientation = (|| {
            let residual =
                check_orientation(&context, run.start_segment, run.segment_count, &field)
                    .map_err(|e| format!("trial {i}: {e}"))?;
            if !residual.is_zero() {
                return Err(format!(
                    "trial {i}: reversal residual {residual} on {:?}",
                    context.vertices()
                ));
            }
            Ok(())
        })();
        report.record(orientation);
    }
    report
}

/// Checks the two-run decomposition identity on random closed rectilinear
/// boundaries; unsupported decompositions (chord retracing an axis run
/// head-on) are regenerated rather than counted.
pub fn suite_lemma(trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("lemma");
    let mut produced = 0u64;
    let mut attempts = 0u64;
    let attempt_cap = trials.saturating_mul(50).max(50);
    while produced < trials && attempts < attempt_cap {
        attempts += 1;
        let grid = random_int_grid(&mut rng, 64, 64);
        let boundary = random_lemma_boundary(&mut rng);
        let outcome = match ScalarField::from_grid_i64(grid)
            .map_err(SlantedError::from)
            .and_then(|field| check_lemma_decomposition(&boundary, &field))
        {
            Err(SlantedError::UnsupportedDecomposition(_)) => continue,
            Err(e) => Err(format!("decomposition {produced}: {e}")),
            Ok(residual) if residual.is_zero() => Ok(()),
            Ok(residual) => Err(format!(
                "decomposition {produced}: residual {residual} on {:?}",
                boundary.vertices()
            )),
        };
        produced += 1;
        report.record(outcome);
    }
    if produced < trials {
        report.record(Err(format!(
            "generator produced only {produced} of {trials} supported decompositions"
        )));
    }
    report
}

/// Checks the semi-discrete fundamental theorem and the trend-value, Rolle,
/// Fermat, and Darboux analogues on random piecewise-linear functions.
pub fn suite_appb(trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("appB");
    for i in 0..trials {
        let ftc = (|| {
            let f = random_sloped_pwl(&mut rng, 20);
            let (a, b) = owned_domain(&f);
            let rep = f
                .semi_discrete_ftc(&a, &b)
                .map_err(|e| format!("ftc trial {i}: {e}"))?;
            if !num_traits::Zero::is_zero(&rep.residual) {
                return Err(format!(
                    "ftc trial {i}: residual {} on {:?}",
                    rep.residual,
                    f.breakpoints()
                ));
            }
            Ok(())
        })();
        report.record(ftc);

        let trend = (|| {
            let f = loop {
                let f = random_sloped_pwl(&mut rng, 12);
                if f.values().first() != f.values().last() {
                    break f;
                }
            };
            let (a, b) = owned_domain(&f);
            let fa = f.values().first().unwrap().clone();
            let fb = f.values().last().unwrap().clone();
            let v = (&fa + &fb) * BigRational::new(1.into(), 2.into());
            let target: i8 = if fb > fa { 1 } else { -1 };
            let witnesses = f
                .trend_value_witnesses(&a, &b, &v)
                .map_err(|e| format!("trend trial {i}: {e}"))?;
            if witnesses.is_empty() {
                return Err(format!(
                    "trend trial {i}: no witness on {:?}",
                    f.breakpoints()
                ));
            }
            for c in &witnesses {
                let level_ok = f.eval(c).map_err(|e| format!("trend trial {i}: {e}"))? == v;
                let tendency_ok =
                    f.tendency(c).map_err(|e| format!("trend trial {i}: {e}"))? == target;
                if !level_ok || !tendency_ok {
                    return Err(format!("trend trial {i}: witness {c} fails re-evaluation"));
                }
            }
            Ok(())
        })();
        report.record(trend);

        let rolle = (|| {
            let f = random_closed_loop_pwl(&mut rng);
            let (a, b) = owned_domain(&f);
            let c = f
                .rolle_witness(&a, &b)
                .map_err(|e| format!("rolle trial {i}: {e}"))?;
            let tendency = f
                .tendency(&c)
                .map_err(|e| format!("rolle trial {i}: {e}"))?;
            if tendency != 0 || c <= a || c >= b {
                return Err(format!("rolle trial {i}: bad witness {c}"));
            }
            Ok(())
        })();
        report.record(rolle);

        let (f, index) = random_pwl_with_strict_extremum(&mut rng);
        let x0 = f.breakpoints()[index].clone();
        let fermat = (|| {
            let holds = f
                .fermat_check(&x0)
                .map_err(|e| format!("fermat trial {i}: {e}"))?;
            if !holds {
                return Err(format!(
                    "fermat trial {i}: nonzero tendency at extremum {x0}"
                ));
            }
            Ok(())
        })();
        report.record(fermat);

        let darboux = (|| {
            let xs = f.breakpoints();
            let left = &xs[index] - &xs[index - 1];
            let right = &xs[index + 1] - &xs[index];
            let radius = left.min(right) * BigRational::new(1.into(), 2.into());
            let image = f
                .darboux_image(&x0, &radius)
                .map_err(|e| format!("darboux trial {i}: {e}"))?;
            let expected: std::collections::BTreeSet<i8> = [-1, 0, 1].into_iter().collect();
            if image != expected {
                return Err(format!("darboux trial {i}: image {image:?} at {x0}"));
            }
            Ok(())
        })();
        report.record(darboux);
    }
    report
}

/// Runs the four fixed naive-definition witnesses on random strictly positive
/// grids: all four violations must appear and all four corrected checks must
/// hold, every time.
pub fn suite_appc(trials: u64, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("appC");
    for i in 0..trials {
        let outcome = (|| {
            let values: Vec<i64> = (0..36).map(|_| rng.gen_range(1..=50)).collect();
            let grid =
                GridFunction::from_values(6, 6, values).map_err(|e| format!("trial {i}: {e}"))?;
            let field = ScalarField::from_grid_i64(grid).map_err(|e| format!("trial {i}: {e}"))?;
            let witnesses = naive_failure_suite(&field).map_err(|e| format!("trial {i}: {e}"))?;
            if !witnesses.all_violations_exhibited() {
                return Err(format!("trial {i}: naive violation missing: {witnesses:?}"));
            }
            if !witnesses.all_corrections_hold() {
                return Err(format!("trial {i}: corrected check failed: {witnesses:?}"));
            }
            Ok(())
        })();
        report.record(outcome);
    }
    report
}

/// One timing row of the benchmark report.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub size: usize,
    pub method: &'static str,
    pub total_ns: u128,
    pub ns_per_query: f64,
}

/// Times random rectangle queries answered by the summed-area table against
/// direct summation, per grid size. Every answer is cross-checked; a mismatch
/// aborts the benchmark. Query sides are drawn log-uniformly so the workload
/// spans areas from single cells to large blocks.
pub fn bench_rect_queries(
    sizes: &[usize],
    queries: u64,
    seed: u64,
) -> Result<Vec<BenchRow>, String> {
    let mut rows = Vec::new();
    for &size in sizes {
        if size == 0 {
            return Err("grid size must be positive".into());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (size as u64).rotate_left(17));
        let values: Vec<i64> = (0..size * size).map(|_| rng.gen_range(0..=255)).collect();
        let grid = GridFunction::from_values(size, size, values).map_err(|e| e.to_string())?;
        let sat = build_sat(&grid).map_err(|e| e.to_string())?;
        let boxes: Vec<CellBox> = (0..queries)
            .map(|_| random_cell_box_log(&mut rng, size as i64))
            .collect();

        let started = Instant::now();
        let mut sat_answers = Vec::with_capacity(boxes.len());
        for b in &boxes {
            sat_answers.push(sat.rect_sum(*b).map_err(|e| e.to_string())?);
        }
        let sat_ns = started.elapsed().as_nanos();

        let started = Instant::now();
        let mut direct_answers = Vec::with_capacity(boxes.len());
        for b in &boxes {
            direct_answers
                .push(oracle::brute_region_sum(b.cells(), &grid).map_err(|e| e.to_string())?);
        }
        let direct_ns = started.elapsed().as_nanos();

        if sat_answers != direct_answers {
            return Err(format!("answer mismatch on {size}x{size} grid"));
        }
        rows.push(BenchRow {
            size,
            method: "sat",
            total_ns: sat_ns,
            ns_per_query: sat_ns as f64 / queries as f64,
        });
        rows.push(BenchRow {
            size,
            method: "naive",
            total_ns: direct_ns,
            ns_per_query: direct_ns as f64 / queries as f64,
        });
    }
    Ok(rows)
}

/// A random cell box with uniformly random corners inside a `width`×`height`
/// grid.
pub fn random_cell_box(rng: &mut ChaCha8Rng, width: i64, height: i64) -> CellBox {
    let x0 = rng.gen_range(0..width);
    let x1 = rng.gen_range(x0..width);
    let y0 = rng.gen_range(0..height);
    let y1 = rng.gen_range(y0..height);
    CellBox::new(x0, y0, x1, y1)
}

/// A random cell box whose side lengths are log-uniform in `[1, size]`.
pub fn random_cell_box_log(rng: &mut ChaCha8Rng, size: i64) -> CellBox {
    let max_pow = 63 - (size as u64).leading_zeros();
    let side = |rng: &mut ChaCha8Rng| {
        let pow = rng.gen_range(0..=max_pow);
        let lo = 1i64 << pow;
        let hi = (lo * 2 - 1).min(size);
        rng.gen_range(lo..=hi)
    };
    let w = side(rng);
    let h = side(rng);
    let x0 = rng.gen_range(0..=size - w);
    let y0 = rng.gen_range(0..=size - h);
    CellBox::new(x0, y0, x0 + w - 1, y0 + h - 1)
}

/// A random grid of integers in [−100, 100].
pub fn random_int_grid(rng: &mut ChaCha8Rng, width: usize, height: usize) -> GridFunction<i64> {
    let values = (0..width * height)
        .map(|_| rng.gen_range(-100..=100))
        .collect();
    GridFunction::from_values(width, height, values).expect("nonempty grid dimensions")
}

/// A random simple closed counterclockwise rectilinear boundary fitting in
/// a 64×64 grid, drawn from five shape families: staircase bands, L, T, and
/// Z shapes, and histogram outlines.
pub fn random_rectilinear_boundary(rng: &mut ChaCha8Rng) -> LatticePolyline {
    let vertices = match rng.gen_range(0..5) {
        0 => band_vertices(rng),
        1 => l_vertices(rng),
        2 => t_vertices(rng),
        3 => z_vertices(rng),
        _ => histogram_vertices(rng),
    };
    let vertices = translate_into(rng, vertices, 64);
    let curve = LatticePolyline::closed(vertices, SegmentMode::Rectilinear)
        .expect("generated boundary is simple by construction");
    debug_assert!(curve.signed_area_doubled() > 0);
    curve
}

/// A random boundary from the families with at least three monotone runs,
/// suitable for the two-run decomposition.
fn random_lemma_boundary(rng: &mut ChaCha8Rng) -> LatticePolyline {
    let vertices = match rng.gen_range(0..4) {
        0 => l_vertices(rng),
        1 => t_vertices(rng),
        2 => z_vertices(rng),
        _ => histogram_vertices(rng),
    };
    let vertices = translate_into(rng, vertices, 64);
    LatticePolyline::closed(vertices, SegmentMode::Rectilinear)
        .expect("generated boundary is simple by construction")
}

/// A context curve plus one of its multi-segment staircase runs: either an
/// open monotone staircase (the run is the whole curve) or a closed band
/// (one of its two staircase runs).
fn random_claims_target(rng: &mut ChaCha8Rng) -> (LatticePolyline, RunSpan) {
    if rng.gen_bool(0.5) {
        let curve = random_open_staircase(rng);
        let run = curve.uniform_division().runs()[0];
        (curve, run)
    } else {
        let band = band_vertices(rng);
        let vertices = translate_into(rng, band, 64);
        let curve = LatticePolyline::closed(vertices, SegmentMode::Rectilinear)
            .expect("generated band is simple by construction");
        let run = {
            let division = curve.uniform_division();
            let staircases: Vec<RunSpan> = division
                .runs()
                .iter()
                .filter(|r| !r.is_axis() && r.segment_count >= 2)
                .copied()
                .collect();
            *staircases
                .choose(rng)
                .expect("a band has two staircase runs")
        };
        (curve, run)
    }
}

/// A random open monotone staircase with unit steps, at least two segments,
/// in one of the four diagonal direction classes.
fn random_open_staircase(rng: &mut ChaCha8Rng) -> LatticePolyline {
    let sx: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
    let sy: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
    let horizontal = rng.gen_range(1..=10);
    let vertical = rng.gen_range(1..=10);
    let mut steps: Vec<(i64, i64)> = Vec::new();
    steps.extend(std::iter::repeat_n((sx, 0), horizontal));
    steps.extend(std::iter::repeat_n((0, sy), vertical));
    steps.shuffle(rng);
    let mut vertices = vec![point(0, 0)];
    for (dx, dy) in steps {
        let last = *vertices.last().unwrap();
        vertices.push(point(last.x + dx, last.y + dy));
    }
    let vertices = translate_into(rng, vertices, 64);
    LatticePolyline::open(vertices, SegmentMode::Rectilinear)
        .expect("a monotone staircase is simple")
}

/// Lower staircase from (0,0), right edge up, the same staircase shifted
/// upward, left edge down: a simple band whenever the shift exceeds the
/// longest vertical run.
fn band_vertices(rng: &mut ChaCha8Rng) -> Vec<Point> {
    let east = rng.gen_range(2..=18);
    let north = rng.gen_range(1..=12);
    let mut middle: Vec<(i64, i64)> = Vec::new();
    middle.extend(std::iter::repeat_n((1i64, 0i64), east - 2));
    middle.extend(std::iter::repeat_n((0i64, 1i64), north));
    middle.shuffle(rng);
    let mut steps = vec![(1, 0)];
    steps.extend(middle);
    steps.push((1, 0));

    let mut lower = vec![point(0, 0)];
    for (dx, dy) in &steps {
        let last = *lower.last().unwrap();
        lower.push(point(last.x + dx, last.y + dy));
    }
    let mut max_vertical_run = 0i64;
    let mut current = 0i64;
    for (_, dy) in &steps {
        current = if *dy == 1 { current + 1 } else { 0 };
        max_vertical_run = max_vertical_run.max(current);
    }
    let shift = max_vertical_run + rng.gen_range(1..=3);

    let top = *lower.last().unwrap();
    let mut vertices = lower.clone();
    vertices.push(point(top.x, top.y + shift));
    for p in lower[1..lower.len() - 1].iter().rev() {
        vertices.push(point(p.x, p.y + shift));
    }
    vertices.push(point(0, shift));
    vertices
}

fn l_vertices(rng: &mut ChaCha8Rng) -> Vec<Point> {
    let a = rng.gen_range(2..=24);
    let d = rng.gen_range(2..=24);
    let c = rng.gen_range(1..a);
    let b = rng.gen_range(1..d);
    vec![
        point(0, 0),
        point(a, 0),
        point(a, b),
        point(c, b),
        point(c, d),
        point(0, d),
    ]
}

fn t_vertices(rng: &mut ChaCha8Rng) -> Vec<Point> {
    let a = rng.gen_range(3..=24);
    let b = rng.gen_range(1..=10);
    let d = b + rng.gen_range(1..=10);
    let c = rng.gen_range(1..a - 1);
    let e = rng.gen_range(c + 1..a);
    vec![
        point(0, 0),
        point(a, 0),
        point(a, b),
        point(e, b),
        point(e, d),
        point(c, d),
        point(c, b),
        point(0, b),
    ]
}

fn z_vertices(rng: &mut ChaCha8Rng) -> Vec<Point> {
    let a = rng.gen_range(2..=24);
    let q = rng.gen_range(1..=7);
    let s = q + rng.gen_range(1..=7);
    let d = s + rng.gen_range(1..=7);
    let p = rng.gen_range(1..a);
    let r = rng.gen_range(1..a);
    vec![
        point(0, 0),
        point(p, 0),
        point(p, q),
        point(a, q),
        point(a, d),
        point(r, d),
        point(r, s),
        point(0, s),
    ]
}

fn histogram_vertices(rng: &mut ChaCha8Rng) -> Vec<Point> {
    let width = rng.gen_range(2..=12);
    let heights: Vec<i64> = (0..width).map(|_| rng.gen_range(1..=8)).collect();
    let w = width as i64;
    let mut vertices = vec![point(0, 0), point(w, 0), point(w, heights[width - 1])];
    for i in (1..width).rev() {
        if heights[i - 1] != heights[i] {
            vertices.push(point(i as i64, heights[i]));
            vertices.push(point(i as i64, heights[i - 1]));
        }
    }
    vertices.push(point(0, heights[0]));
    vertices
}

/// Shifts a vertex list by a random nonnegative offset so it still fits in
/// `[0, extent]²`.
fn translate_into(rng: &mut ChaCha8Rng, vertices: Vec<Point>, extent: i64) -> Vec<Point> {
    let min_x = vertices.iter().map(|p| p.x).min().unwrap();
    let max_x = vertices.iter().map(|p| p.x).max().unwrap();
    let min_y = vertices.iter().map(|p| p.y).min().unwrap();
    let max_y = vertices.iter().map(|p| p.y).max().unwrap();
    let dx = rng.gen_range(-min_x..=extent - max_x);
    let dy = rng.gen_range(-min_y..=extent - max_y);
    vertices
        .into_iter()
        .map(|p| point(p.x + dx, p.y + dy))
        .collect()
}

/// A random polynomial of degree ≤ 3 in each variable with integer
/// coefficients in [−4, 4], roughly half of them zero.
fn random_poly(rng: &mut ChaCha8Rng) -> BivariatePoly {
    let mut terms = Vec::new();
    for m in 0..=3u32 {
        for n in 0..=3u32 {
            if rng.gen_bool(0.5) {
                let c = rng.gen_range(-4..=4i64);
                if c != 0 {
                    terms.push((c, m, n));
                }
            }
        }
    }
    BivariatePoly::from_int_terms(&terms).expect("degrees bounded by construction")
}

/// A random simple closed region bounded below and above by x-monotone
/// polylines sharing their endpoints, counterclockwise.
fn random_monotone_region(rng: &mut ChaCha8Rng) -> LatticePolyline {
    loop {
        let interior = rng.gen_range(1..=5);
        let mut xs = vec![rng.gen_range(-6..=0)];
        for _ in 0..interior + 1 {
            let step = rng.gen_range(1..=3);
            let last = *xs.last().unwrap();
            xs.push(last + step);
        }
        let start_y = rng.gen_range(-4..=4);
        let end_y = rng.gen_range(-4..=4);
        let mut lower = vec![point(xs[0], start_y)];
        let mut upper = vec![point(xs[0], start_y)];
        for &x in &xs[1..=interior] {
            let lo = rng.gen_range(-6..=4);
            let hi = lo + rng.gen_range(1..=5);
            lower.push(point(x, lo));
            upper.push(point(x, hi));
        }
        lower.push(point(xs[interior + 1], end_y));
        upper.push(point(xs[interior + 1], end_y));
        let mut vertices = lower;
        vertices.extend(upper[1..=interior].iter().rev().copied());
        if let Ok(curve) = LatticePolyline::closed(vertices, SegmentMode::Monotone) {
            if curve.signed_area_doubled() > 0 {
                return curve;
            }
        }
    }
}

/// A random piecewise-linear function with integer breakpoints, no flat
/// piece, and at most `max_breakpoints` breakpoints.
fn random_sloped_pwl(rng: &mut ChaCha8Rng, max_breakpoints: usize) -> PiecewiseLinearFunction {
    let n = rng.gen_range(2..=max_breakpoints);
    let mut points = Vec::with_capacity(n);
    let mut x = rng.gen_range(-10..=0i64);
    let mut y = rng.gen_range(-10..=10i64);
    points.push((x, y));
    for _ in 1..n {
        x += rng.gen_range(1..=4);
        let dy = loop {
            let dy = rng.gen_range(-6..=6i64);
            if dy != 0 {
                break dy;
            }
        };
        y += dy;
        points.push((x, y));
    }
    PiecewiseLinearFunction::from_int_points(&points).expect("breakpoints strictly increase")
}

/// A random piecewise-linear function whose endpoint values match (flat
/// pieces allowed).
fn random_closed_loop_pwl(rng: &mut ChaCha8Rng) -> PiecewiseLinearFunction {
    let n = rng.gen_range(2..=12);
    let mut points: Vec<(i64, i64)> = Vec::with_capacity(n);
    let mut x = rng.gen_range(-10..=0i64);
    let first_y = rng.gen_range(-10..=10i64);
    points.push((x, first_y));
    for i in 1..n {
        x += rng.gen_range(1..=4);
        let y = if i == n - 1 {
            first_y
        } else {
            rng.gen_range(-10..=10)
        };
        points.push((x, y));
    }
    PiecewiseLinearFunction::from_int_points(&points).expect("breakpoints strictly increase")
}

/// A random non-flat piecewise-linear function with at least one strict
/// interior extremum, plus the breakpoint index of one such extremum.
fn random_pwl_with_strict_extremum(rng: &mut ChaCha8Rng) -> (PiecewiseLinearFunction, usize) {
    for _ in 0..1000 {
        let f = random_sloped_pwl(rng, 12);
        let ys = f.values();
        if ys.len() < 3 {
            continue;
        }
        let extrema: Vec<usize> = (1..ys.len() - 1)
            .filter(|&i| {
                (ys[i] > ys[i - 1] && ys[i] > ys[i + 1]) || (ys[i] < ys[i - 1] && ys[i] < ys[i + 1])
            })
            .collect();
        if let Some(&index) = extrema.as_slice().choose(rng) {
            return (f, index);
        }
    }
    unreachable!("random sloped functions produce strict extrema")
}

fn owned_domain(f: &PiecewiseLinearFunction) -> (BigRational, BigRational) {
    let (a, b) = f.domain();
    (a.clone(), b.clone())
}
