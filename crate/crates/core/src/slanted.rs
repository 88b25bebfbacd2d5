//! Slanted line integrals over monotone runs and the region-integration
//! theorem they support.
//!
//! A monotone run `γ` inside a curve `Γ` contributes
//!
//! ```text
//! ∬_{D⁺(γ)} f  −  τ(γ)·F(B)  +  ½·[τ_Γ(A)·F(A) + τ_Γ(C)·F(C)]
//! ```
//!
//! where `D⁺(γ)` is the run's positive domain (the region between the run and
//! its two axis lines, on the left-hand side of travel), `B` the corner vertex
//! closing that region, `A`/`C` the run's endpoints, `τ` the run tendency and
//! `τ_Γ` the context tendency at a vertex. Summing over a uniform division
//! integrates the whole curve; on a simple closed counterclockwise boundary
//! the total equals the integral of the field over the enclosed region.
//!
//! The module also ships the deliberately broken "naive" variant — the plain
//! per-run region sum with no tendency or corner corrections — together with
//! the checks that demonstrate where it fails and the full definition holds.

use thiserror::Error;

use crate::curve::{run_tendency, CurveError, Division, LatticePolyline, SegmentMode};
use crate::grid::{build_sat, CellBox, GridError, GridFunction, SummedAreaTable};
use crate::oracle::{self, OracleError};
use crate::poly::{rational_from_i64, BivariatePoly};
use crate::{point, BigRational, Point, Scalar};

/// Errors from slanted-integral evaluation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SlantedError {
    /// Grid lookup or accumulation failure (out-of-range vertex, overflow).
    #[error(transparent)]
    Grid(#[from] GridError),
    /// Invalid curve input.
    #[error(transparent)]
    Curve(#[from] CurveError),
    /// Brute-force reference failure while building a comparison value.
    #[error(transparent)]
    Oracle(#[from] OracleError),
    /// Region integration requires a closed boundary.
    #[error("the boundary must be a closed polyline")]
    NotClosed,
    /// Region integration requires counterclockwise orientation.
    #[error("the boundary must be positively oriented (counterclockwise)")]
    NotPositivelyOriented,
    /// The segment span does not select a sub-curve of the context.
    #[error("segments [{start}, {start}+{count}) do not form a sub-curve of the context")]
    SpanOutOfRange { start: usize, count: usize },
    /// The selected sub-curve changes direction sign along an axis.
    #[error("the selected sub-curve is not monotone")]
    NotMonotone,
    /// Grid fields integrate rectilinear (axis-parallel staircase) curves
    /// only; diagonal segments need the polynomial field.
    #[error("grid fields integrate rectilinear curves only")]
    NotRectilinearForGrid,
    /// The additivity check needs a split strictly inside the sub-curve.
    #[error("split offset {0} is not interior to the sub-curve")]
    SplitNotInterior(usize),
    /// The orientation check is stated for runs of nonzero tendency.
    #[error("the orientation check requires a run with nonzero tendency")]
    ZeroTendencyRun,
    /// The two-run decomposition could not be built for this curve.
    #[error("unsupported decomposition: {0}")]
    UnsupportedDecomposition(String),
}

/// A field to integrate: an integer grid, a float grid (each carrying its
/// summed-area table), or a bivariate polynomial with closed-form double
/// antiderivative.
// Fields are built once and passed by reference; boxing the polynomial
// variant to level the sizes would only complicate matching.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum ScalarField {
    /// Integer cells; every result is an exact half-integer.
    GridInt {
        grid: GridFunction<i64>,
        sat: SummedAreaTable<i64>,
    },
    /// Float cells; results are compensated `f64`.
    GridFloat {
        grid: GridFunction<f64>,
        sat: SummedAreaTable<f64>,
    },
    /// Bivariate polynomial, degree ≤ 3 per variable; results are exact
    /// rationals.
    Polynomial(BivariatePoly),
}

impl ScalarField {
    /// Wraps an integer grid, precomputing its summed-area table.
    pub fn from_grid_i64(grid: GridFunction<i64>) -> Result<Self, GridError> {
        let sat = build_sat(&grid)?;
        Ok(ScalarField::GridInt { grid, sat })
    }

    /// Wraps a float grid, precomputing its summed-area table.
    pub fn from_grid_f64(grid: GridFunction<f64>) -> Result<Self, GridError> {
        let sat = build_sat(&grid)?;
        Ok(ScalarField::GridFloat { grid, sat })
    }

    /// Wraps a polynomial field.
    pub fn from_polynomial(poly: BivariatePoly) -> Self {
        ScalarField::Polynomial(poly)
    }

    /// The antiderivative `F` at a lattice vertex: the cumulative sum below
    /// and left of the vertex in grid mode, the closed-form double
    /// antiderivative in polynomial mode.
    pub fn antiderivative(&self, v: Point) -> Result<Scalar, SlantedError> {
        match self {
            ScalarField::GridInt { sat, .. } => {
                Ok(Scalar::ExactHalves(2 * sat.vertex_sum(v.x, v.y)?))
            }
            ScalarField::GridFloat { sat, .. } => Ok(Scalar::Float(sat.vertex_sum(v.x, v.y)?)),
            ScalarField::Polynomial(f) => Ok(Scalar::Rational(f.antiderivative_at_vertex(v))),
        }
    }
}

/// The positive domain `D⁺` of a monotone run: the region enclosed by the run
/// and the two axis-parallel lines through its endpoints, lying on the
/// left-hand side of the run's direction of travel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveDomainResult {
    /// Start vertex of the run.
    pub a: Point,
    /// The corner vertex where the two axis lines meet; equals `c` for
    /// degenerate (axis-parallel) runs by convention.
    pub b: Point,
    /// End vertex of the run.
    pub c: Point,
    /// True for axis-parallel runs, whose region is empty.
    pub degenerate: bool,
    /// Counterclockwise vertex cycle of the region; empty when degenerate.
    pub polygon: Vec<Point>,
    /// Disjoint cell boxes tiling the region when the run is rectilinear;
    /// empty when degenerate or when the run has diagonal segments.
    pub rectangles: Vec<CellBox>,
    /// True when every segment of the run is axis-parallel.
    pub rectilinear: bool,
}

/// Computes the positive domain of a monotone vertex chain.
///
/// The corner `B` is the one of `(A.x, C.y)` and `(C.x, A.y)` on the left of
/// the directed chord `A→C` (positive cross product); axis-parallel runs are
/// degenerate with an empty region and `B = C`.
pub fn positive_domain(run: &[Point]) -> Result<PositiveDomainResult, SlantedError> {
    if run.len() < 2 {
        return Err(SlantedError::Curve(CurveError::TooFewVertices {
            min: 2,
            got: run.len(),
        }));
    }
    positive_domain_with_class(run, span_signature(run)?)
}

/// The positive domain of a vertex chain evaluated as a sub-curve of a run
/// with direction class `class`. An axis-parallel chain inside a diagonal
/// run keeps a nontrivial corner `B` (the class-side corner of its bounding
/// box, which collapses onto the chain); standalone axis-parallel runs use
/// the `B = C` convention.
pub(crate) fn positive_domain_with_class(
    run: &[Point],
    class: (i8, i8),
) -> Result<PositiveDomainResult, SlantedError> {
    if run.len() < 2 {
        return Err(SlantedError::Curve(CurveError::TooFewVertices {
            min: 2,
            got: run.len(),
        }));
    }
    let a = run[0];
    let c = run[run.len() - 1];
    let rectilinear = run.windows(2).all(|w| w[0].x == w[1].x || w[0].y == w[1].y);
    if class.0 == 0 || class.1 == 0 {
        return Ok(PositiveDomainResult {
            a,
            b: c,
            c,
            degenerate: true,
            polygon: Vec::new(),
            rectangles: Vec::new(),
            rectilinear,
        });
    }
    // The corner on the left of the class direction: north-east and
    // south-west travel keep `(A.x, C.y)`, the other diagonals `(C.x, A.y)`.
    // For non-degenerate chains this agrees with the cross-product rule.
    let b = if class.0 == class.1 {
        point(a.x, c.y)
    } else {
        point(c.x, a.y)
    };
    let degenerate = a.x == c.x || a.y == c.y;
    debug_assert!(degenerate || cross(a, c, b) > 0);
    if degenerate {
        return Ok(PositiveDomainResult {
            a,
            b,
            c,
            degenerate: true,
            polygon: Vec::new(),
            rectangles: Vec::new(),
            rectilinear,
        });
    }
    let mut polygon: Vec<Point> = run.to_vec();
    polygon.push(b);
    if shoelace_doubled(&polygon) < 0 {
        polygon.reverse();
    }
    let mut rectangles = Vec::new();
    if rectilinear {
        // Each horizontal step of the staircase spans a column range; the
        // cells of the region fill those columns between the step's height
        // and the axis line through B.
        for w in run.windows(2) {
            if w[0].y == w[1].y {
                let (x0, x1) = (w[0].x.min(w[1].x), w[0].x.max(w[1].x));
                let (y0, y1) = (w[0].y.min(b.y), w[0].y.max(b.y));
                if x1 > x0 && y1 > y0 {
                    rectangles.push(CellBox::new(x0, y0, x1 - 1, y1 - 1));
                }
            }
        }
    }
    Ok(PositiveDomainResult {
        a,
        b,
        c,
        degenerate: false,
        polygon,
        rectangles,
        rectilinear,
    })
}

/// The slanted integral of one monotone sub-curve of `context`, selected as
/// `segment_count` consecutive segments starting at `start_segment` (wrapping
/// on closed curves). Endpoint tendencies come from the context's uniform
/// division, so the value depends on where the sub-curve sits inside the
/// whole curve.
pub fn slanted_uniform(
    context: &LatticePolyline,
    start_segment: usize,
    segment_count: usize,
    field: &ScalarField,
) -> Result<Scalar, SlantedError> {
    let division = context.uniform_division();
    uniform_value(&division, start_segment, segment_count, field)
}

/// The slanted integral of a whole curve: the sum of the per-run values over
/// its uniform division.
pub fn slanted_integral(
    curve: &LatticePolyline,
    field: &ScalarField,
) -> Result<Scalar, SlantedError> {
    let division = curve.uniform_division();
    let mut total = Scalar::ZERO;
    for run in division.runs() {
        total = total + uniform_value(&division, run.start_segment, run.segment_count, field)?;
    }
    Ok(total)
}

/// Integrates the field over the region enclosed by a simple closed
/// counterclockwise boundary, by evaluating the boundary's slanted integral.
pub fn region_integral(
    boundary: &LatticePolyline,
    field: &ScalarField,
) -> Result<Scalar, SlantedError> {
    if !boundary.is_closed() {
        return Err(SlantedError::NotClosed);
    }
    if boundary.signed_area_doubled() <= 0 {
        return Err(SlantedError::NotPositivelyOriented);
    }
    slanted_integral(boundary, field)
}

/// The flawed per-run definition kept for demonstration: each run contributes
/// only the plain region integral over its positive domain, with no tendency
/// weight and no endpoint corrections. See [`naive_failure_suite`] for the
/// four ways this breaks.
pub fn naive_integral(
    curve: &LatticePolyline,
    field: &ScalarField,
) -> Result<Scalar, SlantedError> {
    let division = curve.uniform_division();
    let mut total = Scalar::ZERO;
    for index in 0..division.len() {
        let domain = positive_domain(&division.run_vertices(index))?;
        total = total + region_value(&domain, field)?;
    }
    Ok(total)
}

/// The brute-force reference value for the region enclosed by a simple closed
/// counterclockwise boundary: rasterization plus direct summation in grid
/// mode, exact polygon integration in polynomial mode. Shares no code with
/// the summed-area-table pipeline.
pub fn oracle_region_value(
    boundary: &LatticePolyline,
    field: &ScalarField,
) -> Result<Scalar, SlantedError> {
    match field {
        ScalarField::GridInt { grid, .. } => {
            let cells = oracle::rasterize(boundary)?;
            Ok(Scalar::ExactHalves(
                2 * oracle::brute_region_sum(cells, grid)?,
            ))
        }
        ScalarField::GridFloat { grid, .. } => {
            let cells = oracle::rasterize(boundary)?;
            Ok(Scalar::Float(oracle::brute_region_sum(cells, grid)?))
        }
        ScalarField::Polynomial(f) => Ok(Scalar::Rational(oracle::polygon_integral(
            f,
            boundary.vertices(),
        ))),
    }
}

/// Splits the sub-curve at an interior vertex and returns
/// `value(whole) − value(first part) − value(second part)`; zero whenever the
/// definition is consistent.
pub fn check_additivity(
    context: &LatticePolyline,
    start_segment: usize,
    segment_count: usize,
    split_offset: usize,
    field: &ScalarField,
) -> Result<Scalar, SlantedError> {
    if split_offset == 0 || split_offset >= segment_count {
        return Err(SlantedError::SplitNotInterior(split_offset));
    }
    let division = context.uniform_division();
    let whole = uniform_value(&division, start_segment, segment_count, field)?;
    let first = uniform_value(&division, start_segment, split_offset, field)?;
    let second = uniform_value(
        &division,
        start_segment + split_offset,
        segment_count - split_offset,
        field,
    )?;
    Ok(whole - (first + second))
}

/// Evaluates the sub-curve forward in its context and backward in the
/// reversed context and returns the sum; zero whenever the definition is
/// orientation-antisymmetric. Requires a run of nonzero tendency.
pub fn check_orientation(
    context: &LatticePolyline,
    start_segment: usize,
    segment_count: usize,
    field: &ScalarField,
) -> Result<Scalar, SlantedError> {
    let vertices = span_vertices(context, start_segment, segment_count)?;
    let division = context.uniform_division();
    if run_tendency(resolve_class(
        &division,
        start_segment,
        segment_count,
        &vertices,
    )?) == 0
    {
        return Err(SlantedError::ZeroTendencyRun);
    }
    let forward = slanted_uniform(context, start_segment, segment_count, field)?;
    let m = context.segment_count();
    let reversed_start = if context.is_closed() {
        (2 * m - 1 - start_segment % m - segment_count) % m
    } else {
        m - start_segment - segment_count
    };
    let backward = slanted_uniform(&context.reversed(), reversed_start, segment_count, field)?;
    Ok(forward + backward)
}

/// Decomposes a closed counterclockwise curve along its first two runs:
/// `Δ` closes those runs with a staircase chord back to their start, and the
/// complement closes the remaining runs with the same chord forward. Returns
/// `value(curve) − value(complement) − value(Δ)`; zero whenever the
/// definition decomposes consistently.
///
/// The chord may run back along existing geometry (the intermediate curves
/// are only weakly simple); decompositions whose chord retraces an axis run
/// head-on are rejected as unsupported.
pub fn check_lemma_decomposition(
    curve: &LatticePolyline,
    field: &ScalarField,
) -> Result<Scalar, SlantedError> {
    if !curve.is_closed() {
        return Err(SlantedError::NotClosed);
    }
    if curve.signed_area_doubled() <= 0 {
        return Err(SlantedError::NotPositivelyOriented);
    }
    let division = curve.uniform_division();
    if division.len() < 3 {
        return Err(SlantedError::UnsupportedDecomposition(format!(
            "need at least three runs, found {}",
            division.len()
        )));
    }
    // Lead path M→O through the first two runs; rest path O→M through the
    // remaining runs.
    let mut lead = division.run_vertices(0);
    lead.extend_from_slice(&division.run_vertices(1)[1..]);
    let mut rest = division.run_vertices(2);
    for index in 3..division.len() {
        rest.extend_from_slice(&division.run_vertices(index)[1..]);
    }
    let m_vertex = lead[0];
    let o_vertex = *lead.last().unwrap();
    let chord = staircase_chord(m_vertex, o_vertex);
    let mut chord_reversed = chord.clone();
    chord_reversed.reverse();

    let total = slanted_integral(curve, field)?;

    // Δ = lead + chord backward. When the chord coincides with the lead path
    // the two retrace each other and Δ vanishes.
    let delta_value = if chord == lead {
        Scalar::ZERO
    } else {
        let mut vertices = lead.clone();
        vertices.extend_from_slice(&chord_reversed[1..chord_reversed.len() - 1]);
        let delta = closed_decomposition_curve(vertices, curve.mode())?;
        slanted_integral(&delta, field)?
    };

    // Complement = rest + chord forward; it vanishes when the rest path
    // retraces the chord.
    let complement_value = if rest == chord_reversed {
        Scalar::ZERO
    } else {
        let mut vertices = rest.clone();
        vertices.extend_from_slice(&chord[1..chord.len() - 1]);
        let complement = closed_decomposition_curve(vertices, curve.mode())?;
        slanted_integral(&complement, field)?
    };

    Ok(total - complement_value - delta_value)
}

/// Report of the four documented failures of the naive per-run region sum,
/// paired with the same four checks passing under the complete definition.
/// Grid fields must cover at least `[0, 4] × [0, 4]` for the fixed witnesses;
/// a field that vanishes on the witness regions exhibits no violation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NaiveFailureReport {
    /// Splitting an L-shaped curve changes the naive value.
    pub naive_breaks_concatenation: bool,
    /// On a closed rectangle the naive value misses the enclosed sum.
    pub naive_breaks_region_identity: bool,
    /// Overlapping positive domains are counted twice by the naive sum.
    pub naive_double_counts_overlap: bool,
    /// Reversing a staircase run does not negate the naive value.
    pub naive_breaks_orientation: bool,
    /// The complete definition is split-invariant on the same witness.
    pub slanted_concatenation_holds: bool,
    /// The complete definition matches the oracle on the rectangle.
    pub slanted_region_identity_holds: bool,
    /// The complete definition matches the oracle despite the overlap.
    pub slanted_overlap_deduction_holds: bool,
    /// The complete definition negates under reversal.
    pub slanted_orientation_holds: bool,
}

impl NaiveFailureReport {
    /// True when all four naive violations are exhibited.
    pub fn all_violations_exhibited(&self) -> bool {
        self.naive_breaks_concatenation
            && self.naive_breaks_region_identity
            && self.naive_double_counts_overlap
            && self.naive_breaks_orientation
    }

    /// True when the complete definition passes all four checks.
    pub fn all_corrections_hold(&self) -> bool {
        self.slanted_concatenation_holds
            && self.slanted_region_identity_holds
            && self.slanted_overlap_deduction_holds
            && self.slanted_orientation_holds
    }
}

/// Runs the four fixed witnesses contrasting the naive per-run region sum
/// with the complete definition. See [`NaiveFailureReport`].
pub fn naive_failure_suite(field: &ScalarField) -> Result<NaiveFailureReport, SlantedError> {
    let rectilinear = SegmentMode::Rectilinear;

    // Witness 1: an L-shaped open curve is one monotone run, but cutting it
    // at the corner leaves two straight runs with empty positive domains.
    let l_curve = LatticePolyline::open(vec![point(0, 0), point(2, 0), point(2, 2)], rectilinear)?;
    let l_first = LatticePolyline::open(vec![point(0, 0), point(2, 0)], rectilinear)?;
    let l_second = LatticePolyline::open(vec![point(2, 0), point(2, 2)], rectilinear)?;
    let naive_whole = naive_integral(&l_curve, field)?;
    let naive_parts = naive_integral(&l_first, field)? + naive_integral(&l_second, field)?;
    let naive_breaks_concatenation = !scalars_match(&naive_whole, &naive_parts);
    let slanted_concatenation_holds =
        residual_is_zero(&check_additivity(&l_curve, 0, 2, 1, field)?);

    // Witness 2: all four sides of a rectangle are degenerate runs, so the
    // naive sum is zero regardless of the field.
    let rectangle = LatticePolyline::closed(
        vec![point(0, 0), point(3, 0), point(3, 2), point(0, 2)],
        rectilinear,
    )?;
    let rectangle_truth = oracle_region_value(&rectangle, field)?;
    let naive_breaks_region_identity =
        !scalars_match(&naive_integral(&rectangle, field)?, &rectangle_truth);
    let slanted_region_identity_holds =
        scalars_match(&region_integral(&rectangle, field)?, &rectangle_truth);

    // Witness 3: a closed band between two staircases whose positive domains
    // tile the full bounding box and overlap exactly on the interior, so the
    // naive sum counts the interior twice (plus everything outside).
    let band = LatticePolyline::closed(
        vec![
            point(4, 4),
            point(3, 4),
            point(3, 3),
            point(2, 3),
            point(2, 2),
            point(1, 2),
            point(1, 1),
            point(0, 1),
            point(0, 0),
            point(2, 0),
            point(2, 1),
            point(3, 1),
            point(3, 2),
            point(4, 2),
        ],
        rectilinear,
    )?;
    let band_truth = oracle_region_value(&band, field)?;
    let naive_double_counts_overlap = !scalars_match(&naive_integral(&band, field)?, &band_truth);
    let slanted_overlap_deduction_holds =
        scalars_match(&region_integral(&band, field)?, &band_truth);

    // Witness 4: a staircase keeps its naive value under reversal even
    // though the bounded region flips to the other side.
    let staircase = LatticePolyline::open(
        vec![
            point(0, 0),
            point(1, 0),
            point(1, 1),
            point(2, 1),
            point(2, 2),
        ],
        rectilinear,
    )?;
    let naive_sum =
        naive_integral(&staircase, field)? + naive_integral(&staircase.reversed(), field)?;
    let naive_breaks_orientation = !residual_is_zero(&naive_sum);
    let slanted_orientation_holds = residual_is_zero(&check_orientation(&staircase, 0, 4, field)?);

    Ok(NaiveFailureReport {
        naive_breaks_concatenation,
        naive_breaks_region_identity,
        naive_double_counts_overlap,
        naive_breaks_orientation,
        slanted_concatenation_holds,
        slanted_region_identity_holds,
        slanted_overlap_deduction_holds,
        slanted_orientation_holds,
    })
}

/// Evaluates the run value of one monotone span within a divided context.
fn uniform_value(
    division: &Division<'_>,
    start_segment: usize,
    segment_count: usize,
    field: &ScalarField,
) -> Result<Scalar, SlantedError> {
    let curve = division.curve();
    let vertices = span_vertices(curve, start_segment, segment_count)?;
    let class = resolve_class(division, start_segment, segment_count, &vertices)?;
    let tau = run_tendency(class) as i64;
    let domain = positive_domain_with_class(&vertices, class)?;
    let vertex_count = curve.vertices().len();
    let tau_a = division.tendency_at_vertex(start_segment % vertex_count) as i64;
    let tau_c = division.tendency_at_vertex((start_segment + segment_count) % vertex_count) as i64;

    match field {
        ScalarField::GridInt { sat, .. } => {
            let region = grid_region_i128(sat, &domain)?;
            let fa = sat.vertex_sum(domain.a.x, domain.a.y)?;
            let fc = sat.vertex_sum(domain.c.x, domain.c.y)?;
            let fb = sat.vertex_sum(domain.b.x, domain.b.y)?;
            let doubled =
                2 * region - 2 * tau as i128 * fb + tau_a as i128 * fa + tau_c as i128 * fc;
            Ok(Scalar::ExactHalves(doubled))
        }
        ScalarField::GridFloat { sat, .. } => {
            let region = grid_region_f64(sat, &domain)?;
            let fa = sat.vertex_sum(domain.a.x, domain.a.y)?;
            let fc = sat.vertex_sum(domain.c.x, domain.c.y)?;
            let fb = sat.vertex_sum(domain.b.x, domain.b.y)?;
            let value = region - tau as f64 * fb + 0.5 * (tau_a as f64 * fa + tau_c as f64 * fc);
            Ok(Scalar::Float(value))
        }
        ScalarField::Polynomial(f) => {
            let region = oracle::polygon_integral(f, &domain.polygon);
            let fa = f.antiderivative_at_vertex(domain.a);
            let fc = f.antiderivative_at_vertex(domain.c);
            let fb = f.antiderivative_at_vertex(domain.b);
            let half = BigRational::new(1.into(), 2.into());
            let value = region - rational_from_i64(tau) * fb
                + half * (rational_from_i64(tau_a) * fa + rational_from_i64(tau_c) * fc);
            Ok(Scalar::Rational(value))
        }
    }
}

/// The direction class governing a sub-curve's tendency and corner choice:
/// its own signature when diagonal, otherwise the signature of the division
/// run containing it. A straight slice of a diagonal run inherits the run's
/// class (the run models a monotone curve, so every sub-arc shares its
/// tendency); a genuinely straight run keeps its axis class.
fn resolve_class(
    division: &Division<'_>,
    start_segment: usize,
    segment_count: usize,
    vertices: &[Point],
) -> Result<(i8, i8), SlantedError> {
    let standalone = span_signature(vertices)?;
    if standalone.0 != 0 && standalone.1 != 0 {
        return Ok(standalone);
    }
    Ok(containing_run_signature(division, start_segment, segment_count).unwrap_or(standalone))
}

/// The signature of the division run containing the whole segment span, if
/// one does (spans given by consecutive-segment indices, wrapping on closed
/// curves).
fn containing_run_signature(
    division: &Division<'_>,
    start_segment: usize,
    segment_count: usize,
) -> Option<(i8, i8)> {
    let m = division.curve().segment_count();
    let start = start_segment % m;
    for run in division.runs() {
        let offset = (start + m - run.start_segment % m) % m;
        if offset + segment_count <= run.segment_count {
            return Some(run.signature);
        }
    }
    None
}

/// The plain region integral over a positive domain, in the field's carrier.
fn region_value(
    domain: &PositiveDomainResult,
    field: &ScalarField,
) -> Result<Scalar, SlantedError> {
    match field {
        ScalarField::GridInt { sat, .. } => {
            Ok(Scalar::ExactHalves(2 * grid_region_i128(sat, domain)?))
        }
        ScalarField::GridFloat { sat, .. } => Ok(Scalar::Float(grid_region_f64(sat, domain)?)),
        ScalarField::Polynomial(f) => Ok(Scalar::Rational(oracle::polygon_integral(
            f,
            &domain.polygon,
        ))),
    }
}

fn grid_region_i128(
    sat: &SummedAreaTable<i64>,
    domain: &PositiveDomainResult,
) -> Result<i128, SlantedError> {
    if !domain.rectilinear {
        return Err(SlantedError::NotRectilinearForGrid);
    }
    let mut total = 0i128;
    for rect in &domain.rectangles {
        total += sat.rect_sum(*rect)?;
    }
    Ok(total)
}

fn grid_region_f64(
    sat: &SummedAreaTable<f64>,
    domain: &PositiveDomainResult,
) -> Result<f64, SlantedError> {
    if !domain.rectilinear {
        return Err(SlantedError::NotRectilinearForGrid);
    }
    let mut total = 0.0f64;
    for rect in &domain.rectangles {
        total += sat.rect_sum(*rect)?;
    }
    Ok(total)
}

/// Collects the vertex chain of a segment span, wrapping on closed curves.
fn span_vertices(
    curve: &LatticePolyline,
    start_segment: usize,
    segment_count: usize,
) -> Result<Vec<Point>, SlantedError> {
    let m = curve.segment_count();
    let out_of_range = segment_count == 0
        || segment_count > m
        || if curve.is_closed() {
            false
        } else {
            start_segment >= m || start_segment + segment_count > m
        };
    if out_of_range {
        return Err(SlantedError::SpanOutOfRange {
            start: start_segment,
            count: segment_count,
        });
    }
    let vertices = curve.vertices();
    let n = vertices.len();
    Ok((0..=segment_count)
        .map(|k| vertices[(start_segment + k) % n])
        .collect())
}

/// The componentwise direction-sign signature of a monotone vertex chain.
fn span_signature(vertices: &[Point]) -> Result<(i8, i8), SlantedError> {
    let mut sx = 0i8;
    let mut sy = 0i8;
    for (i, w) in vertices.windows(2).enumerate() {
        let dx = (w[1].x - w[0].x).signum() as i8;
        let dy = (w[1].y - w[0].y).signum() as i8;
        if dx == 0 && dy == 0 {
            return Err(SlantedError::Curve(CurveError::ZeroLengthSegment(i)));
        }
        if dx != 0 {
            if sx == 0 {
                sx = dx;
            } else if sx != dx {
                return Err(SlantedError::NotMonotone);
            }
        }
        if dy != 0 {
            if sy == 0 {
                sy = dy;
            } else if sy != dy {
                return Err(SlantedError::NotMonotone);
            }
        }
    }
    Ok((sx, sy))
}

/// A balanced monotone staircase chord between two lattice points, taking its
/// vertical steps first. Consecutive same-direction steps are merged.
fn staircase_chord(from: Point, to: Point) -> Vec<Point> {
    let mut vertices = vec![from];
    let sx = (to.x - from.x).signum();
    let sy = (to.y - from.y).signum();
    if sx == 0 || sy == 0 {
        vertices.push(to);
        return vertices;
    }
    let adx = (to.x - from.x).abs();
    let ady = (to.y - from.y).abs();
    let mut err = ady - adx;
    let mut pos = from;
    let mut last_step = (0i64, 0i64);
    while pos != to {
        let step_y = pos.y != to.y && (pos.x == to.x || 2 * err >= -adx);
        let step = if step_y {
            err -= adx;
            (0, sy)
        } else {
            err += ady;
            (sx, 0)
        };
        pos = point(pos.x + step.0, pos.y + step.1);
        if step == last_step {
            *vertices.last_mut().unwrap() = pos;
        } else {
            vertices.push(pos);
            last_step = step;
        }
    }
    vertices
}

/// Builds a weakly simple closed curve for decomposition arithmetic and
/// rejects vertex cycles whose adjacent runs retrace each other head-on
/// along an axis — the one adjacency with no defined junction tendency.
fn closed_decomposition_curve(
    vertices: Vec<Point>,
    mode: SegmentMode,
) -> Result<LatticePolyline, SlantedError> {
    let curve = LatticePolyline::closed_weakly_simple(vertices, mode)?;
    let division = curve.uniform_division();
    let runs = division.runs();
    for j in 0..runs.len() {
        let a = runs[j].signature;
        let b = runs[(j + 1) % runs.len()].signature;
        let horizontal_retrace = a.1 == 0 && b.1 == 0 && a.0 == -b.0;
        let vertical_retrace = a.0 == 0 && b.0 == 0 && a.1 == -b.1;
        if horizontal_retrace || vertical_retrace {
            return Err(SlantedError::UnsupportedDecomposition(
                "the chord retraces an axis run head-on".into(),
            ));
        }
    }
    Ok(curve)
}

/// Exact carriers compare exactly; float values to a small relative
/// tolerance.
fn scalars_match(a: &Scalar, b: &Scalar) -> bool {
    match (a, b) {
        (Scalar::Float(x), Scalar::Float(y)) => {
            (x - y).abs() <= 1e-9 * (1.0 + x.abs().max(y.abs()))
        }
        _ => a == b,
    }
}

fn residual_is_zero(residual: &Scalar) -> bool {
    match residual {
        Scalar::Float(v) => v.abs() <= 1e-9,
        other => other.is_zero(),
    }
}

fn cross(a: Point, c: Point, b: Point) -> i128 {
    let acx = (c.x - a.x) as i128;
    let acy = (c.y - a.y) as i128;
    let abx = (b.x - a.x) as i128;
    let aby = (b.y - a.y) as i128;
    acx * aby - acy * abx
}

fn shoelace_doubled(cycle: &[Point]) -> i128 {
    let mut total = 0i128;
    for i in 0..cycle.len() {
        let p = cycle[i];
        let q = cycle[(i + 1) % cycle.len()];
        total += p.x as i128 * q.y as i128 - q.x as i128 * p.y as i128;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rectdomain::RectilinearDomain;

    fn int_field(width: usize, height: usize, values: Vec<i64>) -> ScalarField {
        ScalarField::from_grid_i64(GridFunction::from_values(width, height, values).unwrap())
            .unwrap()
    }

    fn counting_field(width: usize, height: usize) -> ScalarField {
        int_field(width, height, (1..=(width * height) as i64).collect())
    }

    fn ones_field(width: usize, height: usize) -> ScalarField {
        int_field(width, height, vec![1; width * height])
    }

    fn stair() -> LatticePolyline {
        LatticePolyline::open(
            vec![
                point(0, 0),
                point(1, 0),
                point(1, 1),
                point(2, 1),
                point(2, 2),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap()
    }

    fn cells_of(domain: &PositiveDomainResult) -> Vec<(i64, i64)> {
        let mut cells: Vec<(i64, i64)> = domain.rectangles.iter().flat_map(|r| r.cells()).collect();
        cells.sort_unstable();
        cells
    }

    #[test]
    fn staircase_positive_domain_sits_above_left() {
        let domain = positive_domain(stair().vertices()).unwrap();
        assert_eq!(domain.b, point(0, 2));
        assert!(!domain.degenerate);
        assert_eq!(cells_of(&domain), vec![(0, 0), (0, 1), (1, 1)]);
    }

    #[test]
    fn reversed_staircase_flips_the_domain() {
        let reversed = stair().reversed();
        let domain = positive_domain(reversed.vertices()).unwrap();
        assert_eq!(domain.b, point(2, 0));
        assert_eq!(cells_of(&domain), vec![(1, 0)]);
    }

    #[test]
    fn axis_run_is_degenerate() {
        let domain = positive_domain(&[point(0, 0), point(3, 0)]).unwrap();
        assert!(domain.degenerate);
        assert_eq!(domain.b, point(3, 0));
        assert!(domain.polygon.is_empty());
        assert!(domain.rectangles.is_empty());
    }

    #[test]
    fn non_monotone_chain_is_rejected() {
        let err = positive_domain(&[point(0, 0), point(2, 0), point(1, 0)]).unwrap_err();
        assert_eq!(err, SlantedError::NotMonotone);
    }

    #[test]
    fn staircase_value_over_unit_field() {
        let field = ones_field(2, 2);
        // ∬ = 3 cells, τ = −1, F(B) = F(0,2) = 0, endpoint tendencies −1:
        // 3 + ½(−F(0,0) − F(2,2)) = 3 − 2 = 1.
        let value = slanted_uniform(&stair(), 0, 4, &field).unwrap();
        assert_eq!(value, Scalar::ExactHalves(2));
        let reversed = slanted_uniform(&stair().reversed(), 0, 4, &field).unwrap();
        assert_eq!(reversed, Scalar::ExactHalves(-2));
    }

    #[test]
    fn rectangle_collapses_to_the_corner_sum() {
        let field = counting_field(4, 3);
        let boundary = LatticePolyline::closed(
            vec![point(0, 0), point(4, 0), point(4, 3), point(0, 3)],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let by_boundary = region_integral(&boundary, &field).unwrap();
        let domain = RectilinearDomain::from_boxes(&[CellBox::new(0, 0, 3, 2)]).unwrap();
        let by_corners = domain.antiderivative_sum(&field).unwrap();
        assert_eq!(by_boundary, by_corners);
        // Total of 1..=12.
        assert_eq!(by_boundary, Scalar::ExactHalves(2 * 78));
    }

    #[test]
    fn collinear_vertices_do_not_change_the_value() {
        let field = counting_field(4, 3);
        let plain = LatticePolyline::closed(
            vec![point(0, 0), point(4, 0), point(4, 3), point(0, 3)],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let subdivided = LatticePolyline::closed(
            vec![
                point(0, 0),
                point(2, 0),
                point(4, 0),
                point(4, 3),
                point(1, 3),
                point(0, 3),
                point(0, 1),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        assert_eq!(
            region_integral(&plain, &field).unwrap(),
            region_integral(&subdivided, &field).unwrap()
        );
    }

    #[test]
    fn zigzag_middle_run_reduces_to_region_minus_corner() {
        // Runs NE, SE, NE; the middle run's junction tendencies both vanish,
        // leaving ∬ over its positive domain minus the full-weight corner.
        let field = counting_field(7, 3);
        let curve = LatticePolyline::open(
            vec![
                point(0, 0),
                point(0, 1),
                point(1, 1),
                point(1, 2),
                point(2, 2),
                point(2, 1),
                point(3, 1),
                point(3, 0),
                point(4, 0),
                point(4, 1),
                point(5, 1),
                point(5, 2),
                point(6, 2),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let division = curve.uniform_division();
        assert_eq!(division.len(), 3);
        assert_eq!(division.runs()[1].signature, (1, -1));
        let sat = match &field {
            ScalarField::GridInt { sat, .. } => sat,
            _ => unreachable!(),
        };
        let region = sat.rect_sum(CellBox::new(2, 1, 2, 1)).unwrap()
            + sat.rect_sum(CellBox::new(3, 0, 3, 1)).unwrap();
        let expected = 2 * region - 2 * sat.vertex_sum(4, 2).unwrap();
        let run = division.runs()[1];
        let value = slanted_uniform(&curve, run.start_segment, run.segment_count, &field).unwrap();
        assert_eq!(value, Scalar::ExactHalves(expected));
    }

    #[test]
    fn straight_then_staircase_reproduces_the_half_weight_pattern() {
        // Division [W], [NE], [SE]: the first junction carries tendency −1,
        // the second 0, so the middle run's value is ∬ + F(B) − ½F(A).
        let field = counting_field(6, 6);
        let curve = LatticePolyline::open(
            vec![
                point(5, 3),
                point(1, 3),
                point(1, 4),
                point(2, 4),
                point(2, 5),
                point(3, 5),
                point(3, 4),
                point(4, 4),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let division = curve.uniform_division();
        assert_eq!(division.len(), 3);
        assert_eq!(division.runs()[0].signature, (-1, 0));
        assert_eq!(division.runs()[1].signature, (1, 1));
        assert_eq!(division.runs()[2].signature, (1, -1));
        assert_eq!(division.tendency_at_vertex(1), -1);
        assert_eq!(division.tendency_at_vertex(5), 0);
        let sat = match &field {
            ScalarField::GridInt { sat, .. } => sat,
            _ => unreachable!(),
        };
        // Middle run: A = (1,3), C = (3,5), B = (1,5), D⁺ = {(1,4)}.
        let region = sat.rect_sum(CellBox::new(1, 4, 1, 4)).unwrap();
        let expected =
            2 * region + 2 * sat.vertex_sum(1, 5).unwrap() - sat.vertex_sum(1, 3).unwrap();
        let value = slanted_uniform(&curve, 1, 4, &field).unwrap();
        assert_eq!(value, Scalar::ExactHalves(expected));
        // Straight first run: value = ½[τ(A)F(A) + τ(C)F(C)] = −½F(1,3),
        // because the open start endpoint has the run's zero tendency.
        let first = slanted_uniform(&curve, 0, 1, &field).unwrap();
        assert_eq!(first, Scalar::ExactHalves(-sat.vertex_sum(1, 3).unwrap()));
    }

    #[test]
    fn single_run_curve_equals_its_uniform_value() {
        let field = counting_field(3, 3);
        let curve = stair();
        assert_eq!(
            slanted_integral(&curve, &field).unwrap(),
            slanted_uniform(&curve, 0, 4, &field).unwrap()
        );
    }

    #[test]
    fn additivity_residual_is_zero_at_every_split() {
        let field = counting_field(3, 3);
        let curve = LatticePolyline::open(
            vec![
                point(0, 0),
                point(1, 0),
                point(1, 1),
                point(2, 1),
                point(2, 2),
                point(3, 2),
                point(3, 3),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        for split in 1..6 {
            let residual = check_additivity(&curve, 0, 6, split, &field).unwrap();
            assert!(residual.is_zero(), "split {split}: {residual:?}");
        }
    }

    #[test]
    fn additivity_residual_is_zero_for_polynomials() {
        let field = ScalarField::from_polynomial(
            BivariatePoly::from_int_terms(&[(1, 1, 1), (-2, 0, 3), (3, 2, 0)]).unwrap(),
        );
        let curve = LatticePolyline::open(
            vec![point(0, 0), point(2, 1), point(3, 3), point(5, 4)],
            SegmentMode::Monotone,
        )
        .unwrap();
        for split in 1..3 {
            let residual = check_additivity(&curve, 0, 3, split, &field).unwrap();
            assert!(residual.is_zero(), "split {split}: {residual:?}");
        }
    }

    #[test]
    fn orientation_residual_is_zero_on_open_staircases() {
        let field = counting_field(2, 2);
        let residual = check_orientation(&stair(), 0, 4, &field).unwrap();
        assert!(residual.is_zero(), "{residual:?}");
    }

    #[test]
    fn orientation_residual_is_zero_inside_a_closed_context() {
        let field = counting_field(4, 4);
        // A staircase diamond; every run has nonzero tendency.
        let diamond = LatticePolyline::closed(
            vec![
                point(0, 0),
                point(2, 0),
                point(2, 1),
                point(3, 1),
                point(3, 3),
                point(1, 3),
                point(1, 2),
                point(0, 2),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let division = diamond.uniform_division();
        for run in division.runs().iter().filter(|r| !r.is_axis()) {
            let residual =
                check_orientation(&diamond, run.start_segment, run.segment_count, &field).unwrap();
            assert!(residual.is_zero(), "run {run:?}: {residual:?}");
        }
    }

    #[test]
    fn orientation_check_rejects_axis_runs() {
        let field = counting_field(3, 3);
        let curve = LatticePolyline::open(vec![point(0, 0), point(3, 0)], SegmentMode::Rectilinear)
            .unwrap();
        assert_eq!(
            check_orientation(&curve, 0, 1, &field).unwrap_err(),
            SlantedError::ZeroTendencyRun
        );
    }

    #[test]
    fn lemma_residual_is_zero_on_a_rectangle() {
        let field = counting_field(5, 4);
        let rectangle = LatticePolyline::closed(
            vec![point(0, 0), point(4, 0), point(4, 3), point(0, 3)],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let residual = check_lemma_decomposition(&rectangle, &field).unwrap();
        assert!(residual.is_zero(), "{residual:?}");
    }

    #[test]
    fn lemma_residual_is_zero_on_a_staircase_convex_region() {
        let field = counting_field(5, 5);
        let boundary = LatticePolyline::closed(
            vec![
                point(1, 0),
                point(4, 0),
                point(4, 2),
                point(3, 2),
                point(3, 4),
                point(1, 4),
                point(1, 3),
                point(0, 3),
                point(0, 1),
                point(1, 1),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let residual = check_lemma_decomposition(&boundary, &field).unwrap();
        assert!(residual.is_zero(), "{residual:?}");
    }

    #[test]
    fn lemma_handles_a_complement_that_retraces_the_chord() {
        // The third run is exactly the reverse of the canonical chord, so the
        // complement degenerates and the decomposition reduces to Δ = curve.
        let field = counting_field(5, 3);
        let curve = LatticePolyline::closed(
            vec![
                point(0, 0),
                point(4, 0),
                point(4, 1),
                point(3, 1),
                point(3, 2),
                point(2, 2),
                point(1, 2),
                point(1, 1),
                point(0, 1),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let residual = check_lemma_decomposition(&curve, &field).unwrap();
        assert!(residual.is_zero(), "{residual:?}");
    }

    #[test]
    fn region_integral_requires_closed_counterclockwise_input() {
        let field = counting_field(3, 3);
        let open = stair();
        assert_eq!(
            region_integral(&open, &field).unwrap_err(),
            SlantedError::NotClosed
        );
        let clockwise = LatticePolyline::closed(
            vec![point(0, 0), point(0, 2), point(2, 2), point(2, 0)],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        assert_eq!(
            region_integral(&clockwise, &field).unwrap_err(),
            SlantedError::NotPositivelyOriented
        );
    }

    #[test]
    fn grid_fields_reject_diagonal_segments() {
        let field = counting_field(5, 5);
        let diagonal =
            LatticePolyline::open(vec![point(0, 0), point(2, 2)], SegmentMode::Monotone).unwrap();
        assert_eq!(
            slanted_uniform(&diagonal, 0, 1, &field).unwrap_err(),
            SlantedError::NotRectilinearForGrid
        );
    }

    #[test]
    fn polynomial_region_matches_the_polygon_oracle_on_a_t_shape() {
        let f = BivariatePoly::from_int_terms(&[(1, 1, 1)]).unwrap();
        let field = ScalarField::from_polynomial(f.clone());
        let t_shape = vec![
            point(0, 2),
            point(3, 2),
            point(3, 0),
            point(4, 0),
            point(4, 2),
            point(7, 2),
            point(7, 3),
            point(0, 3),
        ];
        let boundary = LatticePolyline::closed(t_shape.clone(), SegmentMode::Rectilinear).unwrap();
        // The vertex order above is clockwise; orient positively.
        let boundary = if boundary.signed_area_doubled() > 0 {
            boundary
        } else {
            boundary.reversed()
        };
        let value = region_integral(&boundary, &field).unwrap();
        let truth = oracle::polygon_integral(&f, boundary.vertices());
        assert_eq!(value, Scalar::Rational(truth));
    }

    #[test]
    fn polynomial_mode_integrates_true_diagonal_boundaries() {
        let f = BivariatePoly::from_int_terms(&[(1, 1, 1), (2, 0, 0)]).unwrap();
        let field = ScalarField::from_polynomial(f.clone());
        let triangle = LatticePolyline::closed(
            vec![point(0, 0), point(4, 0), point(4, 4)],
            SegmentMode::Monotone,
        )
        .unwrap();
        let value = region_integral(&triangle, &field).unwrap();
        let truth = oracle::polygon_integral(&f, triangle.vertices());
        assert_eq!(value, Scalar::Rational(truth));
    }

    #[test]
    fn run_values_sum_in_any_order() {
        let field = counting_field(5, 5);
        let boundary = LatticePolyline::closed(
            vec![
                point(1, 0),
                point(4, 0),
                point(4, 2),
                point(3, 2),
                point(3, 4),
                point(1, 4),
                point(1, 3),
                point(0, 3),
                point(0, 1),
                point(1, 1),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let division = boundary.uniform_division();
        let forward = division.runs().iter().fold(Scalar::ZERO, |acc, run| {
            acc + slanted_uniform(&boundary, run.start_segment, run.segment_count, &field).unwrap()
        });
        let backward = division.runs().iter().rev().fold(Scalar::ZERO, |acc, run| {
            acc + slanted_uniform(&boundary, run.start_segment, run.segment_count, &field).unwrap()
        });
        assert_eq!(forward, backward);
        assert_eq!(forward, slanted_integral(&boundary, &field).unwrap());
    }

    #[test]
    fn naive_suite_exhibits_all_failures_on_a_positive_grid() {
        let field = counting_field(5, 5);
        let report = naive_failure_suite(&field).unwrap();
        assert!(report.all_violations_exhibited(), "{report:?}");
        assert!(report.all_corrections_hold(), "{report:?}");
    }

    #[test]
    fn naive_overcount_on_the_band_is_the_bounding_box() {
        // The band's two staircase domains tile [0,4]² and overlap exactly on
        // the interior, so naive − truth = ∬ over the whole bounding box.
        let field = counting_field(5, 5);
        let band = LatticePolyline::closed(
            vec![
                point(4, 4),
                point(3, 4),
                point(3, 3),
                point(2, 3),
                point(2, 2),
                point(1, 2),
                point(1, 1),
                point(0, 1),
                point(0, 0),
                point(2, 0),
                point(2, 1),
                point(3, 1),
                point(3, 2),
                point(4, 2),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let naive = naive_integral(&band, &field).unwrap();
        let truth = oracle_region_value(&band, &field).unwrap();
        let sat = match &field {
            ScalarField::GridInt { sat, .. } => sat,
            _ => unreachable!(),
        };
        let bbox = sat.rect_sum(CellBox::new(0, 0, 3, 3)).unwrap();
        assert_eq!(naive - truth, Scalar::ExactHalves(2 * bbox));
        assert_eq!(
            region_integral(&band, &field).unwrap(),
            oracle_region_value(&band, &field).unwrap()
        );
    }

    #[test]
    fn float_fields_agree_with_integer_fields() {
        let values: Vec<i64> = (1..=25).collect();
        let int_field = int_field(5, 5, values.clone());
        let float_field = ScalarField::from_grid_f64(
            GridFunction::from_values(5, 5, values.iter().map(|&v| v as f64).collect()).unwrap(),
        )
        .unwrap();
        let boundary = LatticePolyline::closed(
            vec![
                point(1, 0),
                point(4, 0),
                point(4, 2),
                point(3, 2),
                point(3, 4),
                point(1, 4),
                point(1, 3),
                point(0, 3),
                point(0, 1),
                point(1, 1),
            ],
            SegmentMode::Rectilinear,
        )
        .unwrap();
        let exact = region_integral(&boundary, &int_field).unwrap().to_f64();
        let float = region_integral(&boundary, &float_field).unwrap().to_f64();
        assert!((exact - float).abs() < 1e-9, "{exact} vs {float}");
    }
}
