//! Oriented lattice polylines, tendency indicator vectors, and uniformly
//! tended divisions.
//!
//! A curve's *tendency indicator* at a point is the quadruple
//! `(x_plus, x_minus, y_plus, y_minus)` of one-sided direction signs: the
//! outgoing segment contributes `(sgn ox, sgn oy)` to the plus components and
//! the incoming segment contributes `(−sgn ix, −sgn iy)` to the minus
//! components. The *tendency* collapses the indicator to `{−1, 0, +1}` via an
//! angular-sector rule: place the left-hand side of the traversal as the open
//! sector swept counterclockwise from the outgoing direction to the incoming
//! one, and add `+1` for each fully contained open quadrant pointing (++) or
//! (−−) and `−1` for (+−) or (−+) — the same bookkeeping the corner
//! coefficients of [`rectdomain`](crate::rectdomain) perform for right angles.
//!
//! [`uniform_division`](LatticePolyline::uniform_division) splits a polyline
//! into maximal monotone runs: within a run every segment direction agrees
//! with a fixed signature `(s_x, s_y)` componentwise (zeros allowed per
//! segment). Runs are the unit of slanted integration in
//! [`slanted`](crate::slanted).

use std::fmt;

use thiserror::Error;

use crate::Point;

/// Errors from polyline construction and curve queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    /// Open polylines need 2 vertices, closed ones 3 (4 in rectilinear mode,
    /// enforced indirectly by the segment checks).
    #[error("a polyline needs at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },
    /// Consecutive vertices must be distinct.
    #[error("zero-length segment at index {0}")]
    ZeroLengthSegment(usize),
    /// Rectilinear mode admits axis-parallel segments only.
    #[error("segment {0} is not axis-parallel, which rectilinear mode requires")]
    NotAxisParallel(usize),
    /// The polyline touches or crosses itself.
    #[error("polyline is not simple: segments {0} and {1} intersect")]
    SelfIntersection(usize, usize),
    /// A closed curve must not repeat its first vertex at the end.
    #[error("closed polyline must not repeat the first vertex as the last")]
    RepeatedClosingVertex,
    /// Two-sided indicators do not exist at the endpoints of an open curve.
    #[error("vertex {0} is an endpoint of an open curve and has no two-sided indicator")]
    OpenEndpoint(usize),
    /// A vertex or segment index beyond the curve.
    #[error("position index {0} is out of range")]
    IndexOutOfRange(usize),
    /// An indicator component outside {−1, 0, +1} or one of the degenerate
    /// sign patterns that no simple curve point can realize.
    #[error("degenerate tendency indicator ({0}, {1}, {2}, {3})")]
    DegenerateIndicator(i8, i8, i8, i8),
}

/// Whether a polyline may use only axis-parallel segments or arbitrary
/// straight lattice segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentMode {
    /// Every segment is horizontal or vertical.
    Rectilinear,
    /// Segments may run in any direction; each straight segment is monotone
    /// by itself.
    Monotone,
}

/// A position on a curve at which an indicator can be evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurvePosition {
    /// A vertex, by index. For open curves the endpoints are excluded.
    Vertex(usize),
    /// The interior of a segment, by segment index.
    SegmentInterior(usize),
}

/// The quadruple of one-sided direction signs at a curve point. Only the 60
/// non-degenerate sign patterns are representable; construction validates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TendencyIndicator {
    x_plus: i8,
    x_minus: i8,
    y_plus: i8,
    y_minus: i8,
}

impl TendencyIndicator {
    /// Validates the component range and the degeneracy exclusions: a point
    /// of a curve must be left and entered in some direction
    /// (`(x_plus, y_plus) ≠ (0, 0) ≠ (x_minus, y_minus)`), and the two
    /// single-axis patterns that would describe a doubling-back cusp along an
    /// axis are excluded.
    pub fn new(x_plus: i8, x_minus: i8, y_plus: i8, y_minus: i8) -> Result<Self, CurveError> {
        let components = [x_plus, x_minus, y_plus, y_minus];
        let degenerate = components.iter().any(|c| !(-1..=1).contains(c))
            || (x_plus == 0 && y_plus == 0)
            || (x_minus == 0 && y_minus == 0)
            || (x_plus == 0 && x_minus == 0 && y_plus == y_minus)
            || (y_plus == 0 && y_minus == 0 && x_plus == x_minus);
        if degenerate {
            return Err(CurveError::DegenerateIndicator(
                x_plus, x_minus, y_plus, y_minus,
            ));
        }
        Ok(TendencyIndicator {
            x_plus,
            x_minus,
            y_plus,
            y_minus,
        })
    }

    /// Builds the indicator of a point entered with direction `(ix, iy)` and
    /// left with direction `(ox, oy)` (signs are taken here).
    pub fn from_directions(incoming: (i64, i64), outgoing: (i64, i64)) -> Result<Self, CurveError> {
        TendencyIndicator::new(
            outgoing.0.signum() as i8,
            -incoming.0.signum() as i8,
            outgoing.1.signum() as i8,
            -incoming.1.signum() as i8,
        )
    }

    pub fn x_plus(&self) -> i8 {
        self.x_plus
    }

    pub fn x_minus(&self) -> i8 {
        self.x_minus
    }

    pub fn y_plus(&self) -> i8 {
        self.y_plus
    }

    pub fn y_minus(&self) -> i8 {
        self.y_minus
    }

    /// The quadruple as a tuple, in `(x_plus, x_minus, y_plus, y_minus)`
    /// order.
    pub fn as_tuple(&self) -> (i8, i8, i8, i8) {
        (self.x_plus, self.x_minus, self.y_plus, self.y_minus)
    }
}

impl fmt::Display for TendencyIndicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:+}, {:+}, {:+}, {:+})",
            self.x_plus, self.x_minus, self.y_plus, self.y_minus
        )
    }
}

/// All 60 valid tendency indicators, in lexicographic component order.
pub fn enumerate_valid_indicators() -> Vec<TendencyIndicator> {
    let mut out = Vec::new();
    for x_plus in -1..=1 {
        for x_minus in -1..=1 {
            for y_plus in -1..=1 {
                for y_minus in -1..=1 {
                    if let Ok(v) = TendencyIndicator::new(x_plus, x_minus, y_plus, y_minus) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// Index of a direction sign pair on the counterclockwise 8-direction wheel
/// starting at east: E, NE, N, NW, W, SW, S, SE.
fn direction_octant(sx: i8, sy: i8) -> usize {
    match (sx, sy) {
        (1, 0) => 0,
        (1, 1) => 1,
        (0, 1) => 2,
        (-1, 1) => 3,
        (-1, 0) => 4,
        (-1, -1) => 5,
        (0, -1) => 6,
        (1, -1) => 7,
        _ => unreachable!("zero direction has no octant"),
    }
}

/// The tendency of a curve point from its indicator, in `{−1, 0, +1}`.
///
/// The left-hand side of the traversal is the open angular sector swept
/// counterclockwise from the outgoing direction `(x_plus, y_plus)` to the
/// incoming direction `(x_minus, y_minus)`; equal directions sweep the full
/// circle. Each open quadrant wholly inside the sector contributes the sign
/// of its corner coefficient: `+1` for the (++) and (−−) quadrants, `−1` for
/// (+−) and (−+).
pub fn tendency_from_indicator(v: &TendencyIndicator) -> i8 {
    let out = direction_octant(v.x_plus, v.y_plus);
    let incoming = direction_octant(v.x_minus, v.y_minus);
    let span = match (incoming + 8 - out) % 8 {
        0 => 8,
        s => s,
    };
    let mut tendency = 0i8;
    // Quadrant centers on the wheel: NE=1, NW=3, SW=5, SE=7.
    for (center, sign) in [(1, 1i8), (3, -1), (5, 1), (7, -1)] {
        let offset = (center + 8 - out) % 8;
        if (1..span).contains(&offset) {
            tendency += sign;
        }
    }
    tendency
}

/// A maximal monotone run of a division: `segment_count` consecutive segments
/// starting at `start_segment` (wrapping past the end on closed curves), all
/// of whose directions agree componentwise with `signature`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunSpan {
    pub start_segment: usize,
    pub segment_count: usize,
    /// Componentwise direction signs `(s_x, s_y)`; never both zero. Axis
    /// runs have exactly one zero component.
    pub signature: (i8, i8),
}

impl RunSpan {
    /// True for axis-parallel (straight) runs, whose positive domain is
    /// empty.
    pub fn is_axis(&self) -> bool {
        self.signature.0 == 0 || self.signature.1 == 0
    }
}

/// The run-level indicator of a monotone run with direction signature
/// `(s_x, s_y)`: the limit object of a strictly monotone curve piece,
/// `(s_x, −s_x, s_y, −s_y)`.
pub fn run_indicator(signature: (i8, i8)) -> TendencyIndicator {
    TendencyIndicator::new(signature.0, -signature.0, signature.1, -signature.1)
        .expect("run signatures are never both-zero")
}

/// The tendency of a monotone run: −1 for up-right/down-left staircases, +1
/// for down-right/up-left ones, 0 for axis-parallel runs.
pub fn run_tendency(signature: (i8, i8)) -> i8 {
    tendency_from_indicator(&run_indicator(signature))
}

/// An oriented simple polyline on lattice vertices.
///
/// Closed polylines list each vertex once (the closing segment back to the
/// first vertex is implied) and use vertex order for orientation
/// (counterclockwise = positive). Simplicity is enforced at construction by
/// an exact pairwise segment test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolyline {
    vertices: Vec<Point>,
    closed: bool,
    mode: SegmentMode,
}

impl LatticePolyline {
    /// Builds an open polyline.
    pub fn open(vertices: Vec<Point>, mode: SegmentMode) -> Result<Self, CurveError> {
        Self::build(vertices, false, mode)
    }

    /// Builds a closed polyline; the closing segment from the last vertex
    /// back to the first is implied and must not be written out.
    pub fn closed(vertices: Vec<Point>, mode: SegmentMode) -> Result<Self, CurveError> {
        Self::build(vertices, true, mode)
    }

    /// Builds a closed polyline that is allowed to touch or overlap itself.
    ///
    /// Decomposition intermediates (a boundary piece closed off by a chord)
    /// can run back along existing geometry; their integrals are still
    /// well-defined, so only the segment validity checks are applied here.
    /// Not exposed: public construction always enforces simplicity.
    pub(crate) fn closed_weakly_simple(
        vertices: Vec<Point>,
        mode: SegmentMode,
    ) -> Result<Self, CurveError> {
        if vertices.len() < 3 {
            return Err(CurveError::TooFewVertices {
                min: 3,
                got: vertices.len(),
            });
        }
        if vertices.first() == vertices.last() {
            return Err(CurveError::RepeatedClosingVertex);
        }
        let curve = LatticePolyline {
            vertices,
            closed: true,
            mode,
        };
        curve.validate_segments()?;
        Ok(curve)
    }

    fn build(vertices: Vec<Point>, closed: bool, mode: SegmentMode) -> Result<Self, CurveError> {
        let min = if closed { 3 } else { 2 };
        if vertices.len() < min {
            return Err(CurveError::TooFewVertices {
                min,
                got: vertices.len(),
            });
        }
        if closed && vertices.first() == vertices.last() {
            return Err(CurveError::RepeatedClosingVertex);
        }
        let curve = LatticePolyline {
            vertices,
            closed,
            mode,
        };
        curve.validate_segments()?;
        curve.validate_simple()?;
        Ok(curve)
    }

    fn validate_segments(&self) -> Result<(), CurveError> {
        for i in 0..self.segment_count() {
            let (p, q) = self.segment(i);
            if p == q {
                return Err(CurveError::ZeroLengthSegment(i));
            }
            if self.mode == SegmentMode::Rectilinear && p.x != q.x && p.y != q.y {
                return Err(CurveError::NotAxisParallel(i));
            }
        }
        Ok(())
    }

    fn validate_simple(&self) -> Result<(), CurveError> {
        let m = self.segment_count();
        for i in 0..m {
            for j in i + 1..m {
                let adjacent = j == i + 1 || (self.closed && i == 0 && j == m - 1);
                let (a, b) = self.segment(i);
                let (c, d) = self.segment(j);
                if adjacent {
                    // Adjacent segments share exactly one endpoint; they must
                    // not double back over each other.
                    let (u, v, w) = if j == i + 1 { (a, b, d) } else { (c, d, b) };
                    let along = (v.x - u.x) * (w.x - v.x) + (v.y - u.y) * (w.y - v.y);
                    if cross(u, v, w) == 0 && along < 0 {
                        return Err(CurveError::SelfIntersection(i, j));
                    }
                } else if segments_touch(a, b, c, d) {
                    return Err(CurveError::SelfIntersection(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn mode(&self) -> SegmentMode {
        self.mode
    }

    /// Number of segments: one fewer than the vertices for open curves, equal
    /// to the vertex count for closed ones.
    pub fn segment_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }

    /// Endpoints of segment `i` (wrapping on closed curves).
    pub fn segment(&self, i: usize) -> (Point, Point) {
        let n = self.vertices.len();
        (self.vertices[i], self.vertices[(i + 1) % n])
    }

    /// Componentwise direction signs of segment `i`.
    pub fn direction(&self, i: usize) -> (i8, i8) {
        let (p, q) = self.segment(i);
        ((q.x - p.x).signum() as i8, (q.y - p.y).signum() as i8)
    }

    /// The same polyline traversed in the opposite direction.
    pub fn reversed(&self) -> LatticePolyline {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        // Reversal preserves the vertex set, segment set, and simplicity.
        LatticePolyline {
            vertices,
            closed: self.closed,
            mode: self.mode,
        }
    }

    /// Twice the signed area of a closed polyline (shoelace); positive for
    /// counterclockwise orientation.
    pub fn signed_area_doubled(&self) -> i128 {
        debug_assert!(self.closed);
        let mut total = 0i128;
        for i in 0..self.segment_count() {
            let (p, q) = self.segment(i);
            total += p.x as i128 * q.y as i128 - q.x as i128 * p.y as i128;
        }
        total
    }

    /// The tendency indicator at a vertex or segment interior. At a vertex
    /// the incoming and outgoing segments provide the one-sided directions;
    /// inside a segment both sides equal the segment's direction. Endpoints
    /// of open curves have no two-sided indicator.
    pub fn indicator_at(&self, position: CurvePosition) -> Result<TendencyIndicator, CurveError> {
        let n = self.vertices.len();
        let m = self.segment_count();
        match position {
            CurvePosition::Vertex(i) => {
                if i >= n {
                    return Err(CurveError::IndexOutOfRange(i));
                }
                if !self.closed && (i == 0 || i == n - 1) {
                    return Err(CurveError::OpenEndpoint(i));
                }
                let incoming_segment = if i == 0 { m - 1 } else { i - 1 };
                let (ip, iq) = self.segment(incoming_segment);
                let (op, oq) = self.segment(i);
                TendencyIndicator::from_directions(
                    (iq.x - ip.x, iq.y - ip.y),
                    (oq.x - op.x, oq.y - op.y),
                )
            }
            CurvePosition::SegmentInterior(i) => {
                if i >= m {
                    return Err(CurveError::IndexOutOfRange(i));
                }
                let (p, q) = self.segment(i);
                let d = (q.x - p.x, q.y - p.y);
                TendencyIndicator::from_directions(d, d)
            }
        }
    }

    /// Splits the curve into maximal monotone runs.
    ///
    /// Merging is componentwise-compatible growth of the run's direction
    /// signature, with one refinement: a merge that would *widen* an axis
    /// signature into a diagonal one is accepted only if the segment after
    /// next stays compatible with the widened signature (or the curve ends).
    /// A true staircase therefore coalesces into one run, while an isolated
    /// right-angle corner — a rectangle's, say — keeps its two sides as
    /// separate axis runs. On closed curves the first and last runs merge
    /// across the start vertex under the same compatibility rule.
    pub fn uniform_division(&self) -> Division<'_> {
        let m = self.segment_count();
        let directions: Vec<(i8, i8)> = (0..m).map(|i| self.direction(i)).collect();
        let mut runs: Vec<RunSpan> = Vec::new();
        let mut start = 0usize;
        let mut signature = directions[0];
        for i in 1..m {
            let d = directions[i];
            let lookahead = if i + 1 < m {
                Some(directions[i + 1])
            } else if self.closed {
                Some(directions[0])
            } else {
                None
            };
            match merge_signature(signature, d, lookahead) {
                Some(widened) => signature = widened,
                None => {
                    runs.push(RunSpan {
                        start_segment: start,
                        segment_count: i - start,
                        signature,
                    });
                    start = i;
                    signature = d;
                }
            }
        }
        runs.push(RunSpan {
            start_segment: start,
            segment_count: m - start,
            signature,
        });
        if self.closed && runs.len() >= 2 {
            // Merge across the start vertex when the boundary runs stay
            // compatible; two axis runs merge only along the same axis, so a
            // genuine corner at the start vertex keeps its sides apart. One
            // pass suffices: a boundary the walk cut stays in conflict no
            // matter how the neighboring signatures widen.
            let first = runs[0];
            let last = *runs.last().unwrap();
            if let Some(combined) = union_signature(last.signature, first.signature) {
                let both_axis = is_axis(last.signature) && is_axis(first.signature);
                if !(both_axis && last.signature != first.signature) {
                    runs[0] = RunSpan {
                        start_segment: last.start_segment,
                        segment_count: last.segment_count + first.segment_count,
                        signature: combined,
                    };
                    runs.pop();
                }
            }
        }
        Division { curve: self, runs }
    }
}

fn is_axis(signature: (i8, i8)) -> bool {
    signature.0 == 0 || signature.1 == 0
}

/// Componentwise union of two compatible signatures; `None` on a sign
/// conflict.
fn union_signature(a: (i8, i8), b: (i8, i8)) -> Option<(i8, i8)> {
    let merge = |p: i8, q: i8| -> Option<i8> {
        if p == 0 {
            Some(q)
        } else if q == 0 || p == q {
            Some(p)
        } else {
            None
        }
    };
    Some((merge(a.0, b.0)?, merge(a.1, b.1)?))
}

fn merge_signature(
    signature: (i8, i8),
    d: (i8, i8),
    lookahead: Option<(i8, i8)>,
) -> Option<(i8, i8)> {
    let widened = union_signature(signature, d)?;
    if widened == signature {
        return Some(signature);
    }
    match lookahead {
        None => Some(widened),
        Some(next) => {
            if union_signature(widened, next).is_some() {
                Some(widened)
            } else {
                None
            }
        }
    }
}

/// A uniformly tended division of a polyline into maximal monotone runs.
#[derive(Clone, Debug)]
pub struct Division<'a> {
    curve: &'a LatticePolyline,
    runs: Vec<RunSpan>,
}

impl<'a> Division<'a> {
    pub fn curve(&self) -> &'a LatticePolyline {
        self.curve
    }

    pub fn runs(&self) -> &[RunSpan] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// The vertices of run `index`, start through end inclusive (wrapping on
    /// closed curves).
    pub fn run_vertices(&self, index: usize) -> Vec<Point> {
        let run = self.runs[index];
        let n = self.curve.vertices.len();
        (0..=run.segment_count)
            .map(|k| self.curve.vertices[(run.start_segment + k) % n])
            .collect()
    }

    /// The tendency of run `index` (its signature's run tendency).
    pub fn run_tendency(&self, index: usize) -> i8 {
        run_tendency(self.runs[index].signature)
    }

    /// The context tendency `τ_Γ` at a vertex of the divided curve:
    ///
    /// * interior vertex of a run → the run's tendency;
    /// * junction between two runs → sector rule applied to the adjacent
    ///   runs' direction classes;
    /// * endpoint of an open curve → the terminal run's tendency (the curve
    ///   is extended virtually along its terminal direction class).
    pub fn tendency_at_vertex(&self, vertex: usize) -> i8 {
        let n = self.curve.vertices.len();
        assert!(vertex < n, "vertex index {vertex} out of range");
        if !self.curve.closed {
            if vertex == 0 {
                return run_tendency(self.runs[0].signature);
            }
            if vertex == n - 1 {
                return run_tendency(self.runs[self.runs.len() - 1].signature);
            }
        }
        for (j, run) in self.runs.iter().enumerate() {
            let start_vertex = run.start_segment % n;
            if start_vertex == vertex && (self.curve.closed || j > 0) {
                let prev = if j == 0 { self.runs.len() - 1 } else { j - 1 };
                return junction_tendency(self.runs[prev].signature, run.signature);
            }
        }
        for run in &self.runs {
            for k in 1..run.segment_count {
                if (run.start_segment + k) % n == vertex {
                    return run_tendency(run.signature);
                }
            }
        }
        unreachable!("every vertex is a run interior, a junction, or an open endpoint");
    }
}

/// The junction tendency where a run with direction class `incoming` hands
/// over to a run with direction class `outgoing`.
pub fn junction_tendency(incoming: (i8, i8), outgoing: (i8, i8)) -> i8 {
    let indicator = TendencyIndicator::new(outgoing.0, -incoming.0, outgoing.1, -incoming.1)
        .expect("junctions of a simple curve have non-degenerate direction classes");
    tendency_from_indicator(&indicator)
}

/// Cross product of `b − a` and `c − a` in wide arithmetic.
fn cross(a: Point, b: Point, c: Point) -> i128 {
    let abx = (b.x - a.x) as i128;
    let aby = (b.y - a.y) as i128;
    let acx = (c.x - a.x) as i128;
    let acy = (c.y - a.y) as i128;
    abx * acy - aby * acx
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    cross(a, b, p) == 0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// True when closed segments `ab` and `cd` share any point.
fn segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    (d1 == 0 && on_segment(c, d, a))
        || (d2 == 0 && on_segment(c, d, b))
        || (d3 == 0 && on_segment(a, b, c))
        || (d4 == 0 && on_segment(a, b, d))
}
