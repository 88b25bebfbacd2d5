//! One-sided detachments and function tendency on exactly-representable
//! single-variable functions.
//!
//! The detachment of `f` at `x` from the right (resp. left) is the limit of
//! `sgn[f(x+h) − f(x)]` as `h → 0⁺` (resp. `h → 0⁻`): the instantaneous trend
//! of change, taking values in `{−1, 0, +1}`. The tendency of `f` at `x` is
//! `sgn[f⁺(x) − f⁻(x)]`. Piecewise-linear functions over rationals make every
//! limit computable exactly from adjacent slope signs, so the theorem suite
//! in this module (trend value theorem, Rolle/Fermat/Darboux analogues, and
//! the semi-discrete fundamental theorem) runs with no floating tolerance.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::poly::rational_from_i64;
use crate::BigRational;

/// Errors from construction or evaluation of detachment-domain functions.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DetachError {
    /// A piecewise-linear function needs at least two breakpoints.
    #[error("need at least {min} breakpoints, got {got}")]
    TooFewBreakpoints { min: usize, got: usize },
    /// Breakpoint and value sequences must pair up.
    #[error("{xs} breakpoints paired with {ys} values")]
    MismatchedLengths { xs: usize, ys: usize },
    /// Breakpoint x-coordinates must strictly increase.
    #[error("breakpoint {0} does not increase the x-coordinate")]
    NonIncreasingBreakpoints(usize),
    /// The point lies outside the function's domain.
    #[error("the point lies outside the function's domain")]
    OutOfDomain,
    /// The requested one-sided detachment has no side to look at.
    #[error("no piece exists on the requested side of this point")]
    UndefinedSide,
    /// Interval endpoints must satisfy a < b within the domain.
    #[error("interval endpoints must satisfy a < b within the domain")]
    InvalidInterval,
    /// The semi-discrete fundamental theorem checker rejects flat pieces,
    /// whose boundary points have no specified role in the point list.
    #[error("piece {0} has zero slope; plateau semantics are unsupported")]
    FlatPiece(usize),
    /// The trend value theorem needs a level strictly between f(a) and f(b).
    #[error("the level must lie strictly between f(a) and f(b)")]
    LevelOutOfRange,
    /// The Rolle analogue needs equal values at the interval endpoints.
    #[error("f(a) and f(b) must be equal")]
    EndpointsDiffer,
    /// The queried point is not a local extremum of the required kind.
    #[error("the point is not a local extremum")]
    NotAnExtremum,
    /// A neighborhood must have positive radius.
    #[error("the neighborhood radius must be positive")]
    DegenerateNeighborhood,
    /// A sampled function needs at least two samples.
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    /// Sample spacing must be positive.
    #[error("the sample step must be positive")]
    NonPositiveStep,
    /// The sample index is out of range.
    #[error("sample index {0} is out of range")]
    SampleIndexOutOfRange(usize),
}

/// Which one-sided difference a sampled detachment takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Both sides of the semi-discrete fundamental theorem on an interval.
///
/// `lhs` integrates the piecewise-constant tendency directly; `rhs` is the
/// negated double sum of position-weighted one-sided detachments over the
/// points where the function is not signposted detachable. The theorem
/// asserts `residual = lhs − rhs = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FtcReport {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub residual: BigRational,
}

/// A continuous piecewise-linear function over exact rationals, linear
/// between strictly increasing breakpoints; the domain is the closed interval
/// from the first breakpoint to the last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinearFunction {
    xs: Vec<BigRational>,
    ys: Vec<BigRational>,
}

impl PiecewiseLinearFunction {
    /// Builds a function from paired breakpoints and values.
    pub fn new(xs: Vec<BigRational>, ys: Vec<BigRational>) -> Result<Self, DetachError> {
        if xs.len() != ys.len() {
            return Err(DetachError::MismatchedLengths {
                xs: xs.len(),
                ys: ys.len(),
            });
        }
        if xs.len() < 2 {
            return Err(DetachError::TooFewBreakpoints {
                min: 2,
                got: xs.len(),
            });
        }
        for (i, w) in xs.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(DetachError::NonIncreasingBreakpoints(i + 1));
            }
        }
        Ok(PiecewiseLinearFunction { xs, ys })
    }

    /// Convenience constructor from integer `(x, f(x))` pairs.
    pub fn from_int_points(points: &[(i64, i64)]) -> Result<Self, DetachError> {
        let xs = points.iter().map(|&(x, _)| rational_from_i64(x)).collect();
        let ys = points.iter().map(|&(_, y)| rational_from_i64(y)).collect();
        PiecewiseLinearFunction::new(xs, ys)
    }

    /// The breakpoint x-coordinates, strictly increasing.
    pub fn breakpoints(&self) -> &[BigRational] {
        &self.xs
    }

    /// The values at the breakpoints.
    pub fn values(&self) -> &[BigRational] {
        &self.ys
    }

    /// The closed domain `[first, last]`.
    pub fn domain(&self) -> (&BigRational, &BigRational) {
        (self.xs.first().unwrap(), self.xs.last().unwrap())
    }

    /// Evaluates the linear interpolant at `x`.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, DetachError> {
        let (first, last) = self.domain();
        if x < first || x > last {
            return Err(DetachError::OutOfDomain);
        }
        if x == last {
            return Ok(self.ys.last().unwrap().clone());
        }
        let i = self.xs.partition_point(|xi| xi <= x) - 1;
        let t = (x - &self.xs[i]) / (&self.xs[i + 1] - &self.xs[i]);
        Ok(&self.ys[i] + t * (&self.ys[i + 1] - &self.ys[i]))
    }

    /// The detachment from the right: the limit of `sgn[f(x+h) − f(x)]` for
    /// `h → 0⁺`, which for a piecewise-linear function is the sign of the
    /// slope of the piece immediately right of `x`.
    pub fn detach_plus(&self, x: &BigRational) -> Result<i8, DetachError> {
        let (first, last) = self.domain();
        if x < first || x > last {
            return Err(DetachError::OutOfDomain);
        }
        if x == last {
            return Err(DetachError::UndefinedSide);
        }
        let i = self.xs.partition_point(|xi| xi <= x) - 1;
        Ok(self.piece_sign(i))
    }

    /// The detachment from the left: the limit of `sgn[f(x+h) − f(x)]` for
    /// `h → 0⁻`, which equals the negated slope sign of the piece immediately
    /// left of `x` (earlier values of a rising piece are smaller).
    pub fn detach_minus(&self, x: &BigRational) -> Result<i8, DetachError> {
        let (first, last) = self.domain();
        if x < first || x > last {
            return Err(DetachError::OutOfDomain);
        }
        if x == first {
            return Err(DetachError::UndefinedSide);
        }
        let i = self.xs.partition_point(|xi| xi < x) - 1;
        Ok(-self.piece_sign(i))
    }

    /// The tendency `τ_f(x) = sgn[f⁺(x) − f⁻(x)]`: `+1` where the function
    /// rises through `x`, `−1` where it falls, `0` at extrema and plateaus.
    pub fn tendency(&self, x: &BigRational) -> Result<i8, DetachError> {
        let plus = self.detach_plus(x)?;
        let minus = self.detach_minus(x)?;
        Ok((plus - minus).signum())
    }

    /// All level-`v` crossings in `(a, b)` whose tendency matches the overall
    /// trend `sgn[f(b) − f(a)]`. The trend value theorem guarantees at least
    /// one such witness whenever `v` lies strictly between `f(a)` and `f(b)`.
    pub fn trend_value_witnesses(
        &self,
        a: &BigRational,
        b: &BigRational,
        v: &BigRational,
    ) -> Result<Vec<BigRational>, DetachError> {
        let (xs, ys) = self.restricted(a, b)?;
        let fa = ys.first().unwrap();
        let fb = ys.last().unwrap();
        let lo = fa.min(fb);
        let hi = fa.max(fb);
        if fa == fb || v <= lo || v >= hi {
            return Err(DetachError::LevelOutOfRange);
        }
        let target = sign_of(&(fb - fa));
        let mut crossings = BTreeSet::new();
        for i in 0..xs.len() - 1 {
            let (y0, y1) = (&ys[i], &ys[i + 1]);
            if y0 == y1 {
                // A flat piece at the level contributes only zero-tendency
                // points, never a witness.
                continue;
            }
            if v < y0.min(y1) || v > y0.max(y1) {
                continue;
            }
            let c = &xs[i] + (v - y0) * (&xs[i + 1] - &xs[i]) / (y1 - y0);
            crossings.insert(c);
        }
        let mut witnesses = Vec::new();
        for c in crossings {
            if self.tendency(&c)? == target {
                witnesses.push(c);
            }
        }
        Ok(witnesses)
    }

    /// A point `c ∈ (a, b)` with `τ_f(c) = 0`, which exists whenever
    /// `f(a) = f(b)` (the Rolle analogue).
    pub fn rolle_witness(
        &self,
        a: &BigRational,
        b: &BigRational,
    ) -> Result<BigRational, DetachError> {
        let (xs, ys) = self.restricted(a, b)?;
        if ys.first() != ys.last() {
            return Err(DetachError::EndpointsDiffer);
        }
        for x in &xs[1..xs.len() - 1] {
            if self.tendency(x)? == 0 {
                return Ok(x.clone());
            }
        }
        let half = BigRational::new(1.into(), 2.into());
        for w in xs.windows(2) {
            let mid = (&w[0] + &w[1]) * &half;
            if self.tendency(&mid)? == 0 {
                return Ok(mid);
            }
        }
        // If every breakpoint were signposted and every piece sloped, the
        // function would be strictly monotone on [a, b], contradicting
        // f(a) = f(b).
        unreachable!("equal endpoint values force a zero-tendency point")
    }

    /// Checks the Fermat analogue at a local extremum: returns whether
    /// `τ_f(x0) = 0`. Points where the two one-sided trends disagree —
    /// monotone crossings and plateau edges — are not extrema of the kind
    /// the theorem covers and are rejected.
    pub fn fermat_check(&self, x0: &BigRational) -> Result<bool, DetachError> {
        let plus = self.detach_plus(x0)?;
        let minus = self.detach_minus(x0)?;
        let minimum = plus >= 0 && minus >= 0;
        let maximum = plus <= 0 && minus <= 0;
        if (!minimum && !maximum) || plus != minus {
            return Err(DetachError::NotAnExtremum);
        }
        Ok(plus == minus)
    }

    /// The set of tendency values attained on `(x0 − radius, x0 + radius)`
    /// around a strict local extremum. The Darboux analogue asserts this is
    /// the full set `{−1, 0, +1}`.
    pub fn darboux_image(
        &self,
        x0: &BigRational,
        radius: &BigRational,
    ) -> Result<BTreeSet<i8>, DetachError> {
        if radius <= &BigRational::zero() {
            return Err(DetachError::DegenerateNeighborhood);
        }
        let lo = x0 - radius;
        let hi = x0 + radius;
        let (first, last) = self.domain();
        if &lo < first || &hi > last {
            return Err(DetachError::OutOfDomain);
        }
        let plus = self.detach_plus(x0)?;
        let minus = self.detach_minus(x0)?;
        let strict_extremum = (plus > 0 && minus > 0) || (plus < 0 && minus < 0);
        if !strict_extremum {
            return Err(DetachError::NotAnExtremum);
        }
        let mut boundaries = vec![lo.clone()];
        boundaries.extend(self.xs.iter().filter(|x| *x > &lo && *x < &hi).cloned());
        boundaries.push(hi.clone());
        let mut image = BTreeSet::new();
        for x in &boundaries[1..boundaries.len() - 1] {
            image.insert(self.tendency(x)?);
        }
        let half = BigRational::new(1.into(), 2.into());
        for w in boundaries.windows(2) {
            let mid = (&w[0] + &w[1]) * &half;
            image.insert(self.tendency(&mid)?);
        }
        Ok(image)
    }

    /// Evaluates both sides of the semi-discrete fundamental theorem on
    /// `[a, b]`:
    ///
    /// ```text
    /// ∫_a^b τ_f(x) dx = −[ Σ_{i<n} f⁺(xᵢ)·xᵢ + Σ_{i>1} f⁻(xᵢ)·xᵢ ]
    /// ```
    ///
    /// where `x₁ = a < … < xₙ = b` are the points at which `f` is not
    /// signposted detachable (interior extrema plus both endpoints). Inputs
    /// with a zero-slope piece are rejected rather than guessing how plateau
    /// boundaries enter the point list.
    pub fn semi_discrete_ftc(
        &self,
        a: &BigRational,
        b: &BigRational,
    ) -> Result<FtcReport, DetachError> {
        let (xs, ys) = self.restricted(a, b)?;
        for i in 0..xs.len() - 1 {
            if ys[i + 1] == ys[i] {
                return Err(DetachError::FlatPiece(i));
            }
        }
        let mut lhs = BigRational::zero();
        for i in 0..xs.len() - 1 {
            let tau = sign_of(&(&ys[i + 1] - &ys[i]));
            lhs += rational_from_i64(tau as i64) * (&xs[i + 1] - &xs[i]);
        }
        // Interior breakpoints where the function keeps strictly rising or
        // strictly falling are signposted (f⁺ = −f⁻ ≠ 0) and drop out of the
        // point list; what remains are the interior extrema and the two
        // endpoints.
        let mut points = vec![xs[0].clone()];
        for x in &xs[1..xs.len() - 1] {
            let plus = self.detach_plus(x)?;
            let minus = self.detach_minus(x)?;
            let signposted = plus != 0 && plus == -minus;
            if !signposted {
                points.push(x.clone());
            }
        }
        points.push(xs.last().unwrap().clone());
        let mut total = BigRational::zero();
        for x in &points[..points.len() - 1] {
            total += rational_from_i64(self.detach_plus(x)? as i64) * x;
        }
        for x in &points[1..] {
            total += rational_from_i64(self.detach_minus(x)? as i64) * x;
        }
        let rhs = -total;
        let residual = &lhs - &rhs;
        Ok(FtcReport { lhs, rhs, residual })
    }

    /// Sign of the slope of piece `i` (pieces are indexed by their left
    /// breakpoint).
    fn piece_sign(&self, i: usize) -> i8 {
        sign_of(&(&self.ys[i + 1] - &self.ys[i]))
    }

    /// Breakpoints and values of the restriction to `[a, b]`: `a`, the
    /// original breakpoints strictly inside, then `b`.
    fn restricted(
        &self,
        a: &BigRational,
        b: &BigRational,
    ) -> Result<(Vec<BigRational>, Vec<BigRational>), DetachError> {
        let (first, last) = self.domain();
        if a < first || b > last {
            return Err(DetachError::OutOfDomain);
        }
        if a >= b {
            return Err(DetachError::InvalidInterval);
        }
        let mut xs = vec![a.clone()];
        xs.extend(self.xs.iter().filter(|x| *x > a && *x < b).cloned());
        xs.push(b.clone());
        let ys = xs
            .iter()
            .map(|x| self.eval(x))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((xs, ys))
    }
}

/// A uniformly sampled function: the grid-scale surrogate for detachment,
/// using one-step differences with no limit refinement.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledFunction {
    samples: Vec<f64>,
    step: f64,
}

impl SampledFunction {
    /// Wraps a sample sequence with its positive grid spacing.
    pub fn new(samples: Vec<f64>, step: f64) -> Result<Self, DetachError> {
        if samples.len() < 2 {
            return Err(DetachError::TooFewSamples {
                min: 2,
                got: samples.len(),
            });
        }
        if step.partial_cmp(&0.0) != Some(Ordering::Greater) {
            return Err(DetachError::NonPositiveStep);
        }
        Ok(SampledFunction { samples, step })
    }

    /// The sample values.
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// The grid spacing.
    pub fn step(&self) -> f64 {
        self.step
    }

    /// One-step detachment surrogate at sample `index`: the sign of the
    /// difference to the neighbor on the requested side.
    pub fn detachment(&self, index: usize, side: Side) -> Result<i8, DetachError> {
        if index >= self.samples.len() {
            return Err(DetachError::SampleIndexOutOfRange(index));
        }
        let neighbor = match side {
            Side::Right => {
                if index + 1 >= self.samples.len() {
                    return Err(DetachError::UndefinedSide);
                }
                self.samples[index + 1]
            }
            Side::Left => {
                if index == 0 {
                    return Err(DetachError::UndefinedSide);
                }
                self.samples[index - 1]
            }
        };
        let diff = neighbor - self.samples[index];
        Ok(if diff > 0.0 {
            1
        } else if diff < 0.0 {
            -1
        } else {
            0
        })
    }
}

fn sign_of(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}
