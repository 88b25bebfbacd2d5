//! Brute-force ground truth, kept deliberately independent of the fast paths:
//! direct summation loops (no cumulative tables), even-odd scanline
//! rasterization, and exact fan-triangulation integration of polynomials over
//! polygons.

use std::collections::BTreeSet;

use num_traits::Zero;
use thiserror::Error;

use crate::curve::LatticePolyline;
use crate::grid::{GridFunction, GridValue};
use crate::poly::BivariatePoly;
use crate::{BigRational, Point};

/// Errors from oracle evaluation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// A cell of the queried set lies outside the grid.
    #[error("cell ({0}, {1}) is outside the grid")]
    CellOutOfRange(i64, i64),
    /// Rasterization requires a closed curve.
    #[error("rasterization requires a closed polyline")]
    OpenCurve,
    /// Rasterization is defined for axis-parallel boundaries only.
    #[error("rasterization requires a rectilinear polyline")]
    NotRectilinear,
    /// Accumulator overflow while summing (integer grids).
    #[error("overflow while accumulating the brute-force sum")]
    Overflow,
}

/// Sums grid values over an explicit cell set by direct lookup — no
/// summed-area table anywhere near this code path.
pub fn brute_region_sum<T: GridValue>(
    cells: impl IntoIterator<Item = (i64, i64)>,
    grid: &GridFunction<T>,
) -> Result<T::Acc, OracleError> {
    let mut total = T::acc_zero();
    for (x, y) in cells {
        let value = grid.cell(x, y).ok_or(OracleError::CellOutOfRange(x, y))?;
        total = T::acc_add(total, T::widen(value)).map_err(|_| OracleError::Overflow)?;
    }
    Ok(total)
}

/// The set of unit cells enclosed by a simple closed rectilinear polyline,
/// decided by the even-odd rule at each cell center: a cell is inside when a
/// leftward ray from its center crosses an odd number of vertical boundary
/// segments.
pub fn rasterize(boundary: &LatticePolyline) -> Result<BTreeSet<(i64, i64)>, OracleError> {
    if !boundary.is_closed() {
        return Err(OracleError::OpenCurve);
    }
    let mut verticals: Vec<(i64, i64, i64)> = Vec::new();
    for i in 0..boundary.segment_count() {
        let (p, q) = boundary.segment(i);
        if p.x == q.x {
            verticals.push((p.x, p.y.min(q.y), p.y.max(q.y)));
        } else if p.y != q.y {
            return Err(OracleError::NotRectilinear);
        }
    }
    let xs: Vec<i64> = boundary.vertices().iter().map(|v| v.x).collect();
    let ys: Vec<i64> = boundary.vertices().iter().map(|v| v.y).collect();
    let (x_min, x_max) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (y_min, y_max) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    let mut cells = BTreeSet::new();
    for cy in y_min..y_max {
        for cx in x_min..x_max {
            // Center (cx + ½, cy + ½); a vertical segment at x' is crossed
            // when x' ≤ cx and its open y-interval contains cy + ½.
            let crossings = verticals
                .iter()
                .filter(|&&(x, lo, hi)| x <= cx && lo <= cy && cy < hi)
                .count();
            if crossings % 2 == 1 {
                cells.insert((cx, cy));
            }
        }
    }
    Ok(cells)
}

/// Exact `∬_p f` over a polygon given by its vertex cycle, via fan
/// triangulation from the first vertex and closed-form monomial moments over
/// each triangle. Orientation-signed: positive for counterclockwise `p`.
/// Degenerate (zero-area) triangles contribute nothing.
pub fn polygon_integral(f: &BivariatePoly, polygon: &[Point]) -> BigRational {
    let mut total = BigRational::zero();
    if polygon.len() < 3 {
        return total;
    }
    let a = polygon[0];
    for window in polygon[1..].windows(2) {
        total += triangle_integral(f, a, window[0], window[1]);
    }
    total
}

/// Exact `∬ f` over the (signed) triangle `a, b, c`: map the unit simplex
/// through `(x, y) = a + u·(b−a) + v·(c−a)`, expand the monomials, and apply
/// `∬_simplex u^p v^q du dv = p! q! / (p+q+2)!`.
fn triangle_integral(f: &BivariatePoly, a: Point, b: Point, c: Point) -> BigRational {
    let jacobian =
        (b.x - a.x) as i128 * (c.y - a.y) as i128 - (b.y - a.y) as i128 * (c.x - a.x) as i128;
    if jacobian == 0 {
        return BigRational::zero();
    }
    let ax = big(a.x);
    let ay = big(a.y);
    let bx = big(b.x - a.x);
    let by = big(b.y - a.y);
    let cx = big(c.x - a.x);
    let cy = big(c.y - a.y);
    let mut total = BigRational::zero();
    for (coeff, m, n) in f.terms() {
        let x_terms = trinomial_expansion(&ax, &bx, &cx, m);
        let y_terms = trinomial_expansion(&ay, &by, &cy, n);
        let mut term_sum = BigRational::zero();
        for (xc, xi, xj) in &x_terms {
            for (yc, yi, yj) in &y_terms {
                term_sum += xc * yc * simplex_moment(xi + yi, xj + yj);
            }
        }
        total += coeff * term_sum;
    }
    total * BigRational::from_integer(jacobian.into())
}

/// Expands `(a + b·u + c·v)^m` into `(coefficient, u-power, v-power)` terms.
fn trinomial_expansion(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    m: u32,
) -> Vec<(BigRational, u32, u32)> {
    let mut terms = Vec::new();
    for i in 0..=m {
        for j in 0..=(m - i) {
            let k = m - i - j;
            let multinomial = factorial(m) / (factorial(i) * factorial(j) * factorial(k));
            let coeff = multinomial * pow_rational(a, k) * pow_rational(b, i) * pow_rational(c, j);
            if !coeff.is_zero() {
                terms.push((coeff, i, j));
            }
        }
    }
    terms
}

/// `∬ over the unit simplex of u^p v^q = p! q! / (p+q+2)!`.
fn simplex_moment(p: u32, q: u32) -> BigRational {
    factorial(p) * factorial(q) / factorial(p + q + 2)
}

fn factorial(n: u32) -> BigRational {
    let mut value = 1i64;
    for k in 2..=n as i64 {
        value *= k;
    }
    BigRational::from_integer(value.into())
}

fn pow_rational(base: &BigRational, exponent: u32) -> BigRational {
    let mut out = BigRational::from_integer(1.into());
    for _ in 0..exponent {
        out *= base;
    }
    out
}

fn big(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}
