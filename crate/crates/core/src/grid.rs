//! Summed-area tables: linear-time construction, constant-time box sums.
//!
//! A [`SummedAreaTable`] stores, for every lattice vertex `(x, y)` of a grid,
//! the cumulative sum of all cell values strictly below and to the left of the
//! vertex. Any inclusive cell box then sums with four lookups and three
//! additions ([`SummedAreaTable::rect_sum`]). The cumulative table is exactly
//! the discrete antiderivative `F` used by the corner-sum identities in
//! [`rectdomain`](crate::rectdomain) and [`slanted`](crate::slanted).
//!
//! Two value kinds are supported: exact `i64` cells accumulated in checked
//! `i128` (overflow is reported, never wrapped), and `f64` cells accumulated
//! with Neumaier-compensated prefix sums to curb cancellation drift.

use std::fmt;

use thiserror::Error;

/// Errors from grid construction and summed-area-table queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    /// Grid dimensions must both be at least one cell.
    #[error("grid dimensions must be positive, got {width}x{height}")]
    EmptyGrid { width: usize, height: usize },
    /// The flat value buffer does not match `width × height`.
    #[error("expected {expected} values for a {width}x{height} grid, got {got}")]
    ValueCountMismatch {
        width: usize,
        height: usize,
        expected: usize,
        got: usize,
    },
    /// A queried cell box is inverted or sticks out of the grid.
    #[error(
        "cell box x {x0}..={x1}, y {y0}..={y1} is not a valid box within a {width}x{height} grid"
    )]
    BoxOutOfRange {
        x0: i64,
        y0: i64,
        x1: i64,
        y1: i64,
        width: usize,
        height: usize,
    },
    /// A queried lattice vertex lies outside the table.
    #[error("vertex ({x}, {y}) is outside the vertex extent of a {width}x{height} grid")]
    VertexOutOfRange {
        x: i64,
        y: i64,
        width: usize,
        height: usize,
    },
    /// Integer accumulation exceeded the 128-bit accumulator.
    #[error("integer overflow while accumulating cell sums")]
    Overflow,
}

mod private {
    pub trait Sealed {}
    impl Sealed for i64 {}
    impl Sealed for f64 {}
}

/// Cell value kinds a grid can carry. Implemented for `i64` (exact, checked
/// 128-bit accumulation) and `f64` (compensated binary64 accumulation); the
/// trait is sealed.
pub trait GridValue:
    private::Sealed + Copy + PartialEq + PartialOrd + fmt::Debug + fmt::Display + 'static
{
    /// Accumulator type for cumulative sums of this cell type.
    type Acc: Copy + PartialEq + PartialOrd + fmt::Debug + fmt::Display + 'static;

    #[doc(hidden)]
    fn acc_zero() -> Self::Acc;
    #[doc(hidden)]
    fn acc_add(a: Self::Acc, b: Self::Acc) -> Result<Self::Acc, GridError>;
    #[doc(hidden)]
    fn acc_sub(a: Self::Acc, b: Self::Acc) -> Result<Self::Acc, GridError>;
    #[doc(hidden)]
    fn widen(value: Self) -> Self::Acc;
    /// Builds the `(width+1)×(height+1)` cumulative table, row-major with the
    /// sentinel row/column at index 0.
    #[doc(hidden)]
    fn build_cumulative(
        width: usize,
        height: usize,
        values: &[Self],
    ) -> Result<Vec<Self::Acc>, GridError>;
}

impl GridValue for i64 {
    // 128-bit accumulation: |cumulative| ≤ 2^63 · cells, and no allocatable
    // grid reaches 2^64 cells, so overflow is unreachable in practice; the
    // checked arithmetic still guards the invariant rather than wrapping.
    type Acc = i128;

    fn acc_zero() -> i128 {
        0
    }

    fn acc_add(a: i128, b: i128) -> Result<i128, GridError> {
        a.checked_add(b).ok_or(GridError::Overflow)
    }

    fn acc_sub(a: i128, b: i128) -> Result<i128, GridError> {
        a.checked_sub(b).ok_or(GridError::Overflow)
    }

    fn widen(value: i64) -> i128 {
        value as i128
    }

    fn build_cumulative(
        width: usize,
        height: usize,
        values: &[i64],
    ) -> Result<Vec<i128>, GridError> {
        let w1 = width + 1;
        let mut cumulative = vec![0i128; w1 * (height + 1)];
        for y in 0..height {
            for x in 0..width {
                // c[x+1][y+1] = v(x,y) + c[x][y+1] + c[x+1][y] − c[x][y]
                let v = values[y * width + x] as i128;
                let left = cumulative[(y + 1) * w1 + x];
                let below = cumulative[y * w1 + (x + 1)];
                let diagonal = cumulative[y * w1 + x];
                let s = Self::acc_sub(Self::acc_add(Self::acc_add(v, left)?, below)?, diagonal)?;
                cumulative[(y + 1) * w1 + (x + 1)] = s;
            }
        }
        Ok(cumulative)
    }
}

/// Running sum with Neumaier compensation: tracks the low-order bits lost by
/// each addition and folds them back in when the value is read.
#[derive(Clone, Copy, Default)]
struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.compensation += (self.sum - t) + v;
        } else {
            self.compensation += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl GridValue for f64 {
    type Acc = f64;

    fn acc_zero() -> f64 {
        0.0
    }

    fn acc_add(a: f64, b: f64) -> Result<f64, GridError> {
        Ok(a + b)
    }

    fn acc_sub(a: f64, b: f64) -> Result<f64, GridError> {
        Ok(a - b)
    }

    fn widen(value: f64) -> f64 {
        value
    }

    fn build_cumulative(
        width: usize,
        height: usize,
        values: &[f64],
    ) -> Result<Vec<f64>, GridError> {
        let w1 = width + 1;
        let mut cumulative = vec![0.0f64; w1 * (height + 1)];
        // Two compensated stages: a running prefix along each row, folded into
        // per-column compensated sums down the rows. Each table entry is then
        // a fully compensated double prefix rather than a long naive chain.
        let mut columns = vec![CompensatedSum::default(); width];
        for y in 0..height {
            let mut row = CompensatedSum::default();
            for x in 0..width {
                row.add(values[y * width + x]);
                columns[x].add(row.value());
                cumulative[(y + 1) * w1 + (x + 1)] = columns[x].value();
            }
        }
        Ok(cumulative)
    }
}

/// A rectangular grid of cell values. Cell `(x, y)` is valid for
/// `0 ≤ x < width`, `0 ≤ y < height`; `y` grows upward.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction<T: GridValue> {
    width: usize,
    height: usize,
    values: Vec<T>,
}

impl<T: GridValue> GridFunction<T> {
    /// Builds a grid from row-major values (row 0 = bottom row, `y = 0`).
    pub fn from_values(width: usize, height: usize, values: Vec<T>) -> Result<Self, GridError> {
        if width == 0 || height == 0 {
            return Err(GridError::EmptyGrid { width, height });
        }
        let expected = width * height;
        if values.len() != expected {
            return Err(GridError::ValueCountMismatch {
                width,
                height,
                expected,
                got: values.len(),
            });
        }
        Ok(GridFunction {
            width,
            height,
            values,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// The value at cell `(x, y)`, or `None` outside the grid.
    pub fn cell(&self, x: i64, y: i64) -> Option<T> {
        if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
            None
        } else {
            Some(self.values[y as usize * self.width + x as usize])
        }
    }

    /// Row-major cell values (row 0 = bottom).
    pub fn values(&self) -> &[T] {
        &self.values
    }
}

/// An inclusive, axis-aligned box of cells: `x0..=x1 × y0..=y1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CellBox {
    pub x0: i64,
    pub y0: i64,
    pub x1: i64,
    pub y1: i64,
}

impl CellBox {
    pub const fn new(x0: i64, y0: i64, x1: i64, y1: i64) -> Self {
        CellBox { x0, y0, x1, y1 }
    }

    /// True when the corner order is consistent (`x0 ≤ x1`, `y0 ≤ y1`).
    pub fn is_ordered(&self) -> bool {
        self.x0 <= self.x1 && self.y0 <= self.y1
    }

    /// Iterates the cells of the box in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        let b = *self;
        (b.y0..=b.y1).flat_map(move |y| (b.x0..=b.x1).map(move |x| (x, y)))
    }
}

impl fmt::Display for CellBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..={}]x[{}..={}]", self.x0, self.x1, self.y0, self.y1)
    }
}

/// The cumulative-sum table of a grid: entry `(x, y)` (vertex-indexed, with a
/// zero sentinel row and column at index 0) holds the sum of all cell values
/// `(x', y')` with `x' < x` and `y' < y`.
#[derive(Clone, Debug, PartialEq)]
pub struct SummedAreaTable<T: GridValue> {
    width: usize,
    height: usize,
    cumulative: Vec<T::Acc>,
}

/// Builds the summed-area table of a grid in one pass over the cells.
pub fn build_sat<T: GridValue>(grid: &GridFunction<T>) -> Result<SummedAreaTable<T>, GridError> {
    let cumulative = T::build_cumulative(grid.width, grid.height, &grid.values)?;
    Ok(SummedAreaTable {
        width: grid.width,
        height: grid.height,
        cumulative,
    })
}

impl<T: GridValue> SummedAreaTable<T> {
    /// Width of the source grid in cells (the table has `width + 1` columns).
    pub fn width(&self) -> usize {
        self.width
    }

    /// Height of the source grid in cells (the table has `height + 1` rows).
    pub fn height(&self) -> usize {
        self.height
    }

    /// The cumulative sum at lattice vertex `(x, y)`: total over cells
    /// strictly below-left of the vertex. This is the discrete antiderivative
    /// `F(v)`. Valid for `0 ≤ x ≤ width`, `0 ≤ y ≤ height`.
    pub fn vertex_sum(&self, x: i64, y: i64) -> Result<T::Acc, GridError> {
        if x < 0 || y < 0 || x > self.width as i64 || y > self.height as i64 {
            return Err(GridError::VertexOutOfRange {
                x,
                y,
                width: self.width,
                height: self.height,
            });
        }
        Ok(self.cumulative[y as usize * (self.width + 1) + x as usize])
    }

    /// Sum of the cell values over an inclusive box: four lookups, three
    /// additions/subtractions.
    pub fn rect_sum(&self, cells: CellBox) -> Result<T::Acc, GridError> {
        let CellBox { x0, y0, x1, y1 } = cells;
        if !cells.is_ordered()
            || x0 < 0
            || y0 < 0
            || x1 >= self.width as i64
            || y1 >= self.height as i64
        {
            return Err(GridError::BoxOutOfRange {
                x0,
                y0,
                x1,
                y1,
                width: self.width,
                height: self.height,
            });
        }
        let w1 = self.width + 1;
        let (x0, y0, x1, y1) = (x0 as usize, y0 as usize, x1 as usize, y1 as usize);
        let top_right = self.cumulative[(y1 + 1) * w1 + (x1 + 1)];
        let bottom_left = self.cumulative[y0 * w1 + x0];
        let top_left = self.cumulative[(y1 + 1) * w1 + x0];
        let bottom_right = self.cumulative[y0 * w1 + (x1 + 1)];
        T::acc_sub(
            T::acc_sub(T::acc_add(top_right, bottom_left)?, top_left)?,
            bottom_right,
        )
    }

    /// The classical corner-difference form
    /// `C(b,d) + C(a,c) − C(a,d) − C(b,c)`, where `C(x, y)` is the
    /// *cell-inclusive* prefix (the sum over cells `cx ≤ x, cy ≤ y`).
    ///
    /// Read literally this sums the *half-open* cell box `(a, b] × (c, d]`:
    /// it collapses to zero when `a = b` or `c = d`. [`rect_sum`] instead
    /// takes an inclusive box; this form is kept for fidelity checks against
    /// the classical formulation. Requires `a ≤ b` and `c ≤ d`, with
    /// `-1 ≤ a ≤ b ≤ width − 1` and `-1 ≤ c ≤ d ≤ height − 1`.
    ///
    /// [`rect_sum`]: SummedAreaTable::rect_sum
    pub fn rect_sum_halfopen(&self, a: i64, b: i64, c: i64, d: i64) -> Result<T::Acc, GridError> {
        if a > b || c > d {
            return Err(GridError::BoxOutOfRange {
                x0: a,
                y0: c,
                x1: b,
                y1: d,
                width: self.width,
                height: self.height,
            });
        }
        let top_right = self.vertex_sum(b + 1, d + 1)?;
        let bottom_left = self.vertex_sum(a + 1, c + 1)?;
        let top_left = self.vertex_sum(a + 1, d + 1)?;
        let bottom_right = self.vertex_sum(b + 1, c + 1)?;
        T::acc_sub(
            T::acc_sub(T::acc_add(top_right, bottom_left)?, top_left)?,
            bottom_right,
        )
    }

    /// Raw cumulative entries, row-major `(width+1)×(height+1)` with row 0 at
    /// the bottom (`y = 0`).
    pub fn cumulative(&self) -> &[T::Acc] {
        &self.cumulative
    }
}
