//! Rectilinear domains (finite unions of axis-aligned cell boxes) and their
//! corner calculus.
//!
//! Every lattice vertex `v` of a domain `D` carries a coefficient
//! `α_D(v) ∈ {0, ±1, ±2}` determined by which of the four cells around `v`
//! belong to `D`. The corner-sum identity says the integral of a field over
//! `D` equals `Σ α_D(v)·F(v)` over the corner vertices, where `F` is the
//! field's antiderivative evaluated at lattice vertices — four terms for a
//! plain rectangle, and `O(perimeter)` terms in general, regardless of the
//! domain's area.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::grid::CellBox;
use crate::slanted::{ScalarField, SlantedError};
use crate::{Point, Scalar};

/// Errors from rectilinear-domain construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DomainError {
    /// A domain must contain at least one cell.
    #[error("a rectilinear domain needs at least one box")]
    Empty,
    /// A box with inverted corners was supplied.
    #[error("cell box {0} has inverted corners")]
    InvalidBox(CellBox),
}

/// A nonzero corner of a rectilinear domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerEntry {
    pub vertex: Point,
    /// The corner coefficient; never zero in a corner list.
    pub alpha: i32,
}

/// A finite union of axis-aligned cell boxes, stored as a deduplicated cell
/// set. Two domains are equal exactly when their cell sets are equal; the box
/// decomposition used to build them is forgotten.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectilinearDomain {
    cells: BTreeSet<(i64, i64)>,
    bounding_box: CellBox,
}

impl RectilinearDomain {
    /// Builds the union of the given inclusive cell boxes.
    pub fn from_boxes(boxes: &[CellBox]) -> Result<Self, DomainError> {
        if boxes.is_empty() {
            return Err(DomainError::Empty);
        }
        let mut cells = BTreeSet::new();
        for b in boxes {
            if !b.is_ordered() {
                return Err(DomainError::InvalidBox(*b));
            }
            cells.extend(b.cells());
        }
        Ok(Self::from_cell_set(cells))
    }

    /// Builds a domain directly from a cell set (useful for comparing against
    /// rasterized regions).
    pub fn from_cells(cells: impl IntoIterator<Item = (i64, i64)>) -> Result<Self, DomainError> {
        let cells: BTreeSet<(i64, i64)> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(DomainError::Empty);
        }
        Ok(Self::from_cell_set(cells))
    }

    fn from_cell_set(cells: BTreeSet<(i64, i64)>) -> Self {
        let mut bounding_box = CellBox::new(i64::MAX, i64::MAX, i64::MIN, i64::MIN);
        for &(x, y) in &cells {
            bounding_box.x0 = bounding_box.x0.min(x);
            bounding_box.y0 = bounding_box.y0.min(y);
            bounding_box.x1 = bounding_box.x1.max(x);
            bounding_box.y1 = bounding_box.y1.max(y);
        }
        RectilinearDomain {
            cells,
            bounding_box,
        }
    }

    /// Number of cells in the domain.
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// True when cell `(x, y)` belongs to the domain.
    pub fn contains_cell(&self, x: i64, y: i64) -> bool {
        self.cells.contains(&(x, y))
    }

    /// The cells of the domain in lexicographic order.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.cells.iter().copied()
    }

    /// The smallest inclusive cell box containing the domain.
    pub fn bounding_box(&self) -> CellBox {
        self.bounding_box
    }

    /// The corner coefficient of lattice vertex `v`:
    /// `I(−−) + I(++) − I(+−) − I(−+)`, where each indicator reports whether
    /// the cell in that quadrant around `v` belongs to the domain. Vertices
    /// far from the domain simply yield 0.
    pub fn alpha_at_vertex(&self, v: Point) -> i32 {
        let below_left = self.contains_cell(v.x - 1, v.y - 1) as i32;
        let above_right = self.contains_cell(v.x, v.y) as i32;
        let below_right = self.contains_cell(v.x, v.y - 1) as i32;
        let above_left = self.contains_cell(v.x - 1, v.y) as i32;
        below_left + above_right - below_right - above_left
    }

    /// All vertices with nonzero corner coefficient, sorted lexicographically
    /// (by `x`, then `y`).
    pub fn corners(&self) -> Vec<CornerEntry> {
        let mut candidates = BTreeSet::new();
        for &(x, y) in &self.cells {
            candidates.insert(Point::new(x, y));
            candidates.insert(Point::new(x + 1, y));
            candidates.insert(Point::new(x, y + 1));
            candidates.insert(Point::new(x + 1, y + 1));
        }
        candidates
            .into_iter()
            .filter_map(|vertex| {
                let alpha = self.alpha_at_vertex(vertex);
                (alpha != 0).then_some(CornerEntry { vertex, alpha })
            })
            .collect()
    }

    /// Integrates the field over the domain by the corner-sum identity:
    /// `Σ α_D(v)·F(v)` over [`corners`](Self::corners). Exact in integer and
    /// polynomial modes.
    pub fn antiderivative_sum(&self, field: &ScalarField) -> Result<Scalar, SlantedError> {
        let mut total = Scalar::ZERO;
        for corner in self.corners() {
            let f = field.antiderivative(corner.vertex)?;
            total = total + f.scale_int(corner.alpha as i64);
        }
        Ok(total)
    }
}
