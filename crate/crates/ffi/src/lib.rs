//! C ABI for the region-integration engine: opaque grid and summed-area-table
//! handles, rectangle-sum queries, and closed-boundary region integrals.
//!
//! Every function is null-safe and reports failures through [`SsStatus`];
//! out-parameters are written only on [`SsStatus::Ok`]. Handles are created
//! and released by this library only (`ss_*_new`/`ss_*_free` pairs); freeing
//! a null handle is a no-op. The generated header lives in
//! `include/slantsum.h`.

use std::os::raw::c_char;

use slantsum::curve::{LatticePolyline, SegmentMode};
use slantsum::grid::{build_sat, CellBox, GridError, GridFunction, SummedAreaTable};
use slantsum::point;
use slantsum::slanted::{region_integral, ScalarField, SlantedError};
use slantsum::{Point, Scalar};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SsStatus {
    /// The call succeeded and out-parameters are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Sizes or values violated a precondition (empty grid, length mismatch).
    InvalidArgument = 2,
    /// Coordinates referenced vertices or cells outside the grid.
    OutOfRange = 3,
    /// The exact result does not fit the 64-bit output type.
    Overflow = 4,
    /// The vertex list does not form a valid closed rectilinear boundary.
    InvalidCurve = 5,
    /// The boundary is valid but not positively oriented (counterclockwise).
    NotPositivelyOriented = 6,
}

/// Opaque handle to an integer grid (owned by the library).
pub struct SsGrid {
    grid: GridFunction<i64>,
}

/// Opaque handle to a summed-area table over an integer grid.
pub struct SsSat {
    sat: SummedAreaTable<i64>,
}

/// Creates a grid from `width * height` row-major values, row 0 at the
/// bottom. On success writes a handle to `out` and returns `Ok`; the handle
/// must be released with [`ss_grid_free`].
///
/// # Safety
/// `values` must point to `len` readable `int64_t`s and `out` to a writable
/// pointer slot.
#[no_mangle]
pub unsafe extern "C" fn ss_grid_new_i64(
    width: usize,
    height: usize,
    values: *const i64,
    len: usize,
    out: *mut *mut SsGrid,
) -> SsStatus {
    if values.is_null() || out.is_null() {
        return SsStatus::NullPointer;
    }
    let slice = std::slice::from_raw_parts(values, len);
    match GridFunction::from_values(width, height, slice.to_vec()) {
        Ok(grid) => {
            *out = Box::into_raw(Box::new(SsGrid { grid }));
            SsStatus::Ok
        }
        Err(e) => grid_error_status(&e),
    }
}

/// Releases a grid handle. Null is ignored.
///
/// # Safety
/// `grid` must be null or a handle produced by [`ss_grid_new_i64`] that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn ss_grid_free(grid: *mut SsGrid) {
    if !grid.is_null() {
        drop(Box::from_raw(grid));
    }
}

/// Builds the summed-area table of a grid. On success writes a handle to
/// `out`; release it with [`ss_sat_free`].
///
/// # Safety
/// `grid` must be a live grid handle and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn ss_sat_build(grid: *const SsGrid, out: *mut *mut SsSat) -> SsStatus {
    if grid.is_null() || out.is_null() {
        return SsStatus::NullPointer;
    }
    match build_sat(&(*grid).grid) {
        Ok(sat) => {
            *out = Box::into_raw(Box::new(SsSat { sat }));
            SsStatus::Ok
        }
        Err(e) => grid_error_status(&e),
    }
}

/// Releases a summed-area-table handle. Null is ignored.
///
/// # Safety
/// `sat` must be null or a handle produced by [`ss_sat_build`] that has not
/// been freed.
#[no_mangle]
pub unsafe extern "C" fn ss_sat_free(sat: *mut SsSat) {
    if !sat.is_null() {
        drop(Box::from_raw(sat));
    }
}

/// Sums the inclusive cell box `x0..=x1, y0..=y1` in constant time and
/// writes the exact result to `out`.
///
/// # Safety
/// `sat` must be a live table handle and `out` a writable `int64_t` slot.
#[no_mangle]
pub unsafe extern "C" fn ss_sat_rect_sum(
    sat: *const SsSat,
    x0: i64,
    y0: i64,
    x1: i64,
    y1: i64,
    out: *mut i64,
) -> SsStatus {
    if sat.is_null() || out.is_null() {
        return SsStatus::NullPointer;
    }
    match (*sat).sat.rect_sum(CellBox::new(x0, y0, x1, y1)) {
        Ok(total) => match i64::try_from(total) {
            Ok(value) => {
                *out = value;
                SsStatus::Ok
            }
            Err(_) => SsStatus::Overflow,
        },
        Err(e) => grid_error_status(&e),
    }
}

/// Integrates the grid over the region enclosed by a simple closed
/// counterclockwise rectilinear boundary given as `len` vertices
/// (`xs[i]`, `ys[i]`), without repeating the first vertex at the end.
/// Writes the exact cell sum to `out`.
///
/// # Safety
/// `grid` must be a live grid handle, `xs`/`ys` must point to `len` readable
/// `int64_t`s, and `out` must be a writable `int64_t` slot.
#[no_mangle]
pub unsafe extern "C" fn ss_region_integral(
    grid: *const SsGrid,
    xs: *const i64,
    ys: *const i64,
    len: usize,
    out: *mut i64,
) -> SsStatus {
    if grid.is_null() || xs.is_null() || ys.is_null() || out.is_null() {
        return SsStatus::NullPointer;
    }
    let xs = std::slice::from_raw_parts(xs, len);
    let ys = std::slice::from_raw_parts(ys, len);
    let vertices: Vec<Point> = xs.iter().zip(ys).map(|(&x, &y)| point(x, y)).collect();
    let boundary = match LatticePolyline::closed(vertices, SegmentMode::Rectilinear) {
        Ok(curve) => curve,
        Err(_) => return SsStatus::InvalidCurve,
    };
    let field = match ScalarField::from_grid_i64((*grid).grid.clone()) {
        Ok(field) => field,
        Err(e) => return grid_error_status(&e),
    };
    match region_integral(&boundary, &field) {
        Ok(Scalar::ExactHalves(doubled)) if doubled % 2 == 0 => match i64::try_from(doubled / 2) {
            Ok(value) => {
                *out = value;
                SsStatus::Ok
            }
            Err(_) => SsStatus::Overflow,
        },
        Ok(_) => SsStatus::Overflow,
        Err(e) => slanted_error_status(&e),
    }
}

/// A static, null-terminated name for a status code (for logging).
#[no_mangle]
pub extern "C" fn ss_status_name(status: SsStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        SsStatus::Ok => b"ok\0",
        SsStatus::NullPointer => b"null pointer\0",
        SsStatus::InvalidArgument => b"invalid argument\0",
        SsStatus::OutOfRange => b"out of range\0",
        SsStatus::Overflow => b"overflow\0",
        SsStatus::InvalidCurve => b"invalid curve\0",
        SsStatus::NotPositivelyOriented => b"not positively oriented\0",
    };
    name.as_ptr() as *const c_char
}

fn grid_error_status(e: &GridError) -> SsStatus {
    match e {
        GridError::EmptyGrid { .. } | GridError::ValueCountMismatch { .. } => {
            SsStatus::InvalidArgument
        }
        GridError::BoxOutOfRange { .. } | GridError::VertexOutOfRange { .. } => {
            SsStatus::OutOfRange
        }
        GridError::Overflow => SsStatus::Overflow,
    }
}

fn slanted_error_status(e: &SlantedError) -> SsStatus {
    match e {
        SlantedError::Grid(grid) => grid_error_status(grid),
        SlantedError::Curve(_) => SsStatus::InvalidCurve,
        SlantedError::NotClosed | SlantedError::NotPositivelyOriented => {
            SsStatus::NotPositivelyOriented
        }
        _ => SsStatus::InvalidArgument,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_names_are_null_terminated_statics() {
        let name = ss_status_name(SsStatus::Overflow);
        let text = unsafe { std::ffi::CStr::from_ptr(name) };
        assert_eq!(text.to_str().unwrap(), "overflow");
    }
}
