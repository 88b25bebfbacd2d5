//! Exercises the C ABI exactly as a C caller would: raw pointers, handle
//! lifecycles, status codes, and out-parameters.

use std::ffi::CStr;
use std::ptr;

use slantsum_ffi::{
    ss_grid_free, ss_grid_new_i64, ss_region_integral, ss_sat_build, ss_sat_free, ss_sat_rect_sum,
    ss_status_name, SsGrid, SsSat, SsStatus,
};

/// Builds the 3x3 grid 1..=9 (row 0 at the bottom) and returns its handle.
unsafe fn nine_grid() -> *mut SsGrid {
    let values: Vec<i64> = (1..=9).collect();
    let mut grid: *mut SsGrid = ptr::null_mut();
    let status = ss_grid_new_i64(3, 3, values.as_ptr(), values.len(), &mut grid);
    assert_eq!(status, SsStatus::Ok);
    assert!(!grid.is_null());
    grid
}

#[test]
fn rect_sum_matches_hand_totals() {
    unsafe {
        let grid = nine_grid();
        let mut sat: *mut SsSat = ptr::null_mut();
        assert_eq!(ss_sat_build(grid, &mut sat), SsStatus::Ok);

        let mut out = 0i64;
        assert_eq!(ss_sat_rect_sum(sat, 0, 0, 2, 2, &mut out), SsStatus::Ok);
        assert_eq!(out, 45);
        assert_eq!(ss_sat_rect_sum(sat, 1, 1, 2, 2, &mut out), SsStatus::Ok);
        assert_eq!(out, 5 + 6 + 8 + 9);
        assert_eq!(ss_sat_rect_sum(sat, 0, 0, 0, 0, &mut out), SsStatus::Ok);
        assert_eq!(out, 1);

        ss_sat_free(sat);
        ss_grid_free(grid);
    }
}

#[test]
fn rect_sum_rejects_out_of_range_boxes() {
    unsafe {
        let grid = nine_grid();
        let mut sat: *mut SsSat = ptr::null_mut();
        assert_eq!(ss_sat_build(grid, &mut sat), SsStatus::Ok);

        let mut out = 77i64;
        assert_eq!(
            ss_sat_rect_sum(sat, 0, 0, 3, 2, &mut out),
            SsStatus::OutOfRange
        );
        assert_eq!(
            ss_sat_rect_sum(sat, 2, 0, 1, 2, &mut out),
            SsStatus::OutOfRange
        );
        // Out-parameter untouched on failure.
        assert_eq!(out, 77);

        ss_sat_free(sat);
        ss_grid_free(grid);
    }
}

#[test]
fn grid_construction_validates_inputs() {
    unsafe {
        let values = [1i64, 2, 3];
        let mut grid: *mut SsGrid = ptr::null_mut();
        assert_eq!(
            ss_grid_new_i64(2, 2, values.as_ptr(), values.len(), &mut grid),
            SsStatus::InvalidArgument
        );
        assert_eq!(
            ss_grid_new_i64(0, 2, values.as_ptr(), 0, &mut grid),
            SsStatus::InvalidArgument
        );
        assert_eq!(
            ss_grid_new_i64(2, 2, ptr::null(), 4, &mut grid),
            SsStatus::NullPointer
        );
        assert!(grid.is_null());
    }
}

#[test]
fn null_handles_are_rejected_and_free_ignores_null() {
    unsafe {
        let mut sat: *mut SsSat = ptr::null_mut();
        assert_eq!(ss_sat_build(ptr::null(), &mut sat), SsStatus::NullPointer);

        let mut out = 0i64;
        assert_eq!(
            ss_sat_rect_sum(ptr::null(), 0, 0, 0, 0, &mut out),
            SsStatus::NullPointer
        );

        ss_grid_free(ptr::null_mut());
        ss_sat_free(ptr::null_mut());
    }
}

#[test]
fn region_integral_agrees_with_rect_sum_on_rectangles() {
    unsafe {
        let grid = nine_grid();
        // Counterclockwise boundary of the full 3x3 cell area.
        let xs = [0i64, 3, 3, 0];
        let ys = [0i64, 0, 3, 3];
        let mut out = 0i64;
        assert_eq!(
            ss_region_integral(grid, xs.as_ptr(), ys.as_ptr(), 4, &mut out),
            SsStatus::Ok
        );
        assert_eq!(out, 45);
        ss_grid_free(grid);
    }
}

#[test]
fn region_integral_handles_an_l_shaped_boundary() {
    unsafe {
        let grid = nine_grid();
        // L-shape: the full square minus its top-right cell.
        let xs = [0i64, 3, 3, 2, 2, 0];
        let ys = [0i64, 0, 2, 2, 3, 3];
        let mut out = 0i64;
        assert_eq!(
            ss_region_integral(grid, xs.as_ptr(), ys.as_ptr(), 6, &mut out),
            SsStatus::Ok
        );
        assert_eq!(out, 45 - 9);
        ss_grid_free(grid);
    }
}

#[test]
fn region_integral_reports_orientation_and_curve_errors() {
    unsafe {
        let grid = nine_grid();
        let mut out = 0i64;

        // Clockwise square.
        let xs = [0i64, 0, 3, 3];
        let ys = [0i64, 3, 3, 0];
        assert_eq!(
            ss_region_integral(grid, xs.as_ptr(), ys.as_ptr(), 4, &mut out),
            SsStatus::NotPositivelyOriented
        );

        // Diagonal segment: not a rectilinear boundary.
        let xs = [0i64, 3, 0];
        let ys = [0i64, 0, 3];
        assert_eq!(
            ss_region_integral(grid, xs.as_ptr(), ys.as_ptr(), 3, &mut out),
            SsStatus::InvalidCurve
        );

        // Too few vertices to close a loop.
        let xs = [0i64, 3];
        let ys = [0i64, 0];
        assert_eq!(
            ss_region_integral(grid, xs.as_ptr(), ys.as_ptr(), 2, &mut out),
            SsStatus::InvalidCurve
        );

        assert_eq!(
            ss_region_integral(ptr::null(), xs.as_ptr(), ys.as_ptr(), 2, &mut out),
            SsStatus::NullPointer
        );

        ss_grid_free(grid);
    }
}

#[test]
fn status_names_cover_every_code() {
    let codes = [
        (SsStatus::Ok, "ok"),
        (SsStatus::NullPointer, "null pointer"),
        (SsStatus::InvalidArgument, "invalid argument"),
        (SsStatus::OutOfRange, "out of range"),
        (SsStatus::Overflow, "overflow"),
        (SsStatus::InvalidCurve, "invalid curve"),
        (SsStatus::NotPositivelyOriented, "not positively oriented"),
    ];
    for (code, expected) in codes {
        let name = unsafe { CStr::from_ptr(ss_status_name(code)) };
        assert_eq!(name.to_str().unwrap(), expected);
    }
}
