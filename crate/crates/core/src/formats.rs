//! File formats for the command-line tools: PGM images (ASCII `P2` and
//! binary `P5`), CSV grids, and the line-oriented domain files describing
//! query geometry.
//!
//! Everything here works on in-memory bytes and strings; callers own the
//! actual file I/O. Images arrive with row 0 at the top, while grids index
//! rows bottom-up, so both readers flip the row order.

use std::fmt::Display;

use thiserror::Error;

use crate::detach::{DetachError, PiecewiseLinearFunction};
use crate::grid::{CellBox, GridFunction, GridValue, SummedAreaTable};
use crate::poly::{parse_rational, BivariatePoly, PolyError};
use crate::{point, Point};

/// Errors from parsing images or domain files.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    /// A malformed image header, located by byte offset.
    #[error("malformed header at byte {offset}: {message}")]
    Header { offset: usize, message: String },
    /// A malformed pixel value, located by byte offset.
    #[error("bad pixel data at byte {offset}: {message}")]
    Pixel { offset: usize, message: String },
    /// The binary payload ended before width×height pixels were read.
    #[error("unexpected end of pixel data")]
    UnexpectedEndOfPixelData,
    /// PGM supports maxval 1..=65535.
    #[error("maxval {0} is out of range (1..=65535)")]
    UnsupportedMaxval(u32),
    /// A malformed CSV cell or row, located by 1-based line number.
    #[error("csv line {line}: {message}")]
    Csv { line: usize, message: String },
    /// A malformed domain-file record, located by 1-based line number.
    #[error("domain file line {line}: {message}")]
    Domain { line: usize, message: String },
    /// A domain file must contain a geometry record.
    #[error("domain file contains no geometry record")]
    MissingGeometry,
    /// A domain file must describe exactly one kind of geometry.
    #[error("domain file mixes or repeats geometry kinds")]
    ConflictingGeometry,
    /// The parsed geometry failed semantic validation.
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
}

impl From<PolyError> for FormatError {
    fn from(e: PolyError) -> Self {
        FormatError::InvalidGeometry(e.to_string())
    }
}

impl From<DetachError> for FormatError {
    fn from(e: DetachError) -> Self {
        FormatError::InvalidGeometry(e.to_string())
    }
}

/// A grid loaded from disk, in whichever numeric carrier the file used.
/// PGM images are always integers; CSV grids are integers unless any token
/// has a fractional or exponent part (or overflows 64 bits).
#[derive(Clone, Debug, PartialEq)]
pub enum LoadedGrid {
    Int(GridFunction<i64>),
    Float(GridFunction<f64>),
}

impl LoadedGrid {
    pub fn width(&self) -> usize {
        match self {
            LoadedGrid::Int(g) => g.width(),
            LoadedGrid::Float(g) => g.width(),
        }
    }

    pub fn height(&self) -> usize {
        match self {
            LoadedGrid::Int(g) => g.height(),
            LoadedGrid::Float(g) => g.height(),
        }
    }
}

/// The single geometry described by a domain file.
// Parsed once per invocation; boxing the polynomial variant would only
// complicate matching.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq)]
pub enum DomainGeometry {
    /// One or more inclusive cell boxes (`box a b c d` records: columns
    /// a..=b, rows c..=d).
    Boxes(Vec<CellBox>),
    /// The vertex list of a closed polyline (`curve x0 y0 x1 y1 ...`).
    Curve(Vec<Point>),
    /// A polynomial assembled from repeated `poly c m n` records.
    Polynomial(BivariatePoly),
    /// A piecewise-linear function (`pwl x0 y0 x1 y1 ...`).
    Pwl(PiecewiseLinearFunction),
}

/// Decodes an image file, dispatching on the PGM magic; anything that does
/// not start with `P2`/`P5` is treated as CSV text.
pub fn parse_image(bytes: &[u8]) -> Result<LoadedGrid, FormatError> {
    if bytes.starts_with(b"P2") || bytes.starts_with(b"P5") {
        return Ok(LoadedGrid::Int(parse_pgm(bytes)?));
    }
    let text = std::str::from_utf8(bytes).map_err(|e| FormatError::Csv {
        line: 1,
        message: format!("file is neither PGM nor UTF-8 text: {e}"),
    })?;
    parse_csv_grid(text)
}

/// Decodes a PGM image (`P2` ASCII or `P5` binary, maxval ≤ 65535) into an
/// integer grid. Header errors carry the byte offset at which parsing failed.
pub fn parse_pgm(bytes: &[u8]) -> Result<GridFunction<i64>, FormatError> {
    let mut cursor = ByteCursor::new(bytes);
    let magic = cursor.token("magic number")?;
    let binary = match magic {
        "P2" => false,
        "P5" => true,
        other => {
            return Err(FormatError::Header {
                offset: 0,
                message: format!("expected P2 or P5, found {other:?}"),
            })
        }
    };
    let width = cursor.header_number("width")?;
    let height = cursor.header_number("height")?;
    let maxval = cursor.header_number("maxval")?;
    if width == 0 || height == 0 {
        return Err(FormatError::Header {
            offset: cursor.pos,
            message: format!("image dimensions {width}x{height} must be positive"),
        });
    }
    if maxval == 0 || maxval > 65535 {
        return Err(FormatError::UnsupportedMaxval(maxval as u32));
    }

    let (width, height, maxval) = (width as usize, height as usize, maxval as i64);
    let mut top_down = Vec::with_capacity(width * height);
    if binary {
        // A single whitespace byte separates the header from the payload.
        cursor.expect_single_whitespace()?;
        let bytes_per_pixel = if maxval < 256 { 1 } else { 2 };
        let payload = &cursor.bytes[cursor.pos..];
        if payload.len() < width * height * bytes_per_pixel {
            return Err(FormatError::UnexpectedEndOfPixelData);
        }
        for i in 0..width * height {
            let value = if bytes_per_pixel == 1 {
                payload[i] as i64
            } else {
                ((payload[2 * i] as i64) << 8) | payload[2 * i + 1] as i64
            };
            if value > maxval {
                return Err(FormatError::Pixel {
                    offset: cursor.pos + i * bytes_per_pixel,
                    message: format!("value {value} exceeds maxval {maxval}"),
                });
            }
            top_down.push(value);
        }
    } else {
        for _ in 0..width * height {
            if !cursor.has_token() {
                return Err(FormatError::UnexpectedEndOfPixelData);
            }
            let offset = cursor.pos;
            let token = cursor.token("pixel value")?;
            let value: i64 = token.parse().map_err(|_| FormatError::Pixel {
                offset,
                message: format!("{token:?} is not an integer"),
            })?;
            if value < 0 || value > maxval {
                return Err(FormatError::Pixel {
                    offset,
                    message: format!("value {value} outside 0..={maxval}"),
                });
            }
            top_down.push(value);
        }
    }
    Ok(grid_from_top_down(width, height, top_down))
}

/// Decodes a CSV grid of numbers (comma-separated cells, one row per line,
/// `#` comment lines skipped). Produces an integer grid when every cell is
/// a plain integer, a float grid otherwise.
pub fn parse_csv_grid(text: &str) -> Result<LoadedGrid, FormatError> {
    let mut rows: Vec<Vec<&str>> = Vec::new();
    let mut row_lines: Vec<usize> = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        rows.push(trimmed.split(',').map(str::trim).collect());
        row_lines.push(index + 1);
    }
    if rows.is_empty() {
        return Err(FormatError::Csv {
            line: 1,
            message: "no data rows".into(),
        });
    }
    let width = rows[0].len();
    for (row, &line) in rows.iter().zip(&row_lines) {
        if row.len() != width {
            return Err(FormatError::Csv {
                line,
                message: format!("row has {} values, expected {width}", row.len()),
            });
        }
    }
    let float_mode = rows
        .iter()
        .flatten()
        .any(|token| token.contains(['.', 'e', 'E']) || token.parse::<i64>().is_err());
    let height = rows.len();
    if float_mode {
        let mut top_down = Vec::with_capacity(width * height);
        for (row, &line) in rows.iter().zip(&row_lines) {
            for token in row {
                let value: f64 = token.parse().map_err(|_| FormatError::Csv {
                    line,
                    message: format!("{token:?} is not a number"),
                })?;
                top_down.push(value);
            }
        }
        Ok(LoadedGrid::Float(grid_from_top_down(
            width, height, top_down,
        )))
    } else {
        let mut top_down = Vec::with_capacity(width * height);
        for (row, &line) in rows.iter().zip(&row_lines) {
            for token in row {
                let value: i64 = token.parse().map_err(|_| FormatError::Csv {
                    line,
                    message: format!("{token:?} is not an integer"),
                })?;
                top_down.push(value);
            }
        }
        Ok(LoadedGrid::Int(grid_from_top_down(width, height, top_down)))
    }
}

/// Renders a summed-area table as CSV with rows top-to-bottom (matching the
/// grid readers' orientation): (width+1)×(height+1) cumulative entries.
pub fn sat_to_csv<T: GridValue>(sat: &SummedAreaTable<T>) -> String
where
    T::Acc: Display,
{
    let width = sat.width();
    let height = sat.height();
    let cumulative = sat.cumulative();
    let mut out = String::new();
    for y in (0..=height).rev() {
        let row: Vec<String> = (0..=width)
            .map(|x| cumulative[y * (width + 1) + x].to_string())
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Parses a domain file: whitespace-separated decimal tokens in line
/// records, `#` comments, exactly one geometry kind per file. `box` and
/// `poly` records may repeat (a box union, a polynomial term list); `curve`
/// and `pwl` records may not.
pub fn parse_domain_file(text: &str) -> Result<DomainGeometry, FormatError> {
    let mut boxes: Vec<CellBox> = Vec::new();
    let mut curve: Option<Vec<Point>> = None;
    let mut poly_terms: Vec<(num_rational::BigRational, u32, u32)> = Vec::new();
    let mut pwl: Option<PiecewiseLinearFunction> = None;

    for (index, raw_line) in text.lines().enumerate() {
        let line = index + 1;
        let stripped = match raw_line.split_once('#') {
            Some((before, _)) => before,
            None => raw_line,
        };
        let mut tokens = stripped.split_whitespace();
        let keyword = match tokens.next() {
            Some(k) => k,
            None => continue,
        };
        let rest: Vec<&str> = tokens.collect();
        match keyword {
            "box" => {
                let nums = parse_integers(&rest, line)?;
                if nums.len() != 4 {
                    return Err(FormatError::Domain {
                        line,
                        message: format!("box needs 4 coordinates, got {}", nums.len()),
                    });
                }
                let (a, b, c, d) = (nums[0], nums[1], nums[2], nums[3]);
                if a > b || c > d {
                    return Err(FormatError::Domain {
                        line,
                        message: format!("box {a} {b} {c} {d} is not ordered (a ≤ b, c ≤ d)"),
                    });
                }
                boxes.push(CellBox::new(a, c, b, d));
            }
            "curve" => {
                if curve.is_some() {
                    return Err(FormatError::ConflictingGeometry);
                }
                let nums = parse_integers(&rest, line)?;
                if nums.len() < 6 || nums.len() % 2 != 0 {
                    return Err(FormatError::Domain {
                        line,
                        message: "curve needs an even number (≥ 6) of coordinates".into(),
                    });
                }
                curve = Some(nums.chunks(2).map(|c| point(c[0], c[1])).collect());
            }
            "poly" => {
                if rest.len() != 3 {
                    return Err(FormatError::Domain {
                        line,
                        message: format!(
                            "poly needs coefficient and 2 exponents, got {}",
                            rest.len()
                        ),
                    });
                }
                let coefficient = parse_rational(rest[0]).map_err(|e| FormatError::Domain {
                    line,
                    message: e.to_string(),
                })?;
                let m: u32 = rest[1].parse().map_err(|_| FormatError::Domain {
                    line,
                    message: format!("{:?} is not an exponent", rest[1]),
                })?;
                let n: u32 = rest[2].parse().map_err(|_| FormatError::Domain {
                    line,
                    message: format!("{:?} is not an exponent", rest[2]),
                })?;
                poly_terms.push((coefficient, m, n));
            }
            "pwl" => {
                if pwl.is_some() {
                    return Err(FormatError::ConflictingGeometry);
                }
                if rest.len() < 4 || !rest.len().is_multiple_of(2) {
                    return Err(FormatError::Domain {
                        line,
                        message: "pwl needs an even number (≥ 4) of coordinates".into(),
                    });
                }
                let mut xs = Vec::with_capacity(rest.len() / 2);
                let mut ys = Vec::with_capacity(rest.len() / 2);
                for pair in rest.chunks(2) {
                    let parse = |s: &str| {
                        parse_rational(s).map_err(|e| FormatError::Domain {
                            line,
                            message: e.to_string(),
                        })
                    };
                    xs.push(parse(pair[0])?);
                    ys.push(parse(pair[1])?);
                }
                pwl = Some(PiecewiseLinearFunction::new(xs, ys)?);
            }
            other => {
                return Err(FormatError::Domain {
                    line,
                    message: format!("unknown record {other:?}"),
                });
            }
        }
    }

    let mut geometries: Vec<DomainGeometry> = Vec::new();
    if !boxes.is_empty() {
        geometries.push(DomainGeometry::Boxes(boxes));
    }
    if let Some(vertices) = curve {
        geometries.push(DomainGeometry::Curve(vertices));
    }
    if !poly_terms.is_empty() {
        geometries.push(DomainGeometry::Polynomial(BivariatePoly::from_terms(
            &poly_terms,
        )?));
    }
    if let Some(f) = pwl {
        geometries.push(DomainGeometry::Pwl(f));
    }
    match geometries.len() {
        0 => Err(FormatError::MissingGeometry),
        1 => Ok(geometries.pop().unwrap()),
        _ => Err(FormatError::ConflictingGeometry),
    }
}

/// Builds a grid from values listed top row first.
fn grid_from_top_down<T: GridValue>(
    width: usize,
    height: usize,
    top_down: Vec<T>,
) -> GridFunction<T> {
    let mut bottom_up = Vec::with_capacity(width * height);
    for y in 0..height {
        let row = height - 1 - y;
        bottom_up.extend_from_slice(&top_down[row * width..(row + 1) * width]);
    }
    GridFunction::from_values(width, height, bottom_up).expect("dimensions validated by the caller")
}

fn parse_integers(tokens: &[&str], line: usize) -> Result<Vec<i64>, FormatError> {
    tokens
        .iter()
        .map(|token| {
            token.parse().map_err(|_| FormatError::Domain {
                line,
                message: format!("{token:?} is not an integer"),
            })
        })
        .collect()
}

/// Scans PGM bytes, tracking the current offset for error messages.
struct ByteCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> ByteCursor<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        ByteCursor { bytes, pos: 0 }
    }

    fn skip_separators(&mut self) {
        loop {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if self.pos < self.bytes.len() && self.bytes[self.pos] == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else {
                return;
            }
        }
    }

    fn has_token(&mut self) -> bool {
        self.skip_separators();
        self.pos < self.bytes.len()
    }

    fn token(&mut self, what: &str) -> Result<&'a str, FormatError> {
        self.skip_separators();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && !self.bytes[self.pos].is_ascii_whitespace()
            && self.bytes[self.pos] != b'#'
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(FormatError::Header {
                offset: start,
                message: format!("missing {what}"),
            });
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).map_err(|_| FormatError::Header {
            offset: start,
            message: format!("{what} is not ASCII"),
        })
    }

    fn header_number(&mut self, what: &str) -> Result<u64, FormatError> {
        let offset_before = {
            self.skip_separators();
            self.pos
        };
        let token = self.token(what)?;
        token.parse().map_err(|_| FormatError::Header {
            offset: offset_before,
            message: format!("{what} {token:?} is not a number"),
        })
    }

    fn expect_single_whitespace(&mut self) -> Result<(), FormatError> {
        if self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
            Ok(())
        } else {
            Err(FormatError::Header {
                offset: self.pos,
                message: "expected one whitespace byte before pixel data".into(),
            })
        }
    }
}
