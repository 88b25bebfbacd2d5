//! Region integration on lattice grids and polynomial fields via antiderivative
//! corner sums.
//!
//! The crate provides two complementary integration pipelines built on the same
//! idea — evaluating a two-dimensional antiderivative `F` at a few lattice
//! vertices instead of summing over a whole region:
//!
//! * **Rectilinear regions** ([`rectdomain`]): a finite union of axis-aligned
//!   boxes is integrated as `Σ α(v)·F(v)` over its corner vertices, where the
//!   corner coefficient `α ∈ {±1, ±2}` is read off the 2×2 occupancy pattern
//!   around each vertex. On grids, `F` is a summed-area table ([`grid`]).
//! * **Staircase and monotone-polyline regions** ([`slanted`]): regions bounded
//!   by curves with diagonal structure are handled by splitting the boundary
//!   into uniformly tended runs and summing *slanted line integrals*, which
//!   combine a small region term with corner-weighted `F` values. Tendency
//!   bookkeeping for curve vertices lives in [`curve`].
//!
//! Supporting modules: [`poly`] (exact bivariate polynomial fields for the
//! continuous mode), [`detach`] (one-dimensional detachment/tendency operators
//! on piecewise-linear functions), [`oracle`] (brute-force reference
//! implementations that share no code with the fast paths), [`verify`]
//! (randomized cross-check suites), and [`formats`] (PGM/CSV/domain-file I/O
//! for the CLI).

pub mod curve;
pub mod detach;
pub mod formats;
pub mod grid;
pub mod oracle;
pub mod poly;
pub mod rectdomain;
pub mod slanted;
pub mod verify;

use std::fmt;

pub use num_rational::BigRational;

/// A lattice point. `x` is the column coordinate, `y` the row coordinate;
/// `y` grows upward and the origin sits at the lower-left of a grid.
///
/// Cells and vertices share this type: cell `(x, y)` is the unit square whose
/// lower-left vertex is the point `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

/// Shorthand constructor, convenient for vertex lists.
pub const fn point(x: i64, y: i64) -> Point {
    Point::new(x, y)
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The result of an integration, carried in the arithmetic of the field it
/// came from.
///
/// Integer-grid results are half-integers (corner weights contribute halves),
/// stored exactly as a doubled integer. Polynomial-mode results are exact
/// rationals. Float-grid results are plain `f64`.
///
/// Arithmetic between scalars of different carriers is a programming error and
/// panics; every pipeline in this crate stays within one carrier.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    /// Exact half-integer: the represented value is `halves / 2`.
    ExactHalves(i128),
    /// Binary64 value.
    Float(f64),
    /// Exact rational value.
    Rational(BigRational),
}

impl Scalar {
    /// Exact integer zero (also usable as an additive identity for the
    /// rational carrier via [`Scalar::add`]).
    pub const ZERO: Scalar = Scalar::ExactHalves(0);

    /// The value as a float, rounding rationals and half-integers.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::ExactHalves(h) => *h as f64 / 2.0,
            Scalar::Float(v) => *v,
            Scalar::Rational(r) => rational_to_f64(r),
        }
    }

    /// The doubled integer when the scalar is an exact half-integer.
    pub fn exact_halves(&self) -> Option<i128> {
        match self {
            Scalar::ExactHalves(h) => Some(*h),
            _ => None,
        }
    }

    /// The exact rational value when the scalar carries one.
    pub fn rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Exact zero test. Float scalars compare against literal `0.0`.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::ExactHalves(h) => *h == 0,
            Scalar::Float(v) => *v == 0.0,
            Scalar::Rational(r) => num_traits::Zero::is_zero(r),
        }
    }

    /// Multiplication by a small integer (corner coefficients, tendencies).
    pub fn scale_int(self, k: i64) -> Scalar {
        match self {
            Scalar::ExactHalves(h) => Scalar::ExactHalves(
                h.checked_mul(k as i128)
                    .expect("half-integer scale overflow"),
            ),
            Scalar::Float(v) => Scalar::Float(v * k as f64),
            Scalar::Rational(r) => Scalar::Rational(r * BigRational::from_integer(k.into())),
        }
    }
}

/// Sum of two scalars of the same carrier. `ExactHalves(0)` acts as a
/// universal zero so folds can start from [`Scalar::ZERO`]; mixing any other
/// carriers panics.
impl std::ops::Add for Scalar {
    type Output = Scalar;

    fn add(self, other: Scalar) -> Scalar {
        use Scalar::*;
        match (self, other) {
            (ExactHalves(a), ExactHalves(b)) => {
                ExactHalves(a.checked_add(b).expect("half-integer sum overflow"))
            }
            (ExactHalves(0), b) => b,
            (a, ExactHalves(0)) => a,
            (Float(a), Float(b)) => Float(a + b),
            (Rational(a), Rational(b)) => Rational(a + b),
            (a, b) => panic!("cannot add scalars of different carriers: {a:?} + {b:?}"),
        }
    }
}

/// Difference of two scalars of the same carrier.
impl std::ops::Sub for Scalar {
    type Output = Scalar;

    fn sub(self, other: Scalar) -> Scalar {
        self + (-other)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::ExactHalves(h) => Scalar::ExactHalves(-h),
            Scalar::Float(v) => Scalar::Float(-v),
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::ExactHalves(h) => {
                if h % 2 == 0 {
                    write!(f, "{}", h / 2)
                } else {
                    write!(f, "{h}/2")
                }
            }
            Scalar::Float(v) => write!(f, "{v}"),
            Scalar::Rational(r) => write!(f, "{r}"),
        }
    }
}

/// Round an arbitrary-precision rational to the nearest `f64`.
///
/// Exact for every value produced by the test suites; large numerators fall
/// back to a quotient of lossy conversions, fine for display purposes.
pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_display_renders_integers_and_halves() {
        assert_eq!(Scalar::ExactHalves(6).to_string(), "3");
        assert_eq!(Scalar::ExactHalves(-7).to_string(), "-7/2");
        assert_eq!(Scalar::Float(1.5).to_string(), "1.5");
    }

    #[test]
    fn scalar_zero_acts_as_identity_for_rationals() {
        let r = Scalar::Rational(BigRational::new(3.into(), 4.into()));
        assert_eq!(Scalar::ZERO + r.clone(), r);
    }

    #[test]
    fn scalar_arithmetic_is_exact_on_halves() {
        let a = Scalar::ExactHalves(5);
        let b = Scalar::ExactHalves(-5);
        assert!((a + b).is_zero());
    }

    #[test]
    fn points_order_lexicographically() {
        assert!(point(1, 9) < point(2, 0));
        assert!(point(1, 1) < point(1, 2));
    }
}
