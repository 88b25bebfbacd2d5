//! Bivariate polynomial fields with exact rational coefficients.
//!
//! A [`BivariatePoly`] is `f(x, y) = Σ c_{mn} x^m y^n` with `m, n ≤ 3` and
//! rational `c_{mn}`. Its double antiderivative
//! `F(x, y) = Σ c_{mn} x^{m+1} y^{n+1} / ((m+1)(n+1))` is closed-form, so the
//! corner-sum machinery that reads a summed-area table in grid mode can read
//! `F` at lattice vertices in polynomial mode instead — exactly, in
//! arbitrary-precision rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::{BigRational, Point};

/// Largest exponent allowed per variable.
pub const MAX_DEGREE: u32 = 3;

/// Errors from polynomial construction and coefficient parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// A term with `x` or `y` degree above [`MAX_DEGREE`].
    #[error("term x^{m} y^{n} exceeds the supported degree {MAX_DEGREE} per variable")]
    DegreeTooHigh { m: u32, n: u32 },
    /// A coefficient string that is not an integer, decimal, or fraction.
    #[error("cannot parse {0:?} as an exact rational coefficient")]
    InvalidCoefficient(String),
}

/// `f(x, y) = Σ c_{mn} x^m y^n` with `m, n ≤ 3`, exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariatePoly {
    // coefficients[m][n] multiplies x^m y^n
    coefficients: [[BigRational; 4]; 4],
}

impl BivariatePoly {
    /// Builds a polynomial from `(coefficient, m, n)` terms; repeated `(m, n)`
    /// pairs accumulate.
    pub fn from_terms(terms: &[(BigRational, u32, u32)]) -> Result<Self, PolyError> {
        let mut coefficients: [[BigRational; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| BigRational::zero()));
        for (c, m, n) in terms {
            if *m > MAX_DEGREE || *n > MAX_DEGREE {
                return Err(PolyError::DegreeTooHigh { m: *m, n: *n });
            }
            coefficients[*m as usize][*n as usize] += c;
        }
        Ok(BivariatePoly { coefficients })
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms(terms: &[(i64, u32, u32)]) -> Result<Self, PolyError> {
        let terms: Vec<(BigRational, u32, u32)> = terms
            .iter()
            .map(|&(c, m, n)| (BigRational::from_integer(c.into()), m, n))
            .collect();
        Self::from_terms(&terms)
    }

    /// The coefficient of `x^m y^n`.
    pub fn coefficient(&self, m: u32, n: u32) -> &BigRational {
        &self.coefficients[m as usize][n as usize]
    }

    /// Nonzero terms as `(coefficient, m, n)`, in degree order.
    pub fn terms(&self) -> Vec<(BigRational, u32, u32)> {
        let mut out = Vec::new();
        for m in 0..=MAX_DEGREE {
            for n in 0..=MAX_DEGREE {
                let c = self.coefficient(m, n);
                if !c.is_zero() {
                    out.push((c.clone(), m, n));
                }
            }
        }
        out
    }

    /// Evaluates `f` at a rational point.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let xs = powers(x);
        let ys = powers(y);
        let mut total = BigRational::zero();
        for (row, xm) in self.coefficients.iter().zip(&xs) {
            for (c, yn) in row.iter().zip(&ys) {
                if !c.is_zero() {
                    total += c * xm * yn;
                }
            }
        }
        total
    }

    /// The double antiderivative
    /// `F(x, y) = Σ c_{mn} x^{m+1} y^{n+1} / ((m+1)(n+1))` at a rational
    /// point. `F(x, y)` is the exact integral of `f` over the axis-aligned
    /// box spanned by the origin and `(x, y)`.
    pub fn antiderivative(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let xs = powers_through_4(x);
        let ys = powers_through_4(y);
        let mut total = BigRational::zero();
        for m in 0..4 {
            for n in 0..4 {
                let c = &self.coefficients[m][n];
                if !c.is_zero() {
                    let denom = BigRational::from_integer((((m + 1) * (n + 1)) as i64).into());
                    total += c * &xs[m + 1] * &ys[n + 1] / denom;
                }
            }
        }
        total
    }

    /// [`antiderivative`](Self::antiderivative) at a lattice vertex.
    pub fn antiderivative_at_vertex(&self, v: Point) -> BigRational {
        self.antiderivative(&rational_from_i64(v.x), &rational_from_i64(v.y))
    }

    /// Exact integral of `f` over an axis-aligned rational box
    /// `[x0, x1] × [y0, y1]` via the mixed second difference of `F`.
    pub fn box_integral(
        &self,
        x0: &BigRational,
        x1: &BigRational,
        y0: &BigRational,
        y1: &BigRational,
    ) -> BigRational {
        self.antiderivative(x1, y1) - self.antiderivative(x0, y1) - self.antiderivative(x1, y0)
            + self.antiderivative(x0, y0)
    }
}

/// `[1, x, x^2, x^3]`.
fn powers(x: &BigRational) -> [BigRational; 4] {
    let mut out: [BigRational; 4] = std::array::from_fn(|_| BigRational::one());
    for i in 1..4 {
        out[i] = &out[i - 1] * x;
    }
    out
}

/// `[1, x, x^2, x^3, x^4]`.
fn powers_through_4(x: &BigRational) -> [BigRational; 5] {
    let mut out: [BigRational; 5] = std::array::from_fn(|_| BigRational::one());
    for i in 1..5 {
        out[i] = &out[i - 1] * x;
    }
    out
}

/// An exact rational from a lattice coordinate.
pub fn rational_from_i64(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Parses an exact rational from an integer (`-3`), decimal (`2.75`,
/// `1.5e-2`), or fraction (`-7/4`) string.
pub fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    let invalid = || PolyError::InvalidCoefficient(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(invalid());
    }
    if let Some((numer, denom)) = t.split_once('/') {
        let n: BigInt = numer.trim().parse().map_err(|_| invalid())?;
        let d: BigInt = denom.trim().parse().map_err(|_| invalid())?;
        if d.is_zero() {
            return Err(invalid());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exponent) = match t.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| invalid())?),
        None => (t, 0),
    };
    if exponent.abs() > 9999 {
        return Err(invalid());
    }
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) {
        return Err(invalid());
    }
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "+" || digits == "-" {
        return Err(invalid());
    }
    let numer: BigInt = digits.parse().map_err(|_| invalid())?;
    let ten = BigInt::from(10);
    let mut numerator = numer;
    let mut denominator = ten.pow(frac_part.len() as u32);
    if exponent >= 0 {
        numerator *= ten.pow(exponent as u32);
    } else {
        denominator *= ten.pow(exponent.unsigned_abs());
    }
    Ok(BigRational::new(numerator, denominator))
}
