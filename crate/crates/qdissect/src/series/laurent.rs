//! Truncated Laurent series: power series with finitely many negative
//! exponents.
//!
//! Two-variable theta series such as f(-q^{-3}, -q^{21}) genuinely have
//! terms at negative exponents, and the dissection identities multiply them
//! by monomial prefactors that push everything back up.  This type tracks
//! three things independently:
//!
//!   * `min_exp` — a hard floor: the series has *no* terms below it;
//!   * the stored coefficient window starting at `min_exp`;
//!   * `precision` — the largest exponent whose coefficient is known.
//!
//! `precision` may exceed the stored window; coefficients in between are
//! known to be zero.  That lets an exact polynomial (a monomial prefactor,
//! the constant 1) carry effectively unlimited precision without allocating
//! for it, which in turn keeps the precision of products like
//! q^{2i+k} * f(-q^{-3i}, -q^{3i+9k}) as large as it honestly is.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Result, SeriesError};
use crate::series::truncated::TruncatedSeries;

/// Logical precision assigned to exact polynomials.  Large enough that it
/// never constrains a computation, small enough that precision arithmetic
/// cannot overflow i64.
pub const EXACT: i64 = i64::MAX / 4;

/// A Laurent series in q with integer coefficients, known exactly through
/// q^precision, with no terms below q^min_exp.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    min_exp: i64,
    precision: i64,
    /// coeffs[k] is the coefficient of q^(min_exp + k).  Exponents above
    /// the stored window but at most `precision` have coefficient zero.
    coeffs: Vec<BigInt>,
}

impl LaurentSeries {
    /// Build from a floor exponent, a coefficient window, and a precision.
    ///
    /// Panics if the window is empty or extends beyond the precision: both
    /// indicate a programming error, not bad user input.
    pub fn from_parts(min_exp: i64, coeffs: Vec<BigInt>, precision: i64) -> Self {
        assert!(!coeffs.is_empty(), "empty coefficient window");
        assert!(
            min_exp + coeffs.len() as i64 - 1 <= precision,
            "stored window exceeds precision"
        );
        LaurentSeries { min_exp, precision, coeffs }
    }

    /// The exact polynomial c * q^e.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        LaurentSeries {
            min_exp: exp,
            precision: EXACT,
            coeffs: vec![coeff.into()],
        }
    }

    /// The exact constant 1.
    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// View an ordinary power series as a Laurent series with floor 0.
    pub fn from_truncated(s: &TruncatedSeries) -> Self {
        LaurentSeries {
            min_exp: 0,
            precision: s.precision() as i64,
            coeffs: s.coeffs().to_vec(),
        }
    }

    /// No terms exist below this exponent.
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// The largest exponent whose coefficient is known.
    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// The coefficient of q^e: zero below the floor or beyond the stored
    /// window, an error beyond the precision.
    pub fn coeff(&self, e: i64) -> Result<BigInt> {
        if e > self.precision {
            return Err(SeriesError::PrecisionExceeded {
                wanted: e,
                precision: self.precision,
            });
        }
        if e < self.min_exp {
            return Ok(BigInt::zero());
        }
        let k = (e - self.min_exp) as usize;
        Ok(self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero))
    }

    fn stored_end(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    /// The stored coefficient window: floor exponent and the coefficients
    /// starting there.  Anything after the window, up to `precision`, is
    /// zero.
    pub(crate) fn window(&self) -> (i64, &[BigInt]) {
        (self.min_exp, &self.coeffs)
    }

    /// True if every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Sum; floor is the min of the floors, precision the min of the
    /// precisions.
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    /// Difference, with the same floor/precision rules as `add`.
    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let min_exp = self.min_exp.min(other.min_exp);
        let precision = self.precision.min(other.precision);
        let end = self.stored_end().max(other.stored_end()).min(precision).max(min_exp);
        let mut coeffs = vec![BigInt::zero(); (end - min_exp + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = self.min_exp + k as i64;
            if e > end {
                break;
            }
            coeffs[(e - min_exp) as usize] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            let e = other.min_exp + k as i64;
            if e > end {
                break;
            }
            if subtract {
                coeffs[(e - min_exp) as usize] -= c;
            } else {
                coeffs[(e - min_exp) as usize] += c;
            }
        }
        LaurentSeries { min_exp, precision, coeffs }
    }

    /// Negate every coefficient.
    pub fn neg(&self) -> Self {
        LaurentSeries {
            min_exp: self.min_exp,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiply every coefficient by the integer c.
    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        LaurentSeries {
            min_exp: self.min_exp,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Multiply by q^t (t of either sign); exact, so precision shifts too.
    pub fn shift(&self, t: i64) -> Self {
        LaurentSeries {
            min_exp: self.min_exp + t,
            precision: self.precision.saturating_add(t).min(EXACT),
            coeffs: self.coeffs.clone(),
        }
    }

    /// Product.  The floor adds; the precision is the best sound bound
    /// min(Na + mb, Nb + ma), since terms of one factor below its floor
    /// cannot combine with unknown terms of the other.
    pub fn mul(&self, other: &Self) -> Self {
        let min_exp = self.min_exp + other.min_exp;
        let precision = (self.precision.saturating_add(other.min_exp))
            .min(other.precision.saturating_add(self.min_exp))
            .min(EXACT);
        let conv_end = self.stored_end() + other.stored_end();
        let end = conv_end.min(precision);
        let len = (end - min_exp + 1) as usize;
        let nnz_self = self.coeffs.iter().filter(|c| !c.is_zero()).count();
        let nnz_other = other.coeffs.iter().filter(|c| !c.is_zero()).count();
        let (outer, inner) = if nnz_self <= nnz_other {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = vec![BigInt::zero(); len];
        for (k, c) in outer.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (l, d) in inner.coeffs.iter().enumerate() {
                if k + l >= len {
                    break;
                }
                if !d.is_zero() {
                    coeffs[k + l] += c * d;
                }
            }
        }
        LaurentSeries { min_exp, precision, coeffs }
    }

    /// Integer power by binary exponentiation; self^0 is the exact 1.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Convert to an ordinary power series, keeping coefficients up to
    /// `cap`.  Errors if a nonzero coefficient sits at a negative exponent
    /// or if nothing is known at nonnegative exponents.
    pub fn to_truncated(&self, cap: usize) -> Result<TruncatedSeries> {
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = self.min_exp + k as i64;
            if e >= 0 {
                break;
            }
            if !c.is_zero() {
                return Err(SeriesError::NegativeExponent {
                    exponent: e,
                    coefficient: c.to_string(),
                });
            }
        }
        if self.precision < 0 {
            return Err(SeriesError::PrecisionTooSmall {
                precision: self.precision,
                reason: "series has no known coefficients at nonnegative exponents".into(),
            });
        }
        let n = self.precision.min(cap as i64) as usize;
        let coeffs = (0..=n as i64)
            .map(|e| self.coeff(e).expect("within precision"))
            .collect();
        Ok(TruncatedSeries::from_coeffs(coeffs))
    }

    /// Compare all coefficients with exponent at most n, treating exponents
    /// below a floor as zero.  Requires both precisions to be at least n.
    pub fn equal_up_to(&self, other: &Self, n: i64) -> bool {
        assert!(
            n <= self.precision && n <= other.precision,
            "comparison through q^{n} exceeds a precision ({}, {})",
            self.precision,
            other.precision
        );
        let lo = self.min_exp.min(other.min_exp);
        (lo..=n).all(|e| {
            self.coeff(e).expect("within precision") == other.coeff(e).expect("within precision")
        })
    }

    /// First exponent (through the common precision) where the two series
    /// disagree.
    pub fn first_difference(&self, other: &Self) -> Option<(i64, BigInt, BigInt)> {
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.precision.min(other.precision);
        (lo..=hi).find_map(|e| {
            let a = self.coeff(e).expect("within precision");
            let b = other.coeff(e).expect("within precision");
            if a != b {
                Some((e, a, b))
            } else {
                None
            }
        })
    }
}
