//! Truncated formal power series over the integers.
//!
//! A `TruncatedSeries` stores the exact coefficients of q^0 .. q^N for some
//! truncation order N (the *precision*).  All arithmetic is exact integer
//! arithmetic; nothing is ever rounded.  Operations on two series yield the
//! largest precision that is sound, i.e. the minimum of the operand
//! precisions.

use std::io::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Result, SeriesError};

/// A formal power series in q with integer coefficients, known exactly
/// through q^precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Coefficients of q^0 ..= q^precision; length is precision + 1.
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series at the given precision.
    pub fn zero(precision: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); precision + 1],
        }
    }

    /// The constant series 1 at the given precision.
    pub fn one(precision: usize) -> Self {
        let mut s = Self::zero(precision);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// The monomial c * q^exp at the given precision.
    ///
    /// Requires exp <= precision; a monomial that is not representable at
    /// this precision is a programming error.
    pub fn monomial(coeff: impl Into<BigInt>, exp: usize, precision: usize) -> Self {
        assert!(
            exp <= precision,
            "monomial exponent {exp} exceeds precision {precision}"
        );
        let mut s = Self::zero(precision);
        s.coeffs[exp] = coeff.into();
        s
    }

    /// Build a series from sparse (exponent, coefficient) pairs.
    ///
    /// Returns an error if any exponent exceeds the precision.  Repeated
    /// exponents accumulate.
    pub fn from_terms(terms: &[(usize, i64)], precision: usize) -> Result<Self> {
        let mut s = Self::zero(precision);
        for &(exp, c) in terms {
            if exp > precision {
                return Err(SeriesError::PrecisionExceeded {
                    wanted: exp as i64,
                    precision: precision as i64,
                });
            }
            s.coeffs[exp] += c;
        }
        Ok(s)
    }

    /// Take ownership of a coefficient vector (index = exponent).
    ///
    /// The vector must be non-empty; its last index is the precision.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the q^0 coefficient");
        TruncatedSeries { coeffs }
    }

    /// Highest exponent whose coefficient is known.
    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of q^n, or an error if n is beyond the precision.
    pub fn coeff(&self, n: usize) -> Result<&BigInt> {
        self.coeffs.get(n).ok_or(SeriesError::PrecisionExceeded {
            wanted: n as i64,
            precision: self.precision() as i64,
        })
    }

    /// All known coefficients, index = exponent.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// True if every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Drop coefficients above n.  Requires n <= precision.
    pub fn truncated(&self, n: usize) -> Self {
        assert!(n <= self.precision(), "cannot extend precision by truncating");
        TruncatedSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    /// Pointwise sum; precision is the minimum of the operands'.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let coeffs = (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        TruncatedSeries { coeffs }
    }

    /// Pointwise difference; precision is the minimum of the operands'.
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let coeffs = (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        TruncatedSeries { coeffs }
    }

    /// Negate every coefficient.
    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiply every coefficient by the integer c.
    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Multiply by q^t, discarding whatever falls beyond the precision.
    pub fn shift_up(&self, t: usize) -> Self {
        let n = self.precision();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for e in 0..=n.saturating_sub(t) {
            coeffs[e + t] = self.coeffs[e].clone();
        }
        TruncatedSeries { coeffs }
    }

    /// Cauchy product; precision is the minimum of the operands'.
    ///
    /// The outer loop runs over the sparser operand, so multiplying by a
    /// theta series or an Euler product (which have O(sqrt N) terms) costs
    /// O(sqrt N * N) rather than O(N^2).
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let nnz_self = self.coeffs[..=n].iter().filter(|c| !c.is_zero()).count();
        let nnz_other = other.coeffs[..=n].iter().filter(|c| !c.is_zero()).count();
        let (outer, inner) = if nnz_self <= nnz_other {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (e, c) in outer.iter().enumerate().take(n + 1) {
            if c.is_zero() {
                continue;
            }
            for (f, d) in inner.iter().enumerate().take(n - e + 1) {
                if !d.is_zero() {
                    coeffs[e + f] += c * d;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse, defined when the constant term is +1 or -1.
    ///
    /// Uses the recurrence b[n] = -a[0] * sum_{k=1..n} a[k] * b[n-k],
    /// skipping zero coefficients of a, so inverting a sparse series (an
    /// Euler product, say) is fast.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if !(a0 == &BigInt::one() || a0 == &(-BigInt::one())) {
            return Err(SeriesError::NonUnitConstant {
                constant: a0.to_string(),
            });
        }
        let n = self.precision();
        let support: Vec<usize> = (1..=n).filter(|&k| !self.coeffs[k].is_zero()).collect();
        let mut b = vec![BigInt::zero(); n + 1];
        b[0] = a0.clone();
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for &k in support.iter().take_while(|&&k| k <= m) {
                acc += &self.coeffs[k] * &b[m - k];
            }
            if !acc.is_zero() {
                b[m] = -(a0 * acc);
            }
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Integer power by binary exponentiation; self^0 is 1.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.precision());
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

    /// Compare coefficients of q^0 ..= q^n.  Requires both series to be
    /// known through q^n.
    pub fn equal_up_to(&self, other: &Self, n: usize) -> bool {
        assert!(
            n <= self.precision() && n <= other.precision(),
            "comparison through q^{n} exceeds a precision ({}, {})",
            self.precision(),
            other.precision()
        );
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    /// First exponent (through the common precision) where the two series
    /// disagree, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, BigInt, BigInt)> {
        let n = self.precision().min(other.precision());
        (0..=n)
            .find(|&k| self.coeffs[k] != other.coeffs[k])
            .map(|k| (k, self.coeffs[k].clone(), other.coeffs[k].clone()))
    }

    /// True if every known coefficient is divisible by m.
    pub fn all_divisible_by(&self, m: u64) -> bool {
        let m = BigInt::from(m);
        self.coeffs.iter().all(|c| (c % &m).is_zero())
    }

    /// Write `n,coefficient` rows for q^0 ..= q^precision, preceded by a
    /// `# precision=N` comment line and a column header.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "# precision={}", self.precision())?;
        writeln!(w, "n,coefficient")?;
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(w, "{n},{c}")?;
        }
        Ok(())
    }

    /// Coefficients as decimal strings (handy for JSON output, where the
    /// values routinely overflow any machine integer).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}
