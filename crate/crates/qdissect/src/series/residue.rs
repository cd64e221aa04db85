//! Series with coefficients reduced modulo m.
//!
//! Congruence checks only need coefficients mod a small m, and reducing
//! before multiplying keeps the arithmetic in machine words instead of big
//! integers.  The exact types remain the source of truth; `ResidueSeries`
//! exists so that the cheap path can be cross-checked against the exact one
//! (reduction is a ring homomorphism, and the property tests pin that down).

use std::io::{self, Write};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Result, SeriesError};
use crate::series::laurent::LaurentSeries;
use crate::series::truncated::TruncatedSeries;

/// Reduce a big integer into 0..m.
fn reduce_bigint(c: &BigInt, m: u64) -> u64 {
    let m_big = BigInt::from(m);
    let mut r = c % &m_big;
    if r.is_negative() {
        r += &m_big;
    }
    r.to_u64().expect("residue fits in u64")
}

fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + m as u128 - b as u128) % m as u128) as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// A power series with coefficients in Z/mZ, known through q^precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSeries {
    modulus: u64,
    /// coeffs[n] is the coefficient of q^n, already reduced into 0..modulus.
    coeffs: Vec<u64>,
}

impl ResidueSeries {
    /// Reduce an exact series modulo m (m >= 2).
    pub fn from_series(s: &TruncatedSeries, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        ResidueSeries {
            modulus,
            coeffs: s.coeffs().iter().map(|c| reduce_bigint(c, modulus)).collect(),
        }
    }

    /// The zero series at the given precision.
    pub fn zero(modulus: u64, precision: usize) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        ResidueSeries {
            modulus,
            coeffs: vec![0; precision + 1],
        }
    }

    /// The constant series 1.
    pub fn one(modulus: u64, precision: usize) -> Self {
        let mut s = Self::zero(modulus, precision);
        s.coeffs[0] = 1 % modulus;
        s
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The residue of the coefficient of q^n.
    pub fn coeff(&self, n: usize) -> Result<u64> {
        self.coeffs.get(n).copied().ok_or(SeriesError::PrecisionExceeded {
            wanted: n as i64,
            precision: self.precision() as i64,
        })
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same_modulus(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_modulus(other);
        let n = self.precision().min(other.precision());
        ResidueSeries {
            modulus: self.modulus,
            coeffs: (0..=n)
                .map(|k| add_mod(self.coeffs[k], other.coeffs[k], self.modulus))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_modulus(other);
        let n = self.precision().min(other.precision());
        ResidueSeries {
            modulus: self.modulus,
            coeffs: (0..=n)
                .map(|k| sub_mod(self.coeffs[k], other.coeffs[k], self.modulus))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        ResidueSeries {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|&c| sub_mod(0, c, self.modulus)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = (c as i128).rem_euclid(self.modulus as i128) as u64;
        ResidueSeries {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|&x| mul_mod(x, c, self.modulus)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_modulus(other);
        let n = self.precision().min(other.precision());
        let nnz_self = self.coeffs[..=n].iter().filter(|&&c| c != 0).count();
        let nnz_other = other.coeffs[..=n].iter().filter(|&&c| c != 0).count();
        let (outer, inner) = if nnz_self <= nnz_other {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let m = self.modulus;
        let mut coeffs = vec![0u64; n + 1];
        for (e, &c) in outer.iter().enumerate().take(n + 1) {
            if c == 0 {
                continue;
            }
            for (f, &d) in inner.iter().enumerate().take(n - e + 1) {
                if d != 0 {
                    coeffs[e + f] = add_mod(coeffs[e + f], mul_mod(c, d, m), m);
                }
            }
        }
        ResidueSeries { modulus: m, coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.modulus, self.precision());
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

    /// Inverse, defined when the constant term is coprime to the modulus.
    pub fn invert(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        let inv0 = mod_inverse(a0, self.modulus).ok_or(SeriesError::NonUnitConstant {
            constant: format!("{} (mod {})", a0, self.modulus),
        })?;
        let n = self.precision();
        let m = self.modulus;
        let support: Vec<usize> = (1..=n).filter(|&k| self.coeffs[k] != 0).collect();
        let mut b = vec![0u64; n + 1];
        b[0] = inv0;
        for w in 1..=n {
            let mut acc = 0u64;
            for &k in support.iter().take_while(|&&k| k <= w) {
                acc = add_mod(acc, mul_mod(self.coeffs[k], b[w - k], m), m);
            }
            b[w] = mul_mod(sub_mod(0, acc, m), inv0, m);
        }
        Ok(ResidueSeries { modulus: m, coeffs: b })
    }

    pub fn equal_up_to(&self, other: &Self, n: usize) -> bool {
        self.check_same_modulus(other);
        assert!(
            n <= self.precision() && n <= other.precision(),
            "comparison through q^{n} exceeds a precision"
        );
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    /// First exponent (through the common precision) where the residues
    /// disagree.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, u64, u64)> {
        self.check_same_modulus(other);
        let n = self.precision().min(other.precision());
        (0..=n)
            .find(|&k| self.coeffs[k] != other.coeffs[k])
            .map(|k| (k, self.coeffs[k], other.coeffs[k]))
    }

    /// Write `n,coefficient` rows preceded by `# precision=N` and
    /// `# modulus=m` comment lines and a column header.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "# precision={}", self.precision())?;
        writeln!(w, "# modulus={}", self.modulus)?;
        writeln!(w, "n,coefficient")?;
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(w, "{n},{c}")?;
        }
        Ok(())
    }
}

/// Laurent series over Z/mZ.  Internal: expression evaluation modulo m uses
/// it so theta prefactors with negative exponents work the same way they do
/// in the exact evaluator.  Same floor/precision semantics as
/// `LaurentSeries`, including the `EXACT` convention for polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ModLaurent {
    modulus: u64,
    min_exp: i64,
    precision: i64,
    coeffs: Vec<u64>,
}

impl ModLaurent {
    pub(crate) fn monomial(modulus: u64, coeff: i64, exp: i64) -> Self {
        ModLaurent {
            modulus,
            min_exp: exp,
            precision: super::laurent::EXACT,
            coeffs: vec![coeff.rem_euclid(modulus as i64) as u64],
        }
    }

    pub(crate) fn from_residue(s: &ResidueSeries) -> Self {
        ModLaurent {
            modulus: s.modulus,
            min_exp: 0,
            precision: s.precision() as i64,
            coeffs: s.coeffs.clone(),
        }
    }

    pub(crate) fn from_laurent(s: &LaurentSeries, modulus: u64) -> Self {
        let (lo, window) = s.window();
        ModLaurent {
            modulus,
            min_exp: lo,
            precision: s.precision(),
            coeffs: window.iter().map(|c| reduce_bigint(c, modulus)).collect(),
        }
    }

    fn stored_end(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    fn coeff(&self, e: i64) -> u64 {
        if e < self.min_exp {
            return 0;
        }
        let k = (e - self.min_exp) as usize;
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub(crate) fn combine(&self, other: &Self, subtract: bool) -> Self {
        assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        let min_exp = self.min_exp.min(other.min_exp);
        let precision = self.precision.min(other.precision);
        let end = self.stored_end().max(other.stored_end()).min(precision).max(min_exp);
        let coeffs = (min_exp..=end)
            .map(|e| {
                if subtract {
                    sub_mod(self.coeff(e), other.coeff(e), m)
                } else {
                    add_mod(self.coeff(e), other.coeff(e), m)
                }
            })
            .collect();
        ModLaurent { modulus: m, min_exp, precision, coeffs }
    }

    pub(crate) fn neg(&self) -> Self {
        ModLaurent {
            modulus: self.modulus,
            min_exp: self.min_exp,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|&c| sub_mod(0, c, self.modulus)).collect(),
        }
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        let min_exp = self.min_exp + other.min_exp;
        let precision = (self.precision.saturating_add(other.min_exp))
            .min(other.precision.saturating_add(self.min_exp))
            .min(super::laurent::EXACT);
        let end = (self.stored_end() + other.stored_end()).min(precision);
        let len = (end - min_exp + 1) as usize;
        let mut coeffs = vec![0u64; len];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (l, &d) in other.coeffs.iter().enumerate() {
                if k + l >= len {
                    break;
                }
                if d != 0 {
                    coeffs[k + l] = add_mod(coeffs[k + l], mul_mod(c, d, m), m);
                }
            }
        }
        ModLaurent { modulus: m, min_exp, precision, coeffs }
    }

    pub(crate) fn pow(&self, e: u32) -> Self {
        let mut result = Self::monomial(self.modulus, 1, 0);
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

    /// Inverse of a series that is an ordinary unit power series (floor
    /// effects trimmed first).  The result is capped at `cap` since the
    /// inverse of an exact polynomial is not itself exact.
    pub(crate) fn invert(&self, cap: i64) -> Result<Self> {
        for e in self.min_exp..0 {
            if self.coeff(e) != 0 {
                return Err(SeriesError::NegativeExponent {
                    exponent: e,
                    coefficient: format!("{} (mod {})", self.coeff(e), self.modulus),
                });
            }
        }
        let n = self.precision.min(cap);
        if n < 0 {
            return Err(SeriesError::PrecisionTooSmall {
                precision: self.precision,
                reason: "cannot invert a series with no known nonnegative part".into(),
            });
        }
        let plain = ResidueSeries {
            modulus: self.modulus,
            coeffs: (0..=n).map(|e| self.coeff(e)).collect(),
        };
        Ok(Self::from_residue(&plain.invert()?))
    }

    /// Convert to an ordinary residue series, erroring on surviving
    /// negative-exponent terms.
    pub(crate) fn to_residue(&self, cap: usize) -> Result<ResidueSeries> {
        for e in self.min_exp..0 {
            if self.coeff(e) != 0 {
                return Err(SeriesError::NegativeExponent {
                    exponent: e,
                    coefficient: format!("{} (mod {})", self.coeff(e), self.modulus),
                });
            }
        }
        if self.precision < 0 {
            return Err(SeriesError::PrecisionTooSmall {
                precision: self.precision,
                reason: "series has no known coefficients at nonnegative exponents".into(),
            });
        }
        let n = self.precision.min(cap as i64);
        Ok(ResidueSeries {
            modulus: self.modulus,
            coeffs: (0..=n).map(|e| self.coeff(e)).collect(),
        })
    }
}
