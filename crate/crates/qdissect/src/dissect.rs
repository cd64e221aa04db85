//! Dissections: splitting a series by residue class of the exponent, plus
//! the specific closed forms for the pieces of the theta factor and of the
//! overpartition generating function.
//!
//! The m-dissection of sum_e c(e) q^e collects, for each residue r, the
//! subseries sum_p c(m*p + r) q^p.  Recombining the components recovers the
//! original series exactly.  The closed forms below express the components
//! of f(-q^i, -q^(k-i)) and of f_2/f_1^2 as theta functions and Euler
//! quotients; each builder returns the full right-hand side so callers can
//! compare it against the directly computed series.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Result, SeriesError};
use crate::products::{euler_f, theta_f, Sign};
use crate::series::{LaurentSeries, TruncatedSeries};

/// A series split into residue-class components.
///
/// Component r of an m-dissection holds sum_p c(m*p + r) q^p, so the
/// original exponent m*p + r is recovered from position p and class r.
#[derive(Debug, Clone)]
pub struct Dissection {
    base: usize,
    parts: Vec<TruncatedSeries>,
}

/// Split a series by residue class of the exponent mod base.
///
/// Requires base >= 2 and precision >= base - 1 (so every class holds at
/// least one known coefficient).
pub fn dissect(s: &TruncatedSeries, base: usize) -> Result<Dissection> {
    if base < 2 {
        return Err(SeriesError::InvalidParameter(format!(
            "dissection base must be at least 2, got {base}"
        )));
    }
    let n = s.precision();
    if n + 1 < base {
        return Err(SeriesError::PrecisionTooSmall {
            precision: n as i64,
            reason: format!("a {base}-dissection needs precision at least {}", base - 1),
        });
    }
    let parts = (0..base)
        .map(|r| {
            let coeffs: Vec<BigInt> = (r..=n).step_by(base).map(|e| s.coeffs()[e].clone()).collect();
            TruncatedSeries::from_coeffs(coeffs)
        })
        .collect();
    Ok(Dissection { base, parts })
}

impl Dissection {
    pub fn base(&self) -> usize {
        self.base
    }

    /// The class-r component as a series in q (exponents divided by base).
    pub fn component(&self, r: usize) -> &TruncatedSeries {
        &self.parts[r]
    }

    pub fn parts(&self) -> &[TruncatedSeries] {
        &self.parts
    }

    /// Reassemble the original series.  The result's precision is the
    /// largest exponent below which every class is known.
    pub fn recombine(&self) -> TruncatedSeries {
        let n = self
            .parts
            .iter()
            .enumerate()
            .map(|(r, part)| self.base * (part.precision() + 1) + r)
            .min()
            .expect("dissection has at least two parts")
            - 1;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (r, part) in self.parts.iter().enumerate() {
            for (p, c) in part.coeffs().iter().enumerate() {
                let e = self.base * p + r;
                if e <= n {
                    coeffs[e] = c.clone();
                }
            }
        }
        TruncatedSeries::from_coeffs(coeffs)
    }
}

fn require_theta_pair(i: u32, k: u32) -> Result<(i64, i64)> {
    if i == 0 || i >= k {
        return Err(SeriesError::InvalidParameter(format!(
            "theta dissection needs 1 <= i < k, got i={i}, k={k}"
        )));
    }
    Ok((i as i64, k as i64))
}

/// Right-hand side of the 3-dissection of f(-q^i, -q^(k-i)), valid for
/// 1 <= i < k:
///
/// ```text
/// f(-q^(3i+3k), -q^(6k-3i))
///   - q^i     * f(-q^(3i+6k), -q^(3k-3i))
///   + q^(2i+k) * f(-q^(-3i),   -q^(3i+9k))
/// ```
///
/// Grouping the bilateral theta sum by the index mod 3 produces the three
/// terms; the last one picks up a negative theta argument exponent, which
/// the prefactor q^(2i+k) lifts back to nonnegative powers of q.
pub fn theta_3_dissection(i: u32, k: u32, n: i64) -> Result<LaurentSeries> {
    let (i, k) = require_theta_pair(i, k)?;
    let t1 = theta_f(Sign::Minus, 3 * i + 3 * k, Sign::Minus, 6 * k - 3 * i, n)?;
    let t2 = theta_f(Sign::Minus, 3 * i + 6 * k, Sign::Minus, 3 * k - 3 * i, n)?;
    let t3 = theta_f(Sign::Minus, -3 * i, Sign::Minus, 3 * i + 9 * k, n)?;
    Ok(t1
        .sub(&t2.shift(i))
        .add(&t3.shift(2 * i + k)))
}

/// Right-hand side of the 4-dissection of f(-q^i, -q^(k-i)), valid for
/// 1 <= i < k:
///
/// ```text
/// f(q^(6k+4i), q^(10k-4i))
///   - q^i      * f(q^(10k+4i), q^(6k-4i))
///   + q^(2i+k)  * f(q^(14k+4i), q^(2k-4i))
///   - q^(3i+3k) * f(q^(18k+4i), q^(-2k-4i))
/// ```
///
/// Grouping the bilateral sum by the index mod 4 makes the sign (-1)^t
/// constant on each class, so all four theta functions here have positive
/// arguments.
pub fn theta_4_dissection(i: u32, k: u32, n: i64) -> Result<LaurentSeries> {
    let (i, k) = require_theta_pair(i, k)?;
    let t1 = theta_f(Sign::Plus, 6 * k + 4 * i, Sign::Plus, 10 * k - 4 * i, n)?;
    let t2 = theta_f(Sign::Plus, 10 * k + 4 * i, Sign::Plus, 6 * k - 4 * i, n)?;
    let t3 = theta_f(Sign::Plus, 14 * k + 4 * i, Sign::Plus, 2 * k - 4 * i, n)?;
    let t4 = theta_f(Sign::Plus, 18 * k + 4 * i, Sign::Plus, -2 * k - 4 * i, n)?;
    Ok(t1
        .sub(&t2.shift(i))
        .add(&t3.shift(2 * i + k))
        .sub(&t4.shift(3 * i + 3 * k)))
}

/// Product of Euler products: the f_m^e factors in num over those in den.
/// Each pair (m, e) contributes f_m^e.
pub fn euler_quotient(n: usize, num: &[(u32, u32)], den: &[(u32, u32)]) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(n);
    for &(m, e) in num {
        acc = acc.mul(&euler_f(m, n).pow(e));
    }
    let mut d = TruncatedSeries::one(n);
    for &(m, e) in den {
        d = d.mul(&euler_f(m, n).pow(e));
    }
    acc.mul(&d.invert().expect("Euler products start with constant term 1"))
}

/// The three terms of the 3-dissection of f_2/f_1^2, in residue order:
///
/// ```text
/// f_6^4 f_9^6 / (f_3^8 f_18^3)          (exponents = 0 mod 3)
///   + 2q  * f_6^3 f_9^3 / f_3^7          (exponents = 1 mod 3)
///   + 4q^2 * f_6^2 f_18^3 / f_3^6        (exponents = 2 mod 3)
/// ```
pub fn overpartition_3_dissection_terms(n: usize) -> [TruncatedSeries; 3] {
    let a = euler_quotient(n, &[(6, 4), (9, 6)], &[(3, 8), (18, 3)]);
    let b = euler_quotient(n, &[(6, 3), (9, 3)], &[(3, 7)]);
    let c = euler_quotient(n, &[(6, 2), (18, 3)], &[(3, 6)]);
    [a, b.scale(2).shift_up(1), c.scale(4).shift_up(2)]
}

/// Sum of the three terms: the claimed 3-dissection form of f_2/f_1^2.
pub fn overpartition_3_dissection(n: usize) -> TruncatedSeries {
    let [a, b, c] = overpartition_3_dissection_terms(n);
    a.add(&b).add(&c)
}

/// The four terms of the 4-dissection of f_2/f_1^2, in residue order:
///
/// ```text
/// f_8^19 / (f_4^14 f_16^6)
///   + 2q  * f_8^13 / (f_4^12 f_16^2)
///   + 4q^2 * f_8^7 f_16^2 / f_4^10
///   + 8q^3 * f_8 f_16^6 / f_4^8
/// ```
pub fn overpartition_4_dissection_terms(n: usize) -> [TruncatedSeries; 4] {
    let a = euler_quotient(n, &[(8, 19)], &[(4, 14), (16, 6)]);
    let b = euler_quotient(n, &[(8, 13)], &[(4, 12), (16, 2)]);
    let c = euler_quotient(n, &[(8, 7), (16, 2)], &[(4, 10)]);
    let d = euler_quotient(n, &[(8, 1), (16, 6)], &[(4, 8)]);
    [
        a,
        b.scale(2).shift_up(1),
        c.scale(4).shift_up(2),
        d.scale(8).shift_up(3),
    ]
}

/// Sum of the four terms: the claimed 4-dissection form of f_2/f_1^2.
pub fn overpartition_4_dissection(n: usize) -> TruncatedSeries {
    let [a, b, c, d] = overpartition_4_dissection_terms(n);
    a.add(&b).add(&c).add(&d)
}

/// The fully dissected form of the S-series generating function: the
/// 3-dissection of the theta factor times the 3-dissection of f_2/f_1^2
/// (nine products in all).  Equal to s_gf(big_k, i, n) when both claimed
/// dissections hold.
pub fn s_expansion_3(big_k: u32, i: u32, n: usize) -> Result<TruncatedSeries> {
    if i == 0 || 2 * i > big_k {
        return Err(SeriesError::InvalidParameter(format!(
            "S-series needs 1 <= i <= K/2, got i={i}, K={big_k}"
        )));
    }
    let theta = theta_3_dissection(i, big_k, n as i64)?.to_truncated(n)?;
    Ok(theta.mul(&overpartition_3_dissection(n)))
}
