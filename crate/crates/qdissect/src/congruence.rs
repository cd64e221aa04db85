//! Congruences in arithmetic progressions: claims of the form
//! "the coefficient of q^(d*n + a) is divisible by m for every n >= 0",
//! a built-in suite of such claims for the S-series and singular
//! overpartition counting functions, and an empirical scanner that
//! rediscovers them.
//!
//! A check is always a finite verification: it tests indices n = 0..=n_max
//! and reports the bound alongside the outcome.  Reports never claim more
//! than was computed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Result, SeriesError};
use crate::products::{overpartition_gf, s_gf_from, singular_overpartition_gf};
use crate::report::{ClaimReport, Counterexample};
use crate::series::TruncatedSeries;

/// Which counting function a claim constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Coefficients of f(-q^i, -q^(k-i)) * f_2/f_1^2.
    S,
    /// Singular overpartitions: coefficients of
    /// (q^k; q^k) (-q^i; q^k) (-q^(k-i); q^k) / (q; q).
    Singular,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::S => write!(f, "S"),
            Family::Singular => write!(f, "singular"),
        }
    }
}

/// The assertion that coefficient d*n + a of the family's series is
/// divisible by m for all n >= 0.
///
/// Field order gives the canonical sort: family, then k, i, a, d, m.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CongruenceClaim {
    pub family: Family,
    pub k: u32,
    pub i: u32,
    /// Residue of the progression, 0 <= a < d.
    pub a: u64,
    /// Modulus of the progression.
    pub d: u64,
    /// The coefficient must vanish mod m.
    pub m: u64,
    /// Where the claim came from: a built-in tag naming the dissection case,
    /// or "scanned" for empirical findings.
    pub source: String,
}

/// Largest exponent a series may be asked for; guards against runaway
/// progression parameters.
const EXPONENT_CAP: u64 = 100_000_000;

impl CongruenceClaim {
    pub fn new(
        family: Family,
        k: u32,
        i: u32,
        a: u64,
        d: u64,
        m: u64,
        source: &str,
    ) -> Result<Self> {
        if d == 0 {
            return Err(SeriesError::InvalidParameter(
                "progression modulus d must be positive".into(),
            ));
        }
        if a >= d {
            return Err(SeriesError::InvalidParameter(format!(
                "residue a must satisfy 0 <= a < d, got a={a}, d={d}"
            )));
        }
        if m == 0 {
            return Err(SeriesError::InvalidParameter(
                "coefficient modulus m must be positive".into(),
            ));
        }
        match family {
            Family::S => {
                if i == 0 || 2 * i > k {
                    return Err(SeriesError::InvalidParameter(format!(
                        "S-series claim needs 1 <= i <= k/2, got i={i}, k={k}"
                    )));
                }
            }
            Family::Singular => {
                if i == 0 || i >= k {
                    return Err(SeriesError::InvalidParameter(format!(
                        "singular claim needs 0 < i < k, got i={i}, k={k}"
                    )));
                }
            }
        }
        Ok(CongruenceClaim {
            family,
            k,
            i,
            a,
            d,
            m,
            source: source.to_string(),
        })
    }

    /// Precision needed to test indices 0..=n_max: the exponent d*n_max + a.
    pub fn required_precision(&self, n_max: u64) -> Result<usize> {
        let e = self
            .d
            .checked_mul(n_max)
            .and_then(|x| x.checked_add(self.a))
            .filter(|&x| x <= EXPONENT_CAP)
            .ok_or_else(|| {
                SeriesError::InvalidParameter(format!(
                    "progression exponent d*n_max + a = {}*{} + {} is out of range",
                    self.d, n_max, self.a
                ))
            })?;
        Ok(e as usize)
    }

    /// The claim's series, computed to the given precision.
    pub fn series(&self, precision: usize) -> Result<TruncatedSeries> {
        match self.family {
            Family::S => s_gf_from(&overpartition_gf(precision), self.k, self.i),
            Family::Singular => singular_overpartition_gf(self.k, self.i, precision),
        }
    }
}

/// Check one claim, computing its series from scratch.
pub fn check_claim(claim: &CongruenceClaim, n_max: u64) -> Result<ClaimReport> {
    let series = claim.series(claim.required_precision(n_max)?)?;
    check_claim_with(claim, &series, n_max)
}

/// Check one claim against a precomputed series (which must be the claim's
/// own series, at precision >= d*n_max + a).
pub fn check_claim_with(
    claim: &CongruenceClaim,
    series: &TruncatedSeries,
    n_max: u64,
) -> Result<ClaimReport> {
    let need = claim.required_precision(n_max)?;
    if series.precision() < need {
        return Err(SeriesError::PrecisionTooSmall {
            precision: series.precision() as i64,
            reason: format!("claim needs coefficients through q^{need}"),
        });
    }
    let modulus = BigInt::from(claim.m);
    for n in 0..=n_max {
        let e = (claim.d * n + claim.a) as usize;
        let c = &series.coeffs()[e];
        if !(c % &modulus).is_zero() {
            let counterexample = Counterexample {
                n,
                exponent: e as u64,
                coefficient: c.to_string(),
            };
            return Ok(ClaimReport::new(claim.clone(), n_max, Some(counterexample)));
        }
    }
    Ok(ClaimReport::new(claim.clone(), n_max, None))
}

fn push_s_claims(out: &mut Vec<CongruenceClaim>, k: u32, i: u32, residues: &[u64], d: u64, source: &str) {
    for &a in residues {
        out.push(
            CongruenceClaim::new(Family::S, k, i, a, d, 4, source)
                .expect("built-in claims are valid"),
        );
    }
}

/// The built-in claim suite: every congruence the dissection analysis
/// yields for S-series with 1 <= i <= k/2 and k <= k_max, plus the two
/// mod-3 progressions of the (3,1) singular overpartition function (those
/// join the suite once k_max >= 3).  Sorted canonically.
pub fn builtin_claims(k_max: u32) -> Vec<CongruenceClaim> {
    let mut out = Vec::new();
    for k in 2..=k_max.max(1) {
        for i in 1..=k / 2 {
            // Cases from the 3-dissection (coefficients mod 4).
            match (k % 3, i % 3) {
                (2, 1) => push_s_claims(&mut out, k, i, &[3, 6], 9, "dissect3-k2i1"),
                (2, 2) => {
                    let residues: [u64; 2] = match i % 9 {
                        2 => [5, 8],
                        5 => [2, 8],
                        8 => [2, 5],
                        _ => unreachable!("i = 2 mod 3 forces i mod 9 into {{2, 5, 8}}"),
                    };
                    push_s_claims(&mut out, k, i, &residues, 9, "dissect3-k2i2");
                }
                (0, 0) => push_s_claims(&mut out, k, i, &[2], 3, "dissect3-k0i0"),
                (2, 0) => {
                    let residues: [u64; 2] = match (k - i) % 9 {
                        2 => [5, 8],
                        5 => [2, 8],
                        8 => [2, 5],
                        _ => unreachable!("k-i = 2 mod 3 forces (k-i) mod 9 into {{2, 5, 8}}"),
                    };
                    push_s_claims(&mut out, k, i, &residues, 9, "dissect3-k2i0");
                }
                _ => {}
            }
            // Cases from the 4-dissection (coefficients mod 4).  Only even
            // k admits these: the theta exponents [k t^2 + (2i-k) t]/2 then
            // miss whole residue classes mod 4, while for odd k every class
            // is hit (t = -1 already puts k - i in class 3 when k = 3 and
            // i = 0 mod 4, e.g. the coefficient of q^7 in the (11, 4) series
            // is 55).
            match (k % 4, i % 4) {
                (2, 1) => push_s_claims(&mut out, k, i, &[3], 4, "dissect4-k2i1"),
                (2, 3) => push_s_claims(&mut out, k, i, &[2], 4, "dissect4-k2i3"),
                (0, 0) => push_s_claims(&mut out, k, i, &[2, 3], 4, "dissect4-k0i0"),
                _ => {}
            }
        }
    }
    if k_max >= 3 {
        for a in [3, 6] {
            out.push(
                CongruenceClaim::new(Family::Singular, 3, 1, a, 9, 3, "singular-mod3")
                    .expect("built-in claims are valid"),
            );
        }
    }
    out.sort();
    out
}

/// Run the built-in suite.  The overpartition series is computed once at
/// the largest precision any S claim needs and shared across all of them.
/// Reports come back in the canonical claim order.
pub fn run_suite(k_max: u32, n_max: u64) -> Result<Vec<ClaimReport>> {
    let claims = builtin_claims(k_max);
    let mut s_need = 0usize;
    for c in claims.iter().filter(|c| c.family == Family::S) {
        s_need = s_need.max(c.required_precision(n_max)?);
    }
    let pbar = overpartition_gf(s_need);

    let mut reports = Vec::with_capacity(claims.len());
    let mut cached: Option<((Family, u32, u32), TruncatedSeries)> = None;
    for claim in &claims {
        let key = (claim.family, claim.k, claim.i);
        if cached.as_ref().map(|(k, _)| *k) != Some(key) {
            let series = match claim.family {
                Family::S => s_gf_from(&pbar, claim.k, claim.i)?,
                Family::Singular => {
                    let mut need = 0usize;
                    for c in claims.iter().filter(|c| (c.family, c.k, c.i) == key) {
                        need = need.max(c.required_precision(n_max)?);
                    }
                    singular_overpartition_gf(claim.k, claim.i, need)?
                }
            };
            cached = Some((key, series));
        }
        let (_, series) = cached.as_ref().unwrap();
        reports.push(check_claim_with(claim, series, n_max)?);
    }
    Ok(reports)
}

/// Scan every S-series with k <= k_max for progressions d*n + a whose
/// coefficients all vanish mod m up to index n_max.  Findings carry
/// source "scanned" and are empirical: verified up to the bound, nothing
/// more.
pub fn scan(k_max: u32, d: u64, m: u64, n_max: u64) -> Result<Vec<CongruenceClaim>> {
    if d == 0 || m < 2 {
        return Err(SeriesError::InvalidParameter(format!(
            "scan needs d >= 1 and m >= 2, got d={d}, m={m}"
        )));
    }
    let probe = CongruenceClaim::new(Family::S, 2, 1, d - 1, d, m, "scanned")?;
    let need = probe.required_precision(n_max)?;
    let pbar = overpartition_gf(need);
    let modulus = BigInt::from(m);

    let mut found = Vec::new();
    for k in 2..=k_max.max(1) {
        for i in 1..=k / 2 {
            let series = s_gf_from(&pbar, k, i)?;
            for a in 0..d {
                let holds = (0..=n_max).all(|n| {
                    let e = (d * n + a) as usize;
                    (&series.coeffs()[e] % &modulus).is_zero()
                });
                if holds {
                    found.push(CongruenceClaim::new(Family::S, k, i, a, d, m, "scanned")?);
                }
            }
        }
    }
    Ok(found)
}
