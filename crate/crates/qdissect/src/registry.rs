//! A fixed registry of named identity checks.
//!
//! Each entry couples an id with a parameter schema and a recipe for
//! computing both sides; check_identity validates the parameters, evaluates
//! the sides, and reports the outcome uniformly.  Comparisons are exact
//! unless a modulus is given (or implied: the collapse of f_2^4/f_1^8
//! defaults to mod 4, which is where it holds).

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign as NumSign};
use num_traits::Zero;

use crate::dissect::{
    euler_quotient, overpartition_3_dissection, overpartition_4_dissection, s_expansion_3,
    theta_3_dissection, theta_4_dissection,
};
use crate::error::{Result, SeriesError};
use crate::expr::QExpr;
use crate::products::{
    euler_f, gordon_multisum, gordon_overpartition_multisum, gordon_overpartition_product,
    gordon_product, laurent_pochhammer, overpartition_gf, s_gf, theta_f, GordonParams, Sign,
};
use crate::report::{IdentityReport, Mismatch};
use crate::series::{LaurentSeries, TruncatedSeries};

/// The registered ids, each with a one-line description naming its
/// parameters.
pub fn identities() -> &'static [(&'static str, &'static str)] {
    &[
        ("p3", "3-dissection of f_2/f_1^2, exact; no parameters"),
        ("p4", "4-dissection of f_2/f_1^2, exact; no parameters"),
        ("d3", "3-dissection of f(-q^i, -q^(k-i)); params i, k with 1 <= i < k"),
        ("diss4", "4-dissection of f(-q^i, -q^(k-i)); params i, k with 1 <= i < k"),
        ("S3", "dissected form of the S-series gf; params k, i with 1 <= i <= k/2"),
        ("AB", "partition multisum = product; params k >= 2, 0 < 2i < 2k+j, j in {0,1}"),
        ("CD", "overpartition multisum = product; params k >= 2, 0 < 2i < 2k+j, j in {0,1}"),
        ("q24q8", "f_2^4/f_1^8 = (f_6^4 f_9^6/(f_3^8 f_18^3))^4; modulus defaults to 4"),
        ("jtp", "triple product at z = sign*q^a; params a >= 0, sign = 1 or -1"),
    ]
}

fn require_params(params: &BTreeMap<String, i64>, allowed: &[&str]) -> Result<()> {
    for name in params.keys() {
        if !allowed.contains(&name.as_str()) {
            let expected = if allowed.is_empty() {
                "none".to_string()
            } else {
                allowed.join(", ")
            };
            return Err(SeriesError::InvalidParameter(format!(
                "unknown parameter {name}; expected: {expected}"
            )));
        }
    }
    for name in allowed {
        if !params.contains_key(*name) {
            return Err(SeriesError::InvalidParameter(format!(
                "missing parameter {name}"
            )));
        }
    }
    Ok(())
}

fn param_in(params: &BTreeMap<String, i64>, name: &str, lo: i64, hi: i64) -> Result<i64> {
    let v = params[name];
    if v < lo || v > hi {
        return Err(SeriesError::InvalidParameter(format!(
            "parameter {name}={v} out of range [{lo}, {hi}]"
        )));
    }
    Ok(v)
}

fn reduced(c: &BigInt, m: u64) -> BigInt {
    let m = BigInt::from(m);
    let r = c % &m;
    if r.sign() == NumSign::Minus {
        r + m
    } else {
        r
    }
}

fn mismatch_at(e: i64, lhs: &BigInt, rhs: &BigInt, modulus: Option<u64>) -> Option<Mismatch> {
    let differ = match modulus {
        None => lhs != rhs,
        Some(m) => !((lhs - rhs) % BigInt::from(m)).is_zero(),
    };
    differ.then(|| {
        let (a, b) = match modulus {
            None => (lhs.clone(), rhs.clone()),
            Some(m) => (reduced(lhs, m), reduced(rhs, m)),
        };
        Mismatch {
            exponent: e,
            lhs: a.to_string(),
            rhs: b.to_string(),
        }
    })
}

fn compare_truncated(
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
    n: usize,
    modulus: Option<u64>,
) -> Option<Mismatch> {
    (0..=n).find_map(|e| mismatch_at(e as i64, &lhs.coeffs()[e], &rhs.coeffs()[e], modulus))
}

/// Compare from the lowest stored exponent (so a nonzero coefficient
/// surviving at a negative exponent on either side counts as a mismatch)
/// through q^n.
fn compare_laurent(
    lhs: &LaurentSeries,
    rhs: &LaurentSeries,
    n: i64,
    modulus: Option<u64>,
) -> Result<Option<Mismatch>> {
    let lo = lhs.min_exp().min(rhs.min_exp()).min(0);
    for e in lo..=n {
        if let Some(m) = mismatch_at(e, &lhs.coeff(e)?, &rhs.coeff(e)?, modulus) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn gordon_params(params: &BTreeMap<String, i64>) -> Result<GordonParams> {
    require_params(params, &["k", "i", "j"])?;
    let k = param_in(params, "k", 2, 64)?;
    let i = param_in(params, "i", 1, 128)?;
    let j = param_in(params, "j", 0, 1)?;
    GordonParams::new(k as u32, i as u32, j as u8)
}

/// Run the named identity check at the given precision.  The optional
/// modulus switches the comparison to coefficients mod m; q24q8 compares
/// mod 4 when no modulus is supplied, every other identity compares
/// exactly by default.
pub fn check_identity(
    id: &str,
    params: &BTreeMap<String, i64>,
    precision: usize,
    modulus: Option<u64>,
) -> Result<IdentityReport> {
    let n = precision;
    let report = |modulus: Option<u64>, mismatch: Option<Mismatch>| {
        Ok(IdentityReport::new(id, params.clone(), n as i64, modulus, mismatch))
    };
    match id {
        "p3" => {
            require_params(params, &[])?;
            let lhs = overpartition_gf(n);
            let rhs = overpartition_3_dissection(n);
            report(modulus, compare_truncated(&lhs, &rhs, n, modulus))
        }
        "p4" => {
            require_params(params, &[])?;
            let lhs = overpartition_gf(n);
            let rhs = overpartition_4_dissection(n);
            report(modulus, compare_truncated(&lhs, &rhs, n, modulus))
        }
        "d3" | "diss4" => {
            require_params(params, &["i", "k"])?;
            let i = param_in(params, "i", 1, 10_000)?;
            let k = param_in(params, "k", 2, 10_000)?;
            if i >= k {
                return Err(SeriesError::InvalidParameter(format!(
                    "need i < k, got i={i}, k={k}"
                )));
            }
            let (i, k) = (i as u32, k as u32);
            let lhs = theta_f(Sign::Minus, i as i64, Sign::Minus, (k - i) as i64, n as i64)?;
            let rhs = if id == "d3" {
                theta_3_dissection(i, k, n as i64)?
            } else {
                theta_4_dissection(i, k, n as i64)?
            };
            report(modulus, compare_laurent(&lhs, &rhs, n as i64, modulus)?)
        }
        "S3" => {
            require_params(params, &["k", "i"])?;
            let k = param_in(params, "k", 2, 10_000)?;
            let i = param_in(params, "i", 1, 5_000)?;
            if 2 * i > k {
                return Err(SeriesError::InvalidParameter(format!(
                    "need 1 <= i <= k/2, got i={i}, k={k}"
                )));
            }
            let lhs = s_gf(k as u32, i as u32, n)?;
            let rhs = s_expansion_3(k as u32, i as u32, n)?;
            report(modulus, compare_truncated(&lhs, &rhs, n, modulus))
        }
        "AB" => {
            let p = gordon_params(params)?;
            let lhs = gordon_multisum(p, n);
            let rhs = gordon_product(p, n);
            report(modulus, compare_truncated(&lhs, &rhs, n, modulus))
        }
        "CD" => {
            let p = gordon_params(params)?;
            let lhs = gordon_overpartition_multisum(p, n);
            let rhs = gordon_overpartition_product(p, n);
            report(modulus, compare_truncated(&lhs, &rhs, n, modulus))
        }
        "q24q8" => {
            require_params(params, &[])?;
            let m = modulus.unwrap_or(4);
            let lhs = euler_quotient(n, &[(2, 4)], &[(1, 8)]);
            let rhs = euler_quotient(n, &[(6, 4), (9, 6)], &[(3, 8), (18, 3)]).pow(4);
            report(Some(m), compare_truncated(&lhs, &rhs, n, Some(m)))
        }
        "jtp" => {
            require_params(params, &["a", "sign"])?;
            let a = param_in(params, "a", 0, 200)?;
            let sign = params["sign"];
            if sign != 1 && sign != -1 {
                return Err(SeriesError::InvalidParameter(format!(
                    "parameter sign must be 1 or -1, got {sign}"
                )));
            }
            let (sig, neg) = if sign == 1 {
                (Sign::Plus, Sign::Minus)
            } else {
                (Sign::Minus, Sign::Plus)
            };
            // Both sides are genuine Laurent series once a >= 2 (the term
            // t = -1 sits at q^(1-a)).  Multiplying a factor whose lowest
            // exponent is -d against a series known to q^w only stays sound
            // to q^(w-d), so every factor is built d wider than the target.
            let mut d = 0i64;
            let mut e = 1 - a;
            while e < 0 {
                d -= e;
                e += 2;
            }
            let w = n as i64 + d;
            let lhs = theta_f(sig, 1 + a, sig, 1 - a, n as i64)?;
            let rhs = laurent_pochhammer(neg, 1 + a, 2, w)
                .mul(&laurent_pochhammer(neg, 1 - a, 2, w))
                .mul(&LaurentSeries::from_truncated(&euler_f(2, w as usize)));
            report(modulus, compare_laurent(&lhs, &rhs, n as i64, modulus)?)
        }
        other => {
            let known: Vec<&str> = identities().iter().map(|(id, _)| *id).collect();
            Err(SeriesError::InvalidParameter(format!(
                "unknown identity {other}; known ids: {}",
                known.join(", ")
            )))
        }
    }
}

/// Compare two expressions through q^n (optionally coefficientwise mod m),
/// reporting under the given label.
pub fn verify_expressions(
    label: &str,
    lhs: &QExpr,
    rhs: &QExpr,
    precision: usize,
    modulus: Option<u64>,
) -> Result<IdentityReport> {
    let a = lhs.eval_laurent(precision as i64)?;
    let b = rhs.eval_laurent(precision as i64)?;
    let mismatch = compare_laurent(&a, &b, precision as i64, modulus)?;
    Ok(IdentityReport::new(
        label,
        BTreeMap::new(),
        precision as i64,
        modulus,
        mismatch,
    ))
}
