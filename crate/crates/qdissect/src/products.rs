//! Infinite products, theta series, and the generating functions built
//! from them: Pochhammer symbols (q^a; q^b)_oo, the Euler products
//! f_n = (q^n; q^n)_oo, two-variable theta series f(a, b), overpartition
//! counting functions, and the multisum sides of the Rogers-Ramanujan-
//! Gordon identities and their overpartition analogues.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Result, SeriesError};
use crate::series::laurent::{LaurentSeries, EXACT};
use crate::series::truncated::TruncatedSeries;

/// The sign attached to a q-power in a product or theta argument: `Plus`
/// for factors like (q^a; q^b) and arguments +q^r, `Minus` for (-q^a; q^b)
/// and -q^r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// +1 or -1.
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// self raised to an exponent of the given parity.
    fn pow_parity(self, odd: bool) -> i64 {
        match (self, odd) {
            (Sign::Minus, true) => -1,
            _ => 1,
        }
    }
}

/// Operational bound on theta parameters; beyond this the dense coefficient
/// window for the negative-exponent dip could get absurdly large.
const THETA_PARAM_LIMIT: i64 = 1_000_000;

/// (sq^a; q^b)_oo truncated at q^n: the product of (1 - s q^{a + tb}) over
/// t >= 0, where s is +1 or -1 per `sign`.  Requires a, b >= 1.
///
/// Each factor is applied in place, costing O(n) coefficient additions, so
/// the whole product is O(n^2 / b) additions and no multiplications.
pub fn pochhammer_signed(sign: Sign, a: u32, b: u32, n: usize) -> TruncatedSeries {
    assert!(a >= 1 && b >= 1, "Pochhammer offsets must be positive");
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::one();
    let mut e = a as usize;
    while e <= n {
        apply_binomial_factor(&mut coeffs, sign, e);
        e += b as usize;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Multiply the coefficient vector in place by (1 - s q^e).
fn apply_binomial_factor(coeffs: &mut [BigInt], sign: Sign, e: usize) {
    let n = coeffs.len() - 1;
    for x in (e..=n).rev() {
        let (lo, hi) = coeffs.split_at_mut(x);
        match sign {
            Sign::Plus => hi[0] -= &lo[x - e],
            Sign::Minus => hi[0] += &lo[x - e],
        }
    }
}

/// (q^a; q^b)_oo truncated at q^n.
pub fn pochhammer(a: u32, b: u32, n: usize) -> TruncatedSeries {
    pochhammer_signed(Sign::Plus, a, b, n)
}

/// The finite product (sq^a; q^b)_count truncated at q^n.
pub fn pochhammer_finite(sign: Sign, a: u32, b: u32, count: u32, n: usize) -> TruncatedSeries {
    assert!(a >= 1 && b >= 1, "Pochhammer offsets must be positive");
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::one();
    for t in 0..count as usize {
        let e = a as usize + t * b as usize;
        if e > n {
            break; // remaining factors are 1 + O(q^{n+1})
        }
        apply_binomial_factor(&mut coeffs, sign, e);
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// (sq^a; q^b)_oo as a Laurent series, allowing a <= 0.
///
/// Factors with nonpositive exponents are what the Jacobi triple product
/// produces for z = +-q^r with r >= 1; there are finitely many of them and
/// the working precision is widened so the result is still sound at q^n.
pub fn laurent_pochhammer(sign: Sign, a: i64, b: u32, n: i64) -> LaurentSeries {
    let b = b as i64;
    assert!(b >= 1, "Pochhammer step must be positive");
    // Sum of the negative factor exponents; each such factor costs that
    // much precision when the working window is capped.
    let mut dip = 0i64;
    let mut e = a;
    while e < 0 {
        dip += e;
        e += b;
    }
    let working = n - dip;
    let mut acc = LaurentSeries::from_parts(0, vec![BigInt::one()], working.max(0));
    let mut e = a;
    while e <= working {
        acc = acc.mul(&binomial_poly(sign, e));
        e += b;
    }
    acc
}

/// The exact polynomial 1 - s q^e (e of either sign).
fn binomial_poly(sign: Sign, e: i64) -> LaurentSeries {
    if e == 0 {
        return LaurentSeries::monomial(1 - sign.unit(), 0);
    }
    let lo = e.min(0);
    let hi = e.max(0);
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    coeffs[(0 - lo) as usize] += 1;
    coeffs[(e - lo) as usize] += -sign.unit();
    LaurentSeries::from_parts(lo, coeffs, EXACT)
}

/// The Euler product f_m = (q^m; q^m)_oo truncated at q^n.
pub fn euler_f(m: u32, n: usize) -> TruncatedSeries {
    pochhammer(m, m, n)
}

/// The two-variable theta series f(a, b) = sum over all integers t of
/// a^{t(t+1)/2} b^{t(t-1)/2}, for a = sign_a q^r and b = sign_b q^s,
/// truncated at q^n.
///
/// The exponent of the t-th term is r t(t+1)/2 + s t(t-1)/2, which tends to
/// +infinity in both directions exactly when r + s > 0; otherwise the series
/// does not truncate and an error is returned.  Distinct t can land on the
/// same exponent, and those contributions accumulate.
pub fn theta_f(sign_a: Sign, r: i64, sign_b: Sign, s: i64, n: i64) -> Result<LaurentSeries> {
    if r + s <= 0 {
        return Err(SeriesError::NonTruncatingTheta { r, s });
    }
    if r.abs() > THETA_PARAM_LIMIT || s.abs() > THETA_PARAM_LIMIT || n.abs() > THETA_PARAM_LIMIT {
        return Err(SeriesError::InvalidParameter(format!(
            "theta parameters out of range: r={r}, s={s}, n={n}"
        )));
    }
    let mut terms: Vec<(i64, i64)> = Vec::new();
    let mut scan = |dir: i64| {
        // Walk t = dir, 2 dir, ... until the exponent both exceeds n and is
        // moving away from the parabola's vertex.
        let mut t: i64 = if dir > 0 { 0 } else { -1 };
        loop {
            let (e, sign) = theta_term(sign_a, r, sign_b, s, t);
            let next = t + dir;
            let (e_next, _) = theta_term(sign_a, r, sign_b, s, next);
            if e <= n as i128 {
                terms.push((e as i64, sign));
            } else if e_next >= e {
                break;
            }
            t = next;
        }
    };
    scan(1);
    scan(-1);
    if terms.is_empty() {
        // Every term lies above q^n; the window is empty but the floor
        // claim "nothing at or below n" is sound.
        return Ok(LaurentSeries::from_parts(n, vec![BigInt::zero()], n));
    }
    let min_e = terms.iter().map(|&(e, _)| e).min().unwrap();
    if n - min_e > 4_000_000 {
        return Err(SeriesError::InvalidParameter(format!(
            "theta coefficient window [{min_e}, {n}] is too large"
        )));
    }
    let mut coeffs = vec![BigInt::zero(); (n - min_e + 1) as usize];
    for (e, sign) in terms {
        coeffs[(e - min_e) as usize] += sign;
    }
    Ok(LaurentSeries::from_parts(min_e, coeffs, n))
}

/// Exponent (as i128, overflow-safe) and sign of the t-th theta term.
fn theta_term(sign_a: Sign, r: i64, sign_b: Sign, s: i64, t: i64) -> (i128, i64) {
    let t = t as i128;
    let tri_up = t * (t + 1) / 2; // exponent on a
    let tri_down = t * (t - 1) / 2; // exponent on b
    let e = r as i128 * tri_up + s as i128 * tri_down;
    let sign = sign_a.pow_parity(tri_up % 2 != 0) * sign_b.pow_parity(tri_down % 2 != 0);
    (e, sign)
}

/// Generating function for overpartitions: f_2 / f_1^2 truncated at q^n.
pub fn overpartition_gf(n: usize) -> TruncatedSeries {
    let f1_inv = euler_f(1, n).invert().expect("constant term is 1");
    euler_f(2, n).mul(&f1_inv).mul(&f1_inv)
}

/// Generating function for overpartitions counted with the theta weight
/// f(-q^i, -q^{K-i}): the series whose n-th coefficient is the signed
/// count S_{K,i}(n).  Requires 1 <= i <= K/2.
pub fn s_gf(big_k: u32, i: u32, n: usize) -> Result<TruncatedSeries> {
    s_gf_from(&overpartition_gf(n), big_k, i)
}

/// Same as `s_gf`, reusing an already-computed overpartition series (the
/// congruence suite calls this many times at the same precision).
pub fn s_gf_from(pbar: &TruncatedSeries, big_k: u32, i: u32) -> Result<TruncatedSeries> {
    if i < 1 || 2 * i > big_k {
        return Err(SeriesError::InvalidParameter(format!(
            "s_gf requires 1 <= i <= K/2, got K={big_k}, i={i}"
        )));
    }
    let n = pbar.precision();
    let theta = theta_f(Sign::Minus, i as i64, Sign::Minus, (big_k - i) as i64, n as i64)?
        .to_truncated(n)
        .expect("theta with positive exponents has no negative terms");
    Ok(theta.mul(pbar))
}

/// Generating function for singular overpartitions: the n-th coefficient
/// counts overpartitions of n whose Frobenius symbol avoids k-residue
/// columns except in the i and k-i classes,
/// (q^k; q^k)_oo (-q^i; q^k)_oo (-q^{k-i}; q^k)_oo / (q; q)_oo.
/// Requires 0 < i < k.
pub fn singular_overpartition_gf(k: u32, i: u32, n: usize) -> Result<TruncatedSeries> {
    if i < 1 || i >= k {
        return Err(SeriesError::InvalidParameter(format!(
            "singular overpartition series requires 0 < i < k, got k={k}, i={i}"
        )));
    }
    let f1_inv = euler_f(1, n).invert().expect("constant term is 1");
    Ok(pochhammer(k, k, n)
        .mul(&pochhammer_signed(Sign::Minus, i, k, n))
        .mul(&pochhammer_signed(Sign::Minus, k - i, k, n))
        .mul(&f1_inv))
}

/// Parameters (k, i, j) shared by the Rogers-Ramanujan-Gordon identity
/// families: j = 1 picks the odd-modulus / overpartition-even cases, j = 0
/// the even-modulus ones.  Valid when k >= 2, j <= 1, and 0 < 2i < 2k + j.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GordonParams {
    pub k: u32,
    pub i: u32,
    pub j: u8,
}

impl GordonParams {
    pub fn new(k: u32, i: u32, j: u8) -> Result<Self> {
        if j > 1 {
            return Err(SeriesError::InvalidParameter(format!("j must be 0 or 1, got {j}")));
        }
        if k < 2 {
            return Err(SeriesError::InvalidParameter(format!("k must be at least 2, got {k}")));
        }
        if i < 1 || 2 * i >= 2 * k + j as u32 {
            return Err(SeriesError::InvalidParameter(format!(
                "i must satisfy 0 < 2i < 2k + j, got k={k}, i={i}, j={j}"
            )));
        }
        Ok(GordonParams { k, i, j })
    }

    /// All valid parameter triples with k at most k_max.
    pub fn all_valid(k_max: u32) -> Vec<GordonParams> {
        let mut out = Vec::new();
        for k in 2..=k_max {
            for j in 0..=1u8 {
                for i in 1..=k {
                    if let Ok(p) = GordonParams::new(k, i, j) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

/// Product side of the Rogers-Ramanujan-Gordon identities for ordinary
/// partitions: (q^i, q^{2k+j-i}, q^{2k+j}; q^{2k+j})_oo / (q; q)_oo.
pub fn gordon_product(p: GordonParams, n: usize) -> TruncatedSeries {
    let m = 2 * p.k + p.j as u32;
    let f1_inv = euler_f(1, n).invert().expect("constant term is 1");
    pochhammer(p.i, m, n)
        .mul(&pochhammer(m - p.i, m, n))
        .mul(&pochhammer(m, m, n))
        .mul(&f1_inv)
}

/// Multisum side of the Rogers-Ramanujan-Gordon identities:
///
///   sum over N_1 >= ... >= N_{k-1} >= 0 of
///     q^{N_1^2 + ... + N_{k-1}^2 + N_i + ... + N_{k-1}}
///     / [ (q)_{N_1 - N_2} ... (q)_{N_{k-2} - N_{k-1}}
///         (q^{2-j}; q^{2-j})_{N_{k-1}} ].
///
/// The linear terms start at N_i; at i = k (possible only when j = 1)
/// there are none, which is the k = 2 case of the first Rogers-Ramanujan
/// identity.
pub fn gordon_multisum(p: GordonParams, n: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(n);
    let tables = MultisumTables::new(p, n, max_n1_quadratic(n));
    let mut tuple = vec![0usize; (p.k - 1) as usize];
    gordon_rec(p, n, &tables, &mut tuple, 0, max_n1_quadratic(n), 0, &mut acc);
    acc
}

/// Shared denominator tables for the multisum enumerations.
struct MultisumTables {
    /// inv_q[d] = 1 / (q; q)_d.
    inv_q: Vec<TruncatedSeries>,
    /// inv_base[c] = 1 / (q^{2-j}; q^{2-j})_c.
    inv_base: Vec<TruncatedSeries>,
    /// neg_q[m] = (-q; q)_m (used by the overpartition sum's numerator).
    neg_q: Vec<TruncatedSeries>,
}

impl MultisumTables {
    fn new(p: GordonParams, n: usize, max_n1: usize) -> Self {
        let base = 2 - p.j as u32;
        let inv_q = (0..=max_n1 as u32)
            .map(|d| {
                pochhammer_finite(Sign::Plus, 1, 1, d, n)
                    .invert()
                    .expect("constant term is 1")
            })
            .collect();
        let inv_base = (0..=max_n1 as u32)
            .map(|c| {
                pochhammer_finite(Sign::Plus, base, base, c, n)
                    .invert()
                    .expect("constant term is 1")
            })
            .collect();
        let neg_q = (0..=max_n1 as u32)
            .map(|m| pochhammer_finite(Sign::Minus, 1, 1, m, n))
            .collect();
        MultisumTables { inv_q, inv_base, neg_q }
    }

    /// 1 / [(q)_{N_1-N_2} ... (q)_{N_{k-2}-N_{k-1}} (q^{2-j})_{N_{k-1}}].
    fn denominator_inverse(&self, tuple: &[usize], n: usize) -> TruncatedSeries {
        let mut term = TruncatedSeries::one(n);
        for w in tuple.windows(2) {
            term = term.mul(&self.inv_q[w[0] - w[1]]);
        }
        term.mul(&self.inv_base[tuple[tuple.len() - 1]])
    }
}

/// Largest N_1 with N_1^2 <= n.
fn max_n1_quadratic(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    while r * r > n {
        r = r.saturating_sub(1);
    }
    r
}

/// Largest N_1 with N_1 (N_1 + 1) / 2 <= n.
fn max_n1_triangular(n: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 2) / 2 <= n {
        r += 1;
    }
    r
}

fn gordon_rec(
    p: GordonParams,
    n: usize,
    tables: &MultisumTables,
    tuple: &mut [usize],
    level: usize, // 0-based; tuple[level] is N_{level+1}
    prev: usize,
    exp: usize,
    acc: &mut TruncatedSeries,
) {
    let k1 = (p.k - 1) as usize;
    if level == k1 {
        let term = tables.denominator_inverse(tuple, n);
        *acc = acc.add(&term.shift_up(exp));
        return;
    }
    for nt in 0..=prev {
        // N at 1-based level `level+1` carries a linear term when level+1 >= i.
        let linear = if level + 1 >= p.i as usize { nt } else { 0 };
        let contribution = nt * nt + linear;
        if exp + contribution > n {
            break;
        }
        tuple[level] = nt;
        gordon_rec(p, n, tables, tuple, level + 1, nt, exp + contribution, acc);
    }
}

/// Product side of the overpartition analogue:
/// (-q; q)_oo (q^i, q^{2k-1+j-i}, q^{2k-1+j}; q^{2k-1+j})_oo / (q; q)_oo.
pub fn gordon_overpartition_product(p: GordonParams, n: usize) -> TruncatedSeries {
    let m = 2 * p.k - 1 + p.j as u32;
    let f1_inv = euler_f(1, n).invert().expect("constant term is 1");
    pochhammer_signed(Sign::Minus, 1, 1, n)
        .mul(&pochhammer(p.i, m, n))
        .mul(&pochhammer(m - p.i, m, n))
        .mul(&pochhammer(m, m, n))
        .mul(&f1_inv)
}

/// Multisum side of the overpartition analogue:
///
///   sum over N_1 >= ... >= N_{k-1} >= 0 of
///     q^{N_1(N_1+1)/2 + N_2^2 + ... + N_{k-1}^2 + N_{i+1} + ... + N_{k-1}}
///     (-q)_{N_1 - 1} (1 + q^{N_i})
///     / [ (q)_{N_1-N_2} ... (q)_{N_{k-2}-N_{k-1}} (q^{2-j}; q^{2-j})_{N_{k-1}} ]
///
/// with the conventions that the N_1 = 0 summand is 1 and that for i = k
/// (which only occurs with j = 1) the factor uses N_k = 0, i.e. equals 2.
pub fn gordon_overpartition_multisum(p: GordonParams, n: usize) -> TruncatedSeries {
    let max_n1 = max_n1_triangular(n);
    let tables = MultisumTables::new(p, n, max_n1);
    let mut acc = TruncatedSeries::one(n); // the N_1 = 0 summand
    let mut tuple = vec![0usize; (p.k - 1) as usize];
    for n1 in 1..=max_n1 {
        let exp = n1 * (n1 + 1) / 2;
        tuple[0] = n1;
        overpartition_rec(p, n, &tables, &mut tuple, 1, n1, exp, &mut acc);
    }
    acc
}

fn overpartition_rec(
    p: GordonParams,
    n: usize,
    tables: &MultisumTables,
    tuple: &mut [usize],
    level: usize,
    prev: usize,
    exp: usize,
    acc: &mut TruncatedSeries,
) {
    let k1 = (p.k - 1) as usize;
    if level == k1 {
        let mut term = tables
            .denominator_inverse(tuple, n)
            .mul(&tables.neg_q[tuple[0] - 1]);
        // The (1 + q^{N_i}) factor; N_k is 0 by convention when i = k.
        let ni = if (p.i as usize) <= k1 { tuple[p.i as usize - 1] } else { 0 };
        if exp + ni <= n {
            term = term.add(&term.shift_up(ni));
        } else {
            // q^{N_i} would fall entirely beyond the truncation order.
        }
        *acc = acc.add(&term.shift_up(exp));
        return;
    }
    for nt in 0..=prev {
        let linear = if level + 1 > p.i as usize { nt } else { 0 };
        let contribution = nt * nt + linear;
        if exp + contribution > n {
            break;
        }
        tuple[level] = nt;
        overpartition_rec(p, n, tables, tuple, level + 1, nt, exp + contribution, acc);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_f1_is_pentagonal() {
        let f1 = euler_f(1, 20);
        let expected = TruncatedSeries::from_terms(
            &[(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)],
            20,
        )
        .unwrap();
        assert_eq!(f1, expected);
    }

    #[test]
    fn inverse_of_f1_counts_partitions() {
        let inv = euler_f(1, 10).invert().unwrap();
        let partition_numbers = [1i64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &p) in partition_numbers.iter().enumerate() {
            assert_eq!(inv.coeff(n).unwrap(), &BigInt::from(p), "p({n})");
        }
    }

    #[test]
    fn overpartition_counts() {
        let pbar = overpartition_gf(10);
        let expected = [1i64, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(pbar.coeff(n).unwrap(), &BigInt::from(c), "pbar({n})");
        }
    }

    #[test]
    fn theta_terms_at_equal_exponents_accumulate() {
        // f(q, q) = sum q^{t^2}: t and -t collide for t >= 1.
        let t = theta_f(Sign::Plus, 1, Sign::Plus, 1, 16).unwrap();
        assert_eq!(t.coeff(0).unwrap(), BigInt::from(1));
        assert_eq!(t.coeff(1).unwrap(), BigInt::from(2));
        assert_eq!(t.coeff(4).unwrap(), BigInt::from(2));
        assert_eq!(t.coeff(9).unwrap(), BigInt::from(2));
        assert_eq!(t.coeff(2).unwrap(), BigInt::zero());
    }

    #[test]
    fn pentagonal_theorem_as_theta() {
        // f(-q, -q^2) = (q; q)_oo.
        let t = theta_f(Sign::Minus, 1, Sign::Minus, 2, 40).unwrap();
        let f1 = LaurentSeries::from_truncated(&euler_f(1, 40));
        assert!(t.equal_up_to(&f1, 40));
    }

    #[test]
    fn theta_with_negative_argument_exponent() {
        // f(-q^{-3}, -q^{21}) has its minimum exponent -3 at t = 1.
        let t = theta_f(Sign::Minus, -3, Sign::Minus, 21, 60).unwrap();
        assert_eq!(t.min_exp(), -3);
        assert_eq!(t.coeff(-3).unwrap(), BigInt::from(-1));
        assert_eq!(t.coeff(0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn theta_requires_positive_exponent_sum() {
        assert!(matches!(
            theta_f(Sign::Plus, 2, Sign::Plus, -2, 10),
            Err(SeriesError::NonTruncatingTheta { r: 2, s: -2 })
        ));
    }

    #[test]
    fn jacobi_triple_product_small() {
        // sum (-1)^t q^{t^2} = f(-q, -q) = (q; q^2)_oo^2 (q^2; q^2)_oo.
        let lhs = theta_f(Sign::Minus, 1, Sign::Minus, 1, 50).unwrap();
        let rhs = pochhammer(1, 2, 50).pow(2).mul(&euler_f(2, 50));
        assert!(lhs.equal_up_to(&LaurentSeries::from_truncated(&rhs), 50));
    }

    #[test]
    fn laurent_pochhammer_matches_plain_for_positive_offset() {
        let a = laurent_pochhammer(Sign::Minus, 2, 3, 30);
        let b = LaurentSeries::from_truncated(&pochhammer_signed(Sign::Minus, 2, 3, 30));
        assert!(a.equal_up_to(&b, 30));
    }

    #[test]
    fn laurent_pochhammer_zero_offset_doubles() {
        // (-q^0; q)_oo = 2 (-q; q)_oo.
        let a = laurent_pochhammer(Sign::Minus, 0, 1, 20);
        let b = LaurentSeries::from_truncated(&pochhammer_signed(Sign::Minus, 1, 1, 20).scale(2));
        assert!(a.equal_up_to(&b, 20));
    }

    #[test]
    fn gordon_params_validity() {
        assert!(GordonParams::new(2, 1, 0).is_ok());
        assert!(GordonParams::new(2, 2, 1).is_ok()); // i = k allowed when j = 1
        assert!(GordonParams::new(2, 2, 0).is_err()); // 2i = 2k + 0
        assert!(GordonParams::new(1, 1, 0).is_err());
        assert!(GordonParams::new(3, 0, 0).is_err());
        assert!(GordonParams::new(3, 1, 2).is_err());
        assert_eq!(GordonParams::all_valid(2).len(), 3); // (2,1,0), (2,1,1), (2,2,1)
    }

    #[test]
    fn rogers_ramanujan_via_gordon() {
        // k = 2, i = 2, j = 1: sum q^{N^2} / (q)_N = 1 / (q, q^4; q^5)_oo.
        let p = GordonParams::new(2, 2, 1).unwrap();
        let lhs = gordon_multisum(p, 30);
        let rhs = gordon_product(p, 30);
        assert_eq!(lhs, rhs);
        // Its coefficients count partitions with gaps >= 2: 1, 1, 1, 1, 2, 2, 3 ...
        let expected = [1i64, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(lhs.coeff(n).unwrap(), &BigInt::from(c));
        }
        // k = 2, i = 1, j = 1: sum q^{N^2+N} / (q)_N = 1 / (q^2, q^3; q^5)_oo.
        let p = GordonParams::new(2, 1, 1).unwrap();
        let lhs = gordon_multisum(p, 30);
        assert_eq!(lhs, gordon_product(p, 30));
        assert_eq!(lhs.coeff(1).unwrap(), &BigInt::zero());
    }

    #[test]
    fn overpartition_multisum_smallest_case() {
        // (k, i, j) = (2, 2, 1): sum q^{N(N+1)/2} (-q)_{N-1} * 2 / (q)_N.
        let p = GordonParams::new(2, 2, 1).unwrap();
        let lhs = gordon_overpartition_multisum(p, 24);
        let rhs = gordon_overpartition_product(p, 24);
        assert_eq!(lhs, rhs);
        let head = [1i64, 2, 2, 4, 6, 8];
        for (n, &c) in head.iter().enumerate() {
            assert_eq!(lhs.coeff(n).unwrap(), &BigInt::from(c));
        }
    }

    #[test]
    fn overpartition_multisum_with_overline_factor() {
        let p = GordonParams::new(2, 1, 1).unwrap();
        assert_eq!(
            gordon_overpartition_multisum(p, 24),
            gordon_overpartition_product(p, 24)
        );
    }

    #[test]
    fn s_gf_rejects_bad_parameters() {
        assert!(s_gf(5, 3, 10).is_err()); // 2i > K
        assert!(s_gf(5, 0, 10).is_err());
        assert!(s_gf(5, 1, 10).is_ok());
    }

    #[test]
    fn singular_gf_smallest_case() {
        // k = 3, i = 1 counts overpartitions with no part divisible by 3:
        // 1, 2, 4, 6, 10, 16, ...
        let s = singular_overpartition_gf(3, 1, 5).unwrap();
        let expected = [1i64, 2, 4, 6, 10, 16];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(s.coeff(n).unwrap(), &BigInt::from(c), "at {n}");
        }
    }
}
