//! The acceptance gate: one test per acceptance criterion, each printing a
//! single pass line when it holds.  Every comparison is exact — series
//! coefficients are arbitrary-precision integers and congruences are checked
//! by integer divisibility, so there are no tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use qdissect::congruence::run_suite;
use qdissect::dissect::{dissect, theta_3_dissection, theta_4_dissection};
use qdissect::oracle::{
    count_frequency_restricted, count_overpartitions_upto, count_plain_frequency_restricted,
    count_plain_residue_restricted, count_residue_restricted,
};
use qdissect::products::overpartition_gf;
use qdissect::registry::check_identity;
use qdissect::{Family, GordonParams, ResidueSeries, TruncatedSeries};

fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn check(id: &str, pairs: &[(&str, i64)], precision: usize) {
    let report = check_identity(id, &params(pairs), precision, None).unwrap();
    assert!(
        report.is_verified(),
        "{id} {pairs:?} at precision {precision}: {:?}",
        report.mismatch
    );
}

/// 1. The overpartition generating function f_2/f_1^2 agrees with direct
///    enumeration for all n <= 30.
#[test]
fn criterion_1_overpartition_counts() {
    let counts = count_overpartitions_upto(30);
    let series = overpartition_gf(30);
    for (n, &c) in counts.iter().enumerate() {
        assert_eq!(series.coeff(n).unwrap(), &BigInt::from(c), "n={n}");
    }
    assert_eq!(counts[3], 8);
    println!("acceptance 1: pass — overpartition counts match enumeration for n <= 30");
}

/// 2. The triple and quadruple dissections of f_2/f_1^2 hold exactly to
///    precision 200.
#[test]
fn criterion_2_overpartition_dissections() {
    check("p3", &[], 200);
    check("p4", &[], 200);
    println!("acceptance 2: pass — overpartition 3-/4-dissections exact to q^200");
}

/// 3. The theta-function dissection lemmas hold for every 1 <= i < k <= 12
///    at precision 120, with all negative Laurent exponents cancelling.
#[test]
fn criterion_3_theta_dissections() {
    for k in 2i64..=12 {
        for i in 1..k {
            let p = [("i", i), ("k", k)];
            check("d3", &p, 120);
            check("diss4", &p, 120);
            // The right-hand sides convert to ordinary power series, which
            // fails if any negative exponent survives the cancellation.
            theta_3_dissection(i as u32, k as u32, 120).unwrap().to_truncated(120).unwrap();
            theta_4_dissection(i as u32, k as u32, 120).unwrap().to_truncated(120).unwrap();
        }
    }
    println!("acceptance 3: pass — theta 3-/4-dissections for all i < k <= 12 to q^120");
}

/// 4. The nine-term expansion of the theta-weighted series matches its
///    product form for every valid (k, i) with k <= 12, at precision 100.
#[test]
fn criterion_4_s_series_expansion() {
    for k in 2i64..=12 {
        for i in 1..=k / 2 {
            check("S3", &[("k", k), ("i", i)], 100);
        }
    }
    println!("acceptance 4: pass — nine-term S expansion for all valid (k, i), k <= 12, to q^100");
}

/// 5. The fourth-power Euler-quotient congruence holds mod 4 to q^100.
#[test]
fn criterion_5_quotient_congruence() {
    let report = check_identity("q24q8", &BTreeMap::new(), 100, None).unwrap();
    assert!(report.is_verified(), "{:?}", report.mismatch);
    assert_eq!(report.modulus, Some(4));
    println!("acceptance 5: pass — fourth-power quotient congruence mod 4 to q^100");
}

/// 6. The residue-restricted and frequency-restricted counting functions
///    agree for k in {2, 3, 4}, all valid i and j, n <= 20 — for
///    overpartitions and for ordinary partitions.
#[test]
fn criterion_6_dual_enumeration() {
    for p in GordonParams::all_valid(4) {
        for n in 0..=20u64 {
            assert_eq!(
                count_residue_restricted(p, n),
                count_frequency_restricted(p, n),
                "overpartitions, {p:?}, n={n}"
            );
            assert_eq!(
                count_plain_residue_restricted(p, n),
                count_plain_frequency_restricted(p, n),
                "partitions, {p:?}, n={n}"
            );
        }
    }
    println!("acceptance 6: pass — dual enumeration agrees for k <= 4, n <= 20");
}

/// 7. The multisum and product forms of both families of identities agree
///    to q^40 for every (k, i, j) with k <= 4.
#[test]
fn criterion_7_multisum_equals_product() {
    for p in GordonParams::all_valid(4) {
        let pairs = [("k", p.k as i64), ("i", p.i as i64), ("j", p.j as i64)];
        check("AB", &pairs, 40);
        check("CD", &pairs, 40);
    }
    println!("acceptance 7: pass — multisum = product to q^40 for all k <= 4");
}

/// 8. Every built-in congruence claim — the dissection cases for all valid
///    (K, i) with K <= 20 and the two mod-3 singular progressions — holds
///    for n <= 200, and each report carries the bound.
#[test]
fn criterion_8_congruence_suite() {
    let reports = run_suite(20, 200).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert!(r.is_verified(), "{:?}", r);
        assert_eq!(r.n_max, 200);
    }
    let singular = reports.iter().filter(|r| r.claim.family == Family::Singular).count();
    assert_eq!(singular, 2, "both mod-3 singular progressions present");
    println!(
        "acceptance 8: pass — {} congruence claims hold for n <= 200",
        reports.len()
    );
}

/// 9. Randomized property suites: series ring axioms, dissect/recombine
///    round trips, instances of the triple-product identity, and the
///    reduction homomorphism.
#[test]
fn criterion_9_property_suites() {
    let cases = |n| Config { cases: n, ..Config::default() };
    let coeffs = prop::collection::vec(-50i64..=50, 1..=20).prop_map(|v| {
        TruncatedSeries::from_coeffs(v.into_iter().map(BigInt::from).collect())
    });

    let mut runner = TestRunner::new(cases(64));
    runner
        .run(&(coeffs.clone(), coeffs.clone(), coeffs.clone()), |(a, b, c)| {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b), b.add(&a));
            Ok(())
        })
        .unwrap();

    let mut runner = TestRunner::new(cases(64));
    runner
        .run(&(coeffs.clone(), 2usize..=5), |(s, base)| {
            prop_assume!(s.precision() + 1 >= base);
            let d = dissect(&s, base).unwrap();
            let r = d.recombine();
            prop_assert!(r.equal_up_to(&s, r.precision().min(s.precision())));
            Ok(())
        })
        .unwrap();

    let mut runner = TestRunner::new(cases(64));
    runner
        .run(&(coeffs.clone(), coeffs, prop::sample::select(vec![2u64, 3, 4, 9])), |(a, b, m)| {
            let (ra, rb) = (ResidueSeries::from_series(&a, m), ResidueSeries::from_series(&b, m));
            prop_assert_eq!(ResidueSeries::from_series(&a.mul(&b), m), ra.mul(&rb));
            prop_assert_eq!(ResidueSeries::from_series(&a.add(&b), m), ra.add(&rb));
            Ok(())
        })
        .unwrap();

    for a in 0..=6i64 {
        for sign in [1i64, -1] {
            check("jtp", &[("a", a), ("sign", sign)], 60);
        }
    }
    println!("acceptance 9: pass — property suites (ring axioms, dissection round trip, triple product, reduction homomorphism)");
}
