//! Brute-force enumeration oracles.
//!
//! Everything in this module counts partitions and overpartitions by
//! enumerating the objects themselves (or, for the plain overpartition
//! count, by a two-line recurrence on part values).  None of it touches
//! the series machinery, so agreement between a generating function and
//! its oracle is meaningful evidence that both are right.

use crate::error::{Result, SeriesError};
use crate::products::GordonParams;

/// An overpartition: a partition where the last occurrence of a value may
/// additionally be overlined.  Entries are (value, plain multiplicity,
/// overlined?) in descending value order, with at least one copy each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overpartition {
    entries: Vec<(u64, u32, bool)>,
}

impl Overpartition {
    /// Sum of all parts, overlined ones included.
    pub fn weight(&self) -> u64 {
        self.entries
            .iter()
            .map(|&(v, m, over)| v * (m as u64 + over as u64))
            .sum()
    }

    /// Number of non-overlined copies of v (written f_v).
    pub fn plain_count(&self, v: u64) -> u32 {
        self.entries
            .iter()
            .find(|&&(val, _, _)| val == v)
            .map_or(0, |&(_, m, _)| m)
    }

    /// 1 if v occurs overlined, else 0.
    pub fn overline_count(&self, v: u64) -> u32 {
        self.entries
            .iter()
            .find(|&&(val, _, _)| val == v)
            .map_or(0, |&(_, _, over)| over as u32)
    }

    /// Number of overlined parts with value at most l.
    pub fn overlined_up_to(&self, l: u64) -> u32 {
        self.entries
            .iter()
            .filter(|&&(v, _, over)| over && v <= l)
            .count() as u32
    }

    /// Largest part value (0 for the empty overpartition).
    pub fn max_part(&self) -> u64 {
        self.entries.first().map_or(0, |&(v, _, _)| v)
    }

    /// True if no part is overlined, i.e. this is an ordinary partition.
    pub fn is_plain(&self) -> bool {
        self.entries.iter().all(|&(_, _, over)| !over)
    }

    /// The (value, plain multiplicity, overlined?) entries, descending.
    pub fn entries(&self) -> &[(u64, u32, bool)] {
        &self.entries
    }
}

/// Call f once for every overpartition of n (including the empty one when
/// n = 0).
pub fn for_each_overpartition<F: FnMut(&Overpartition)>(n: u64, mut f: F) {
    let mut buf = Vec::new();
    overpartition_rec(n, n, true, &mut buf, &mut f);
}

/// Call f once for every ordinary partition of n, presented as an
/// `Overpartition` with no overlines.
pub fn for_each_partition<F: FnMut(&Overpartition)>(n: u64, mut f: F) {
    let mut buf = Vec::new();
    overpartition_rec(n, n, false, &mut buf, &mut f);
}

fn overpartition_rec<F: FnMut(&Overpartition)>(
    rem: u64,
    max_v: u64,
    overlines: bool,
    buf: &mut Vec<(u64, u32, bool)>,
    f: &mut F,
) {
    if rem == 0 {
        f(&Overpartition { entries: buf.clone() });
        return;
    }
    if max_v == 0 {
        return;
    }
    // Largest value strictly below max_v first, so entries stay descending.
    overpartition_rec(rem, max_v - 1, overlines, buf, f);
    let v = max_v.min(rem);
    if v < max_v {
        return; // v > rem: no copies fit, already handled above
    }
    for total in 1..=rem / v {
        buf.push((v, total as u32, false));
        overpartition_rec(rem - total * v, v - 1, overlines, buf, f);
        buf.pop();
        if overlines {
            buf.push((v, total as u32 - 1, true));
            overpartition_rec(rem - total * v, v - 1, overlines, buf, f);
            buf.pop();
        }
    }
}

/// Beyond this weight the plain overpartition count approaches u64 range.
const COUNT_LIMIT: u64 = 120;

/// Number of overpartitions of each weight 0..=n_max, by the recurrence
/// "for each part value v, append 0 copies, or m >= 1 copies with the last
/// one optionally overlined" (so m >= 1 contributes twice).
pub fn count_overpartitions_upto(n_max: u64) -> Vec<u64> {
    assert!(n_max <= COUNT_LIMIT, "overpartition counts overflow u64 near weight 150");
    let n = n_max as usize;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for v in 1..=n {
        // with_v[rem] = sum over m >= 1 of counts[rem - m*v]
        let mut with_v = vec![0u64; n + 1];
        for rem in v..=n {
            with_v[rem] = counts[rem - v] + with_v[rem - v];
        }
        for rem in v..=n {
            counts[rem] += 2 * with_v[rem];
        }
    }
    counts
}

/// Number of overpartitions of n.
pub fn count_overpartitions(n: u64) -> u64 {
    count_overpartitions_upto(n)[n as usize]
}

/// Split a theta-series index K into the Rogers-Ramanujan-Gordon
/// parameters (k, j) with K = 2k - 1 + j, pairing it with i.
/// Requires 1 <= i <= K/2.
pub fn gordon_split(big_k: u32, i: u32) -> Result<GordonParams> {
    if big_k < 2 || i < 1 || 2 * i > big_k {
        return Err(SeriesError::InvalidParameter(format!(
            "need 1 <= i <= K/2, got K={big_k}, i={i}"
        )));
    }
    let (k, j) = if big_k % 2 == 0 {
        (big_k / 2, 1)
    } else {
        ((big_k + 1) / 2, 0)
    };
    GordonParams::new(k, i, j)
}

/// Does the overpartition avoid the residues {0, i, -i} mod 2k-1+j on its
/// non-overlined parts?  In the special case i = k, j = 1 the restriction
/// is instead: no part at all (overlined or not) is divisible by k.
pub fn satisfies_residue_conditions(op: &Overpartition, p: GordonParams) -> bool {
    if p.i == p.k && p.j == 1 {
        return op.entries.iter().all(|&(v, _, _)| v % p.k as u64 != 0);
    }
    let m = (2 * p.k - 1 + p.j as u32) as u64;
    let banned = [0, p.i as u64 % m, (m - p.i as u64) % m];
    op.entries
        .iter()
        .filter(|&&(_, plain, _)| plain > 0)
        .all(|&(v, _, _)| !banned.contains(&(v % m)))
}

/// Does the overpartition satisfy the frequency conditions
///
///   (i)   f_1 <= i - 1  (non-overlined ones only),
///   (ii)  f_l + f_lbar + f_{l+1} <= k - 1 for every l >= 1,
///   (iii) when (ii) is tight at l:
///         l f_l + l f_lbar + (l+1) f_{l+1}  ==  V(l) + i - 1  (mod 2 - j),
///
/// where f_l counts non-overlined copies of l, f_lbar is 1 if l is
/// overlined, and V(l) counts overlined parts at most l?  For j = 1 the
/// modulus is 1 and (iii) is vacuous.
pub fn satisfies_frequency_conditions(op: &Overpartition, p: GordonParams) -> bool {
    if op.plain_count(1) > p.i - 1 {
        return false;
    }
    let bound = p.k - 1;
    for l in 1..=op.max_part() {
        let fl = op.plain_count(l);
        let flbar = op.overline_count(l);
        let fl1 = op.plain_count(l + 1);
        if fl + flbar + fl1 > bound {
            return false;
        }
        if p.j == 0 && fl + flbar + fl1 == bound {
            let weighted = l * (fl as u64 + flbar as u64) + (l + 1) * fl1 as u64;
            let target = op.overlined_up_to(l) as u64 + p.i as u64 - 1;
            if weighted % 2 != target % 2 {
                return false;
            }
        }
    }
    true
}

/// The ordinary-partition residue condition: no part congruent to 0 or
/// +-i mod 2k+j.
pub fn satisfies_plain_residue_conditions(op: &Overpartition, p: GordonParams) -> bool {
    debug_assert!(op.is_plain());
    let m = (2 * p.k + p.j as u32) as u64;
    let banned = [0, p.i as u64 % m, (m - p.i as u64) % m];
    op.entries.iter().all(|&(v, _, _)| !banned.contains(&(v % m)))
}

/// The ordinary-partition frequency conditions: f_1 <= i - 1,
/// f_l + f_{l+1} <= k - 1, and when tight, l f_l + (l+1) f_{l+1} == i - 1
/// (mod 2 - j).
pub fn satisfies_plain_frequency_conditions(op: &Overpartition, p: GordonParams) -> bool {
    debug_assert!(op.is_plain());
    if op.plain_count(1) > p.i - 1 {
        return false;
    }
    let bound = p.k - 1;
    for l in 1..=op.max_part() {
        let fl = op.plain_count(l);
        let fl1 = op.plain_count(l + 1);
        if fl + fl1 > bound {
            return false;
        }
        if p.j == 0 && fl + fl1 == bound {
            let weighted = l * fl as u64 + (l + 1) * fl1 as u64;
            if weighted % 2 != (p.i as u64 - 1) % 2 {
                return false;
            }
        }
    }
    true
}

/// Overpartitions of n passing the residue conditions, by enumeration.
pub fn count_residue_restricted(p: GordonParams, n: u64) -> u64 {
    let mut count = 0;
    for_each_overpartition(n, |op| {
        if satisfies_residue_conditions(op, p) {
            count += 1;
        }
    });
    count
}

/// Overpartitions of n passing the frequency conditions, by enumeration.
pub fn count_frequency_restricted(p: GordonParams, n: u64) -> u64 {
    let mut count = 0;
    for_each_overpartition(n, |op| {
        if satisfies_frequency_conditions(op, p) {
            count += 1;
        }
    });
    count
}

/// Ordinary partitions of n passing the plain residue conditions.
pub fn count_plain_residue_restricted(p: GordonParams, n: u64) -> u64 {
    let mut count = 0;
    for_each_partition(n, |op| {
        if satisfies_plain_residue_conditions(op, p) {
            count += 1;
        }
    });
    count
}

/// Ordinary partitions of n passing the plain frequency conditions.
pub fn count_plain_frequency_restricted(p: GordonParams, n: u64) -> u64 {
    let mut count = 0;
    for_each_partition(n, |op| {
        if satisfies_plain_frequency_conditions(op, p) {
            count += 1;
        }
    });
    count
}

/// The coefficient S_{K,i}(n) of the theta-weighted overpartition series,
/// counted combinatorially: it equals the number of overpartitions of n
/// whose non-overlined parts avoid {0, +-i} mod K (all parts off the
/// multiples of K/2 in the even special case i = K/2).
pub fn s_count(big_k: u32, i: u32, n: u64) -> Result<u64> {
    let p = gordon_split(big_k, i)?;
    Ok(count_residue_restricted(p, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overpartitions_of_three() {
        // 3, 3bar, 2+1, 2bar+1, 2+1bar, 2bar+1bar, 1+1+1, 1bar+1+1.
        let mut seen = Vec::new();
        for_each_overpartition(3, |op| {
            assert_eq!(op.weight(), 3);
            seen.push(op.clone());
        });
        assert_eq!(seen.len(), 8);
        // All distinct.
        for (a, x) in seen.iter().enumerate() {
            for y in seen.iter().skip(a + 1) {
                assert_ne!(x, y);
            }
        }
    }

    #[test]
    fn generator_agrees_with_recurrence() {
        let table = count_overpartitions_upto(14);
        for n in 0..=14u64 {
            let mut c = 0u64;
            for_each_overpartition(n, |_| c += 1);
            assert_eq!(c, table[n as usize], "weight {n}");
        }
    }

    #[test]
    fn known_overpartition_counts() {
        let table = count_overpartitions_upto(10);
        assert_eq!(table, vec![1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232]);
    }

    #[test]
    fn partition_generator_counts() {
        let partition_numbers = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &p) in partition_numbers.iter().enumerate() {
            let mut c = 0u64;
            for_each_partition(n as u64, |op| {
                assert!(op.is_plain());
                c += 1;
            });
            assert_eq!(c, p, "p({n})");
        }
    }

    #[test]
    fn residue_counts_small_goldens() {
        // (k,i,j) = (2,2,1): non-overlined parts odd (avoid 0, 2 mod 4);
        // the series starts 1, 2, 2, 4, 6, 8(, 12, 16).
        let p = GordonParams::new(2, 2, 1).unwrap();
        let expected = [1u64, 2, 2, 4, 6, 8, 12, 16];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(count_residue_restricted(p, n as u64), c, "at {n}");
        }
        // (k,i,j) = (2,1,1): non-overlined parts = 2 mod 4: 1, 1, 2, 3, 4.
        let p = GordonParams::new(2, 1, 1).unwrap();
        let expected = [1u64, 1, 2, 3, 4];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(count_residue_restricted(p, n as u64), c, "at {n}");
        }
    }

    #[test]
    fn frequency_count_hand_checked() {
        // (k,i,j) = (2,1,0) at n = 2: of {2, 2bar, 1+1, 1bar+1} only {2}
        // survives: 1+1 and 1bar+1 have a plain one (f_1 <= 0 fails), and
        // 2bar fails the parity condition at l = 2 (2 != V(2) = 1 mod 2).
        let p = GordonParams::new(2, 1, 0).unwrap();
        assert_eq!(count_frequency_restricted(p, 2), 1);
        assert_eq!(count_residue_restricted(p, 2), 1);
    }

    #[test]
    fn residue_equals_frequency_smallest() {
        for (k, i, j) in [(2, 1, 0), (2, 1, 1), (2, 2, 1), (3, 1, 0), (3, 2, 1)] {
            let p = GordonParams::new(k, i, j).unwrap();
            for n in 0..=10 {
                assert_eq!(
                    count_residue_restricted(p, n),
                    count_frequency_restricted(p, n),
                    "(k,i,j)=({k},{i},{j}), n={n}"
                );
            }
        }
    }

    #[test]
    fn plain_counts_match_rogers_ramanujan() {
        // (2,2,1): parts avoiding 0, +-2 mod 5 vs gaps >= 2; both give
        // 1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6.
        let p = GordonParams::new(2, 2, 1).unwrap();
        let expected = [1u64, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(count_plain_residue_restricted(p, n as u64), c);
            assert_eq!(count_plain_frequency_restricted(p, n as u64), c);
        }
    }

    #[test]
    fn gordon_split_both_parities() {
        let p = gordon_split(6, 3).unwrap();
        assert_eq!((p.k, p.i, p.j), (3, 3, 1));
        let p = gordon_split(5, 2).unwrap();
        assert_eq!((p.k, p.i, p.j), (3, 2, 0));
        assert!(gordon_split(5, 3).is_err());
        assert!(gordon_split(4, 0).is_err());
    }

    #[test]
    fn s_count_special_case_bans_all_multiples() {
        // K = 6, i = 3 -> (k,j) = (3,1), i = k: no part divisible by 3,
        // overlined or not: 1, 2, 4, 6, 10, 16.
        let expected = [1u64, 2, 4, 6, 10, 16];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(s_count(6, 3, n as u64).unwrap(), c, "at {n}");
        }
    }
}
