//! Integer partitions, the `mex_{A,a}` statistic and the brute-force
//! counting oracle for `p_{A,a}(n)`.
//!
//! Everything here works directly from the definitions and is meant for
//! small `n` (the practical ceiling is [`ORACLE_CEILING`]). The faster
//! routes in [`crate::mex`] are checked against it.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest `n` the enumeration oracle is intended for. `p(80)` is about
/// 1.5e7, which is roughly where a full walk stops being interactive.
pub const ORACLE_CEILING: u64 = 80;

/// A partition of `n`: parts in non-increasing order, each at least 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition, the only partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// `mex_{A,a}` of this partition, see [`mex`].
    pub fn mex(&self, modulus: u64, residue: u64) -> u64 {
        mex(self, modulus, residue)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

/// The pair `(m, t)` selecting `p_{mt,t}`, i.e. modulus `A = m t` and
/// residue `a = t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MexParams {
    m: u64,
    t: u64,
}

impl MexParams {
    pub fn new(m: u64, t: u64) -> Result<Self> {
        if m == 0 || t == 0 {
            return Err(Error::InvalidParams { m, t });
        }
        m.checked_mul(t).ok_or(Error::Overflow("m * t"))?;
        Ok(MexParams { m, t })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `A = m t`.
    pub fn modulus(&self) -> u64 {
        self.m * self.t
    }

    /// `a = t`.
    pub fn residue(&self) -> u64 {
        self.t
    }

    /// Exponent `e(k) = (m k^2 - (m - 2) k) t / 2` of the k-th term of the
    /// alternating theta sum, or `None` on overflow.
    ///
    /// `k (m k - m + 2)` is always even: for even `k` trivially, for odd
    /// `k` because `m (k - 1)` is even. The division is checked anyway.
    pub fn theta_exponent(&self, k: u64) -> Option<u64> {
        let inner = self
            .m
            .checked_mul(k.saturating_sub(1))?
            .checked_add(if k == 0 { 0 } else { 2 })?;
        let twice = k.checked_mul(inner)?;
        assert!(twice % 2 == 0, "theta exponent numerator must be even");
        (twice / 2).checked_mul(self.t)
    }
}

impl fmt::Display for MexParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, t={})", self.m, self.t)
    }
}

/// Iterator over all partitions of `n` in lexicographically decreasing
/// order: `n`, `(n-1)+1`, ..., `1+1+...+1`.
#[derive(Clone, Debug)]
pub struct Partitions {
    parts: Vec<u64>,
    started: bool,
    done: bool,
}

/// All partitions of `n`, each exactly once, in lexicographically
/// decreasing order. `n = 0` yields the empty partition once.
pub fn enumerate_partitions(n: u64) -> Partitions {
    Partitions {
        parts: if n == 0 { Vec::new() } else { vec![n] },
        started: false,
        done: false,
    }
}

impl Partitions {
    /// Moves to the next partition and returns its parts without cloning.
    pub fn advance(&mut self) -> Option<&[u64]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        // Strip trailing ones, then lower the last part above 1 and refill
        // greedily with parts no larger than it.
        let mut ones = 0u64;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            ones += 1;
        }
        let Some(last) = self.parts.last_mut() else {
            self.done = true;
            return None;
        };
        *last -= 1;
        let cap = *last;
        let mut rest = ones + 1;
        while rest > 0 {
            let chunk = rest.min(cap);
            self.parts.push(chunk);
            rest -= chunk;
        }
        Some(&self.parts)
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.advance().map(|parts| Partition {
            parts: parts.to_vec(),
        })
    }
}

/// Smallest `x >= 1` with `x = a (mod A)` that is not a part of `partition`.
///
/// # Panics
///
/// If `modulus == 0` or `residue` is outside `1..=modulus`.
pub fn mex(partition: &Partition, modulus: u64, residue: u64) -> u64 {
    let mut scratch = Vec::new();
    mex_of_parts(partition.parts(), modulus, residue, &mut scratch)
}

/// `mex` over a raw non-increasing part slice, reusing `seen` as the
/// membership bitmap. `seen` is left all-false on return.
fn mex_of_parts(parts: &[u64], modulus: u64, residue: u64, seen: &mut Vec<bool>) -> u64 {
    assert!(modulus >= 1, "mex modulus must be positive");
    assert!(
        (1..=modulus).contains(&residue),
        "mex residue must lie in 1..=modulus"
    );
    let largest = parts.first().copied().unwrap_or(0) as usize;
    if seen.len() <= largest {
        seen.resize(largest + 1, false);
    }
    for &p in parts {
        seen[p as usize] = true;
    }
    let mut x = residue;
    while (x as usize) <= largest && seen[x as usize] {
        x += modulus;
    }
    for &p in parts {
        seen[p as usize] = false;
    }
    x
}

/// `p_{A,a}(n)`: the number of partitions of `n` whose `mex_{A,a}` is
/// congruent to `a` mod `2A`, counted by walking every partition.
pub fn p_aa_oracle(n: u64, modulus: u64, residue: u64) -> Result<u64> {
    if modulus == 0 || residue == 0 || residue > modulus {
        return Err(Error::Precondition("oracle needs A >= 1 and 1 <= a <= A"));
    }
    let double = modulus.checked_mul(2).ok_or(Error::Overflow("2A"))?;
    let mut seen = Vec::new();
    let mut walk = enumerate_partitions(n);
    let mut count = 0;
    while let Some(parts) = walk.advance() {
        if mex_of_parts(parts, modulus, residue, &mut seen) % double == residue % double {
            count += 1;
        }
    }
    Ok(count)
}

/// `p(n)` by counting the enumeration.
pub fn partition_count_oracle(n: u64) -> u64 {
    let mut walk = enumerate_partitions(n);
    let mut count = 0;
    while walk.advance().is_some() {
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Euler's recurrence over generalized pentagonals, written out
    // independently of the series module.
    fn p_by_recurrence(limit: usize) -> Vec<u64> {
        let mut p = vec![0u64; limit + 1];
        p[0] = 1;
        for n in 1..=limit {
            let mut acc: i64 = 0;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[n - g1] as i64;
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    acc += sign * p[n - g2] as i64;
                }
            }
            p[n] = acc as u64;
        }
        p
    }

    // Compositions collapsed to sorted multisets: a second, very different
    // way to list partitions.
    fn partitions_by_compositions(n: u64) -> BTreeSet<Vec<u64>> {
        fn go(n: u64, max: u64, cur: &mut Vec<u64>, out: &mut BTreeSet<Vec<u64>>) {
            if n == 0 {
                out.insert(cur.clone());
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = BTreeSet::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn zero_has_only_the_empty_partition() {
        let all: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(all, vec![Partition::empty()]);
        assert_eq!(partition_count_oracle(0), 1);
    }

    #[test]
    fn five_in_canonical_order() {
        let all: Vec<_> = enumerate_partitions(5).map(|p| p.to_string()).collect();
        assert_eq!(
            all,
            ["5", "4+1", "3+2", "3+1+1", "2+2+1", "2+1+1+1", "1+1+1+1+1"]
        );
        assert_eq!(partition_count_oracle(5), 7);
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let p = p_by_recurrence(40);
        assert_eq!(partition_count_oracle(10), 42);
        for n in 0..=40 {
            assert_eq!(partition_count_oracle(n), p[n as usize], "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_complete_and_duplicate_free() {
        for n in 0..=25 {
            let listed: Vec<Vec<u64>> = enumerate_partitions(n).map(|p| p.parts).collect();
            let set: BTreeSet<_> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len(), "duplicates at n = {n}");
            assert_eq!(set, partitions_by_compositions(n), "n = {n}");
            assert!(listed.windows(2).all(|w| w[0] > w[1]), "order at n = {n}");
        }
    }

    #[test]
    fn table_one_mex_values() {
        let rows: [(&[u64], u64); 7] = [
            (&[5], 1),
            (&[4, 1], 7),
            (&[3, 2], 1),
            (&[3, 1, 1], 4),
            (&[2, 2, 1], 4),
            (&[2, 1, 1, 1], 4),
            (&[1, 1, 1, 1, 1], 4),
        ];
        for (parts, expected) in rows {
            assert_eq!(part(parts).mex(3, 1), expected, "{parts:?}");
        }
    }

    #[test]
    fn mex_of_empty_is_residue() {
        for modulus in 1..6 {
            for residue in 1..=modulus {
                assert_eq!(Partition::empty().mex(modulus, residue), residue);
            }
        }
    }

    #[test]
    fn oracle_small_values() {
        assert_eq!(p_aa_oracle(5, 3, 1).unwrap(), 3);
        assert_eq!(p_aa_oracle(1, 1, 1).unwrap(), 0);
        for modulus in 1..5 {
            for residue in 1..=modulus {
                assert_eq!(p_aa_oracle(0, modulus, residue).unwrap(), 1);
            }
        }
    }

    #[test]
    fn oracle_rejects_bad_class() {
        assert!(p_aa_oracle(3, 0, 1).is_err());
        assert!(p_aa_oracle(3, 2, 0).is_err());
        assert!(p_aa_oracle(3, 2, 3).is_err());
    }

    #[test]
    fn oracle_bounded_by_partition_count() {
        for n in 0..=40 {
            let total = partition_count_oracle(n);
            for modulus in 1..=8 {
                for residue in 1..=modulus {
                    assert!(p_aa_oracle(n, modulus, residue).unwrap() <= total);
                }
            }
        }
    }

    #[test]
    fn params_reject_zero() {
        assert!(MexParams::new(0, 1).is_err());
        assert!(MexParams::new(1, 0).is_err());
        let p = MexParams::new(3, 2).unwrap();
        assert_eq!((p.modulus(), p.residue()), (6, 2));
    }

    #[test]
    fn partition_new_sorts_and_rejects_zero() {
        assert_eq!(part(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    proptest! {
        #[test]
        fn mex_lands_in_class_and_is_bounded(
            parts in proptest::collection::vec(1u64..30, 0..12),
            modulus in 1u64..9,
            residue_seed in 0u64..100,
        ) {
            let residue = residue_seed % modulus + 1;
            let lambda = Partition::new(parts).unwrap();
            let x = lambda.mex(modulus, residue);
            prop_assert_eq!(x % modulus, residue % modulus);
            prop_assert!(x >= 1);
            prop_assert!(x <= residue + modulus * lambda.len() as u64);
            prop_assert!(!lambda.parts().contains(&x));
            let mut y = residue;
            while y < x {
                prop_assert!(lambda.parts().contains(&y));
                y += modulus;
            }
        }
    }
}
