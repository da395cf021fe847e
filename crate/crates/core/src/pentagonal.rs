//! Generalized pentagonal numbers `u_k = k (3k - 1) / 2`, `k` in Z.

use alloc::vec::Vec;

/// A generalized pentagonal number together with its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PentagonalIndex {
    pub k: i64,
    pub u: u64,
}

impl PentagonalIndex {
    pub fn new(k: i64) -> Self {
        PentagonalIndex {
            k,
            u: pentagonal(k),
        }
    }

    /// `(-1)^k`, the coefficient of `q^{u_k}` in `(q;q)_inf`.
    pub fn sign(&self) -> i8 {
        if self.k % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// `u_k = k (3k - 1) / 2`.
pub fn pentagonal(k: i64) -> u64 {
    let k = k as i128;
    (k * (3 * k - 1) / 2) as u64
}

/// Iterator over generalized pentagonals in increasing order of `u`:
/// `k = 0, 1, -1, 2, -2, ...`, giving `u = 0, 1, 2, 5, 7, 12, 15, ...`.
#[derive(Clone, Debug, Default)]
pub struct Pentagonals {
    next: i64,
}

impl Iterator for Pentagonals {
    type Item = PentagonalIndex;

    fn next(&mut self) -> Option<PentagonalIndex> {
        let k = self.next;
        self.next = if k > 0 { -k } else { -k + 1 };
        Some(PentagonalIndex::new(k))
    }
}

pub fn pentagonals() -> Pentagonals {
    Pentagonals::default()
}

/// All `(k, u_k)` with `0 <= u_k <= limit`, sorted by `u`.
pub fn generalized_pentagonals_upto(limit: u64) -> Vec<PentagonalIndex> {
    pentagonals().take_while(|p| p.u <= limit).collect()
}
