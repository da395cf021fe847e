use alloc::vec;
use alloc::vec::Vec;

const WORD: usize = 64;

/// A truncated series over GF(2), bit-packed into `u64` words.
///
/// Bit `j` is the coefficient of `q^j`, for `j` in `0..=order`. Bits past
/// the order are kept zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParitySeries {
    words: Vec<u64>,
    len: usize,
}

impl ParitySeries {
    pub fn zero(order: usize) -> Self {
        let len = order + 1;
        ParitySeries {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.set(0, true);
        s
    }

    pub fn from_fn(order: usize, mut bit: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::zero(order);
        for j in 0..=order {
            if bit(j) {
                s.set(j, true);
            }
        }
        s
    }

    /// Series with ones exactly at `positions` (those past `order` dropped).
    pub fn from_ones(order: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::zero(order);
        for j in positions {
            if j <= order {
                s.set(j, true);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.len - 1
    }

    pub fn get(&self, j: usize) -> bool {
        assert!(j < self.len, "bit {j} past order {}", self.order());
        self.words[j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, j: usize, value: bool) {
        assert!(j < self.len, "bit {j} past order {}", self.order());
        let mask = 1u64 << (j % WORD);
        if value {
            self.words[j / WORD] |= mask;
        } else {
            self.words[j / WORD] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of ones among bits `0..=upto`.
    pub fn count_ones_upto(&self, upto: usize) -> usize {
        let upto = upto.min(self.order());
        let full = (upto + 1) / WORD;
        let mut c: usize = self.words[..full]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum();
        let rem = (upto + 1) % WORD;
        if rem > 0 {
            c += (self.words[full] & ((1u64 << rem) - 1)).count_ones() as usize;
        }
        c
    }

    /// Positions of set bits, increasing.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |j| self.get(j))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        let mut s = ParitySeries {
            words: self.words[..(order + 1).div_ceil(WORD)].to_vec(),
            len: order + 1,
        };
        s.clear_tail();
        s
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// `self ^= src * q^shift`, truncated to `self`'s order.
    fn xor_shifted(&mut self, src: &ParitySeries, shift: usize) {
        if shift >= self.len {
            return;
        }
        let word_shift = shift / WORD;
        let bit_shift = shift % WORD;
        for w in word_shift..self.words.len() {
            let j = w - word_shift;
            let lo = src.words.get(j).copied().unwrap_or(0) << bit_shift;
            let hi = if bit_shift > 0 && j > 0 {
                src.words.get(j - 1).copied().unwrap_or(0) >> (WORD - bit_shift)
            } else {
                0
            };
            self.words[w] ^= lo | hi;
        }
        self.clear_tail();
    }

    /// Product over GF(2), truncated at the smaller order. Shifts the
    /// denser operand by every set bit of the sparser one and xors at word
    /// granularity.
    pub fn xor_mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let (sparse, dense) = if self.count_ones() <= other.count_ones() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero(order);
        for shift in sparse.ones().take_while(|&s| s <= order) {
            out.xor_shifted(dense, shift);
        }
        out
    }

    /// Inverse over GF(2); `None` when the constant term is 0.
    pub fn invert(&self) -> Option<Self> {
        if !self.get(0) {
            return None;
        }
        let taps: Vec<usize> = self.ones().skip(1).collect();
        let mut g = Self::one(self.order());
        for n in 1..self.len {
            let mut bit = false;
            for &k in taps.iter().take_while(|&&k| k <= n) {
                bit ^= g.get(n - k);
            }
            if bit {
                g.set(n, true);
            }
        }
        Some(g)
    }
}

impl core::ops::BitXor for &ParitySeries {
    type Output = ParitySeries;

    fn bitxor(self, rhs: &ParitySeries) -> ParitySeries {
        let order = self.order().min(rhs.order());
        let mut out = ParitySeries::zero(order);
        for (i, w) in out.words.iter_mut().enumerate() {
            *w = self.words[i] ^ rhs.words[i];
        }
        out.clear_tail();
        out
    }
}
