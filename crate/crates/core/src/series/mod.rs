//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `q^0..=q^N`. Binary operations between series of different order
//! truncate to the smaller one.

mod parity;

pub use parity::ParitySeries;

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::MexParams;
use crate::pentagonal::pentagonals;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Series whose coefficients are `coeffs`; the order is `len - 1`.
    ///
    /// # Panics
    ///
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least q^0");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Sparse constructor: `terms` are `(exponent, coefficient)`; exponents
    /// beyond `order` are dropped and repeated exponents add up.
    pub fn from_terms<I>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            if e <= order {
                s.coeffs[e] += c;
            }
        }
        s
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &BigInt {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Exponents with nonzero coefficient, increasing.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, _)| j)
    }

    /// Exact Cauchy product truncated at `min(N_f, N_g)`.
    ///
    /// Zero coefficients of the sparser operand are skipped, so products
    /// with theta series or `(q;q)_inf` cost `O(N sqrt N)`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let (sparse, dense) = if self.support().count() <= other.support().count() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero(order);
        for i in sparse.support().take_while(|&i| i <= order) {
            let a = &sparse.coeffs[i];
            let unit = if a.is_one() {
                Some(true)
            } else if (-a).is_one() {
                Some(false)
            } else {
                None
            };
            for (j, b) in dense.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                match unit {
                    Some(true) => out.coeffs[i + j] += b,
                    Some(false) => out.coeffs[i + j] -= b,
                    None => out.coeffs[i + j] += a * b,
                }
            }
        }
        out
    }

    /// Multiplicative inverse up to degree `N`, for a constant term `+-1`.
    ///
    /// Solves `g_n = f_0^{-1} (delta_{n,0} - sum_{k=1..n} f_k g_{n-k})`.
    pub fn invert_unit(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        let f0_is_one = f0.is_one();
        if !f0_is_one && !(-f0).is_one() {
            return Err(Error::NotInvertible(f0.clone()));
        }
        let order = self.order();
        let nonzero: Vec<usize> = self.support().filter(|&k| k > 0).collect();
        let mut g = Self::zero(order);
        g.coeffs[0] = f0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for &k in nonzero.iter().take_while(|&&k| k <= n) {
                acc -= &self.coeffs[k] * &g.coeffs[n - k];
            }
            g.coeffs[n] = if f0_is_one { acc } else { -acc };
        }
        Ok(g)
    }

    /// Coefficientwise reduction mod 2.
    pub fn parity_reduce(&self) -> ParitySeries {
        ParitySeries::from_fn(self.order(), |j| self.coeffs[j].is_odd())
    }

    /// Coefficientwise reduction to the least non-negative residue mod
    /// `modulus` (which must be nonzero).
    pub fn reduce_mod(&self, modulus: u64) -> Vec<u64> {
        let m = BigInt::from(modulus);
        self.coeffs
            .iter()
            .map(|c| {
                let r = c % &m;
                let r = if r.is_negative() { r + &m } else { r };
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect()
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|j| &self.coeffs[j] + &rhs.coeffs[j])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|j| &self.coeffs[j] - &rhs.coeffs[j])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `(q;q)_inf` to order `N`: `(-1)^k` at every `u_k <= N`, zero elsewhere.
pub fn euler_product(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_terms(
        order,
        pentagonals()
            .take_while(|p| p.u <= order as u64)
            .map(|p| (p.u as usize, BigInt::from(p.sign()))),
    )
}

/// `1/(q;q)_inf = sum p(n) q^n` to order `N`, by Euler's recurrence
/// `p(n) = sum_{k != 0} (-1)^{k+1} p(n - u_k)`.
pub fn partition_series(order: usize) -> TruncatedSeries {
    let mut p: Vec<BigInt> = Vec::with_capacity(order + 1);
    p.push(BigInt::one());
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for pent in pentagonals().skip(1) {
            let Some(rest) = n.checked_sub(pent.u as usize) else {
                break;
            };
            if pent.sign() < 0 {
                acc += &p[rest];
            } else {
                acc -= &p[rest];
            }
        }
        p.push(acc);
    }
    TruncatedSeries::from_coeffs(p)
}

/// The alternating sum `sum_{n>=0} (-1)^n q^{e(n)}`, with
/// `e(n) = (m n^2 - (m-2) n) t / 2`, to order `N`.
pub fn mex_theta(params: MexParams, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for (k, e) in theta_exponents(params, order as u64).enumerate() {
        s.coeffs[e as usize] = if k % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
    }
    s
}

/// The exponents `e(0) < e(1) < ...` that do not exceed `limit`.
pub fn theta_exponents(params: MexParams, limit: u64) -> impl Iterator<Item = u64> {
    (0u64..)
        .map(move |k| params.theta_exponent(k))
        .take_while(move |e| matches!(e, Some(e) if *e <= limit))
        .map(|e| e.unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn params(m: u64, t: u64) -> MexParams {
        MexParams::new(m, t).unwrap()
    }

    #[test]
    fn one_is_neutral() {
        let f = TruncatedSeries::from_i64s(&[3, -1, 4, 1, -5]);
        assert_eq!(f.mul(&TruncatedSeries::one(4)), f);
        assert_eq!(TruncatedSeries::one(9).mul(&f), f);
    }

    #[test]
    fn telescoping_geometric_sum() {
        let n = 12;
        let one_minus_q = TruncatedSeries::from_terms(n, [(0, 1.into()), (1, (-1).into())]);
        let geometric = TruncatedSeries::from_i64s(&[1; 13]);
        assert_eq!(one_minus_q.mul(&geometric), TruncatedSeries::one(n));
    }

    #[test]
    fn mixed_order_truncates_to_min() {
        let f = TruncatedSeries::from_i64s(&[1, 1, 1, 1, 1]);
        let g = TruncatedSeries::from_i64s(&[1, 1]);
        assert_eq!(ints(&f.mul(&g)), [1, 2]);
        assert_eq!(ints(&(&f + &g)), [2, 2]);
        assert_eq!(ints(&(&f - &g)), [0, 0]);
    }

    #[test]
    fn euler_product_small_orders() {
        assert_eq!(ints(&euler_product(8)), [1, -1, -1, 0, 0, 1, 0, 1, 0]);
        assert_eq!(ints(&euler_product(0)), [1]);
        let e15 = euler_product(15);
        assert_eq!(e15.support().collect::<Vec<_>>(), [0, 1, 2, 5, 7, 12, 15]);
        assert_eq!(ints(&e15)[12], -1);
        assert_eq!(ints(&e15)[15], -1);
    }

    #[test]
    fn euler_product_matches_finite_product() {
        // prod_{j=1..N} (1 - q^j) agrees with (q;q)_inf up to q^N.
        let n = 60;
        let mut prod = TruncatedSeries::one(n);
        for j in 1..=n {
            let factor = TruncatedSeries::from_terms(n, [(0, 1.into()), (j, (-1).into())]);
            prod = prod.mul(&factor);
        }
        assert_eq!(prod, euler_product(n));
    }

    #[test]
    fn partition_series_first_values() {
        let p = partition_series(10);
        assert_eq!(ints(&p), [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(euler_product(10).invert_unit().unwrap(), p);
    }

    #[test]
    fn partition_series_times_euler_is_one() {
        assert_eq!(
            euler_product(20).mul(&partition_series(20)),
            TruncatedSeries::one(20)
        );
    }

    #[test]
    fn recurrence_and_inversion_agree() {
        let n = 2000;
        assert_eq!(partition_series(n), euler_product(n).invert_unit().unwrap());
    }

    #[test]
    fn p_2000_exact() {
        use alloc::string::ToString;
        // Hardy-Ramanujan-Rademacher value, computed independently
        assert_eq!(
            partition_series(2000).coeff(2000).to_string(),
            "4720819175619413888601432406799959512200344166"
        );
    }

    #[test]
    fn invert_rejects_non_units() {
        assert!(matches!(
            TruncatedSeries::from_i64s(&[0, 1]).invert_unit(),
            Err(Error::NotInvertible(_))
        ));
        assert!(TruncatedSeries::from_i64s(&[2, 1]).invert_unit().is_err());
        assert_eq!(
            TruncatedSeries::one(5).invert_unit().unwrap(),
            TruncatedSeries::one(5)
        );
    }

    #[test]
    fn invert_with_negative_constant() {
        let f = TruncatedSeries::from_i64s(&[-1, 2, 0, 3]);
        let g = f.invert_unit().unwrap();
        assert_eq!(f.mul(&g), TruncatedSeries::one(3));
    }

    #[test]
    fn theta_specializations() {
        let triangular = mex_theta(params(1, 1), 10);
        assert_eq!(triangular.support().collect::<Vec<_>>(), [0, 1, 3, 6, 10]);
        assert_eq!(ints(&triangular)[6], -1);
        assert_eq!(ints(&triangular)[10], 1);
        let squares = mex_theta(params(2, 1), 9);
        assert_eq!(squares.support().collect::<Vec<_>>(), [0, 1, 4, 9]);
        let m3 = mex_theta(params(3, 1), 12);
        assert_eq!(ints(&m3)[0], 1);
        assert_eq!(ints(&m3)[1], -1);
        assert_eq!(ints(&m3)[5], 1);
        assert_eq!(ints(&m3)[12], -1);
        assert_eq!(m3.support().count(), 4);
    }

    #[test]
    fn parity_reduce_examples() {
        let bits: Vec<bool> = partition_series(10).parity_reduce().iter().collect();
        let expected = [1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0].map(|b| b == 1);
        assert_eq!(bits, expected);
        assert_eq!(TruncatedSeries::zero(30).parity_reduce().count_ones(), 0);
        let e = euler_product(8).parity_reduce();
        assert_eq!(e.ones().collect::<Vec<_>>(), [0, 1, 2, 5, 7]);
    }

    #[test]
    fn reduce_mod_handles_negatives() {
        let f = TruncatedSeries::from_i64s(&[-1, 7, -12, 0]);
        assert_eq!(f.reduce_mod(5), [4, 2, 3, 0]);
    }

    fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        (
            prop::bool::ANY,
            proptest::collection::vec(-50i64..50, order),
        )
            .prop_map(|(neg, rest)| {
                let mut c = alloc::vec![if neg { -1 } else { 1 }];
                c.extend(rest);
                TruncatedSeries::from_i64s(&c)
            })
    }

    proptest! {
        #[test]
        fn inverse_times_self_is_one(f in unit_series(40)) {
            let g = f.invert_unit().unwrap();
            prop_assert_eq!(f.mul(&g), TruncatedSeries::one(40));
            prop_assert_eq!(g.mul(&f), TruncatedSeries::one(40));
        }

        #[test]
        fn mul_commutes(
            a in proptest::collection::vec(-9i64..9, 1..30),
            b in proptest::collection::vec(-9i64..9, 1..30),
        ) {
            let f = TruncatedSeries::from_i64s(&a);
            let g = TruncatedSeries::from_i64s(&b);
            prop_assert_eq!(f.mul(&g), g.mul(&f));
        }

        #[test]
        fn reduction_is_a_ring_homomorphism(
            a in proptest::collection::vec(-1000i64..1000, 1..90),
            b in proptest::collection::vec(-1000i64..1000, 1..90),
        ) {
            let f = TruncatedSeries::from_i64s(&a);
            let g = TruncatedSeries::from_i64s(&b);
            prop_assert_eq!(
                f.mul(&g).parity_reduce(),
                f.parity_reduce().xor_mul(&g.parity_reduce())
            );
        }

        #[test]
        fn theta_signs_alternate(m in 1u64..7, t in 1u64..5, order in 0usize..400) {
            let theta = mex_theta(params(m, t), order);
            let signs: Vec<i64> = theta.support().map(|j| ints(&theta)[j]).collect();
            for (k, s) in signs.iter().enumerate() {
                prop_assert_eq!(*s, if k % 2 == 0 { 1 } else { -1 });
            }
        }
    }
}
