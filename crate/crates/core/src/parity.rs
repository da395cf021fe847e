//! Parity of `p_{mt,t}(n)`.
//!
//! Mod 2 the alternating theta sum loses its signs, and `(q;q)_inf` becomes
//! the sum of `q^{u_k}` over all generalized pentagonals. So
//!
//! ```text
//! sum_n b(n) q^n  =  (sum_k q^{u_k}) * (sum_n p_{mt,t}(n) q^n)   (mod 2)
//! ```
//!
//! where `b` is the indicator of the theta exponents. Everything in this
//! module is built on that congruence: the even-value counts, the
//! neighbor sets `N_n = {n - u_k}`, the parity recurrence, and the
//! odd-witness construction along the tower `a_k = a_{k-1}(3a_{k-1}-1)/2`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::MexParams;
use crate::pentagonal::{pentagonal, pentagonals};
use crate::series::{theta_exponents, ParitySeries};

/// `sum_n b(n) q^n` mod 2: ones exactly at the theta exponents `e(k) <= order`.
pub fn b_series(params: MexParams, order: usize) -> ParitySeries {
    ParitySeries::from_ones(
        order,
        theta_exponents(params, order as u64).map(|e| e as usize),
    )
}

/// `(q;q)_inf` mod 2.
pub fn euler_parity(order: usize) -> ParitySeries {
    ParitySeries::from_ones(
        order,
        pentagonals()
            .take_while(|p| p.u <= order as u64)
            .map(|p| p.u as usize),
    )
}

/// `p(n)` mod 2 for `n <= order`.
pub fn partition_parity(order: usize) -> ParitySeries {
    euler_parity(order)
        .invert()
        .expect("(q;q)_inf has constant term 1")
}

/// `p_{mt,t}(n)` mod 2 for `n <= order`, computed entirely over GF(2).
pub fn p_mtt_parity(params: MexParams, order: usize) -> ParitySeries {
    b_series(params, order).xor_mul(&partition_parity(order))
}

/// `N_n = { n - u_k : 0 <= u_k <= n }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborSet {
    pub n: u64,
    /// Decreasing, since the `u_k` are visited in increasing order.
    pub members: Vec<u64>,
}

impl NeighborSet {
    pub fn new(n: u64) -> Self {
        NeighborSet {
            n,
            members: pentagonals()
                .take_while(|p| p.u <= n)
                .map(|p| n - p.u)
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The `k >= 1` with `n` in `B_k = [u_{-(k-1)}, u_k)`, if any.
///
/// The half-open intervals `[u_{-(k-1)}, u_k)` and `[u_k, u_{-k})` tile
/// `[0, inf)`; `|N_n|` is `2k - 1` on the first kind and `2k` on the second.
pub fn odd_interval_index(n: u64) -> Option<u64> {
    for k in 1i64.. {
        let lo = pentagonal(-(k - 1));
        let mid = pentagonal(k);
        let hi = pentagonal(-k);
        if n < lo {
            return None;
        }
        if n < mid {
            return Some(k as u64);
        }
        if n < hi {
            return None;
        }
    }
    unreachable!()
}

/// The unique `k >= 1` with `e(k) = value`, found by walking the strictly
/// increasing exponents.
pub fn theta_exponent_test(params: MexParams, value: u64) -> Option<u64> {
    for k in 1u64.. {
        let e = params.theta_exponent(k)?;
        if e >= value {
            return (e == value).then_some(k);
        }
    }
    None
}

/// Outcome of the parity recurrence at one `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Lemma3Outcome {
    pub n: u64,
    /// `sum_{s>=0} p(n - s(3s-1)/2) + sum_{s>=1} p(n - s(3s+1)/2)` mod 2.
    pub computed: u8,
    /// 1 iff `n = e(k)` for some `k >= 1`.
    pub expected: u8,
}

impl Lemma3Outcome {
    pub fn holds(&self) -> bool {
        self.computed == self.expected
    }
}

/// The parity recurrence at `n`, with `p_{mt,t}` parities read from
/// `parities` (which must reach `n`).
pub fn lemma3_check_with(params: MexParams, n: u64, parities: &ParitySeries) -> Lemma3Outcome {
    assert!(n as usize <= parities.order(), "parity table too short");
    let computed = pentagonals()
        .take_while(|p| p.u <= n)
        .fold(false, |acc, p| acc ^ parities.get((n - p.u) as usize));
    Lemma3Outcome {
        n,
        computed: computed as u8,
        expected: theta_exponent_test(params, n).is_some() as u8,
    }
}

/// The parity recurrence at `n >= 1`, computing what it needs.
pub fn lemma3_check(params: MexParams, n: u64) -> Result<Lemma3Outcome> {
    if n == 0 {
        return Err(Error::Precondition(
            "the parity recurrence is stated for n >= 1",
        ));
    }
    let order = usize::try_from(n).map_err(|_| Error::Overflow("n"))?;
    let parities = crate::mex::p_mtt_series(params, order).parity_reduce();
    Ok(lemma3_check_with(params, n, &parities))
}

/// `(lo, hi) = (2r - 1, r(3r - 1)/2)`.
pub fn witness_interval(r: u64) -> (u64, u64) {
    (2 * r - 1, pentagonal(r as i64))
}

/// Whether the hypothesis for an odd value in `[2r-1, u_r]` holds:
/// `r(3r-1)` is not of the form `(m k^2 - (m-2) k) t`, i.e. `u_r` is not a
/// theta exponent `e(k)` with `k >= 1`.
pub fn witness_hypothesis(params: MexParams, r: u64) -> bool {
    theta_exponent_test(params, pentagonal(r as i64)).is_none()
}

/// Least `n` in `[2r - 1, r(3r-1)/2]` with `p_{mt,t}(n)` odd, reading
/// parities from `parities`.
///
/// Returns `Ok(None)` only when the hypothesis fails; if it holds and no
/// odd value turns up, that contradicts the parity recurrence and is a
/// verification failure.
pub fn odd_interval_witness_in(
    params: MexParams,
    r: u64,
    parities: &ParitySeries,
) -> Result<Option<u64>> {
    if r < 2 {
        return Err(Error::Precondition("odd interval witness needs r >= 2"));
    }
    let (lo, hi) = witness_interval(r);
    if hi as usize > parities.order() {
        return Err(Error::Precondition("parity table does not reach r(3r-1)/2"));
    }
    let found = (lo..=hi).find(|&n| parities.get(n as usize));
    match found {
        Some(n) => Ok(Some(n)),
        None if witness_hypothesis(params, r) => Err(Error::Verification(format!(
            "no odd p_{{mt,t}}(n) for {params} in [{lo}, {hi}]"
        ))),
        None => Ok(None),
    }
}

/// [`odd_interval_witness_in`] with the parity table built on the spot.
pub fn odd_interval_witness(params: MexParams, r: u64) -> Result<Option<u64>> {
    if r < 2 {
        return Err(Error::Precondition("odd interval witness needs r >= 2"));
    }
    let (_, hi) = witness_interval(r);
    let order = usize::try_from(hi).map_err(|_| Error::Overflow("r(3r-1)/2"))?;
    odd_interval_witness_in(params, r, &p_mtt_parity(params, order))
}

/// Trial division; fine for the small primes used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn require_residue(name: &'static str, value: u64, expected: u64) -> Result<()> {
    if value % 3 != expected {
        return Err(Error::ResidueClass {
            name,
            value,
            expected,
            modulus: 3,
        });
    }
    Ok(())
}

fn check_theorem5_inputs(m: u64, p: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParams { m, t: p });
    }
    if m.is_multiple_of(3) {
        return Err(Error::Precondition("m must not be divisible by 3"));
    }
    require_residue("p", p, 1)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Exhaustively confirms that `s(3s-1) != (m k^2 - (m-2) k) p` for every
/// `k >= 1`, given `s = 2 (mod 3)`, prime `p = 1 (mod 3)` and `3 !| m`.
/// A `false` would be a counterexample.
pub fn lemma_new_check(s: u64, p: u64, m: u64) -> Result<bool> {
    require_residue("s", s, 2)?;
    check_theorem5_inputs(m, p)?;
    Ok(theta_multiple_of(s, p, m).is_none())
}

/// The `k >= 1` with `s(3s-1) = (m k^2 - (m-2) k) p`, if any. No
/// preconditions.
fn theta_multiple_of(s: u64, p: u64, m: u64) -> Option<u64> {
    let target = (s as u128) * (3 * s as u128 - 1);
    let (m, p) = (m as u128, p as u128);
    for k in 1u128.. {
        // m k^2 - (m - 2) k = k (m (k - 1) + 2)
        let value = k * (m * (k - 1) + 2) * p;
        if value >= target {
            return (value == target).then_some(k as u64);
        }
    }
    None
}

/// `a_0 = s`, `a_k = a_{k-1} (3 a_{k-1} - 1) / 2`, up to the last `a_k <= limit`.
pub fn a_sequence(s: u64, limit: u64) -> Result<Vec<u64>> {
    require_residue("s", s, 2)?;
    let mut seq = Vec::new();
    let mut a = s as u128;
    while a <= limit as u128 {
        if a % 3 != 2 {
            return Err(Error::Verification(format!("a_k = {a} is not 2 mod 3")));
        }
        seq.push(a as u64);
        let next = a * (3 * a - 1) / 2;
        if next < 2 * a - 1 + 2 {
            return Err(Error::Verification(format!(
                "a_(k+1) = {next} too close to 2 a_k - 1 for a_k = {a}"
            )));
        }
        a = next;
    }
    Ok(seq)
}

/// Tally of `p_{mt,t}(n)` mod 2 over `n = 1..=x`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScanReport {
    pub params: MexParams,
    pub x: u64,
    pub even_count: u64,
    pub odd_count: u64,
    /// `sqrt(x / 3)`.
    pub threshold: f64,
    /// `even_count >= sqrt(x / 3)`, decided exactly as `3 even^2 >= x`.
    pub meets_threshold: bool,
    /// `even_count - threshold`.
    pub margin: f64,
    /// Number of `n` in `1..=x` with `b(n)` odd.
    pub theta_odd_count: u64,
    /// Positions `n` in `1..=x` with `p_{mt,t}(n)` odd, when requested.
    pub odd_positions: Option<Vec<u64>>,
}

impl ScanReport {
    pub fn is_consistent(&self) -> bool {
        self.even_count + self.odd_count == self.x
            && self
                .odd_positions
                .as_ref()
                .is_none_or(|v| v.len() as u64 == self.odd_count)
    }
}

fn scan(params: MexParams, x: u64, detailed: bool) -> Result<ScanReport> {
    if x == 0 {
        return Err(Error::Precondition("parity scan needs x >= 1"));
    }
    let order = usize::try_from(x).map_err(|_| Error::Overflow("x"))?;
    let parities = p_mtt_parity(params, order);
    // bit 0 is p(0) = 1, outside the scanned range
    let odd_count = parities.count_ones() as u64 - parities.get(0) as u64;
    let even_count = x - odd_count;
    let b = b_series(params, order);
    let theta_odd_count = b.count_ones() as u64 - b.get(0) as u64;
    let threshold = num_traits::Float::sqrt(x as f64 / 3.0);
    let meets_threshold = 3 * (even_count as u128) * (even_count as u128) >= x as u128;
    let odd_positions = detailed.then(|| {
        parities
            .ones()
            .filter(|&n| n > 0)
            .map(|n| n as u64)
            .collect()
    });
    Ok(ScanReport {
        params,
        x,
        even_count,
        odd_count,
        threshold,
        meets_threshold,
        margin: even_count as f64 - threshold,
        theta_odd_count,
        odd_positions,
    })
}

/// Counts even and odd values of `p_{mt,t}(n)` for `1 <= n <= x`.
pub fn parity_scan(params: MexParams, x: u64) -> Result<ScanReport> {
    scan(params, x, false)
}

/// [`parity_scan`] that also lists every odd position.
pub fn parity_scan_detailed(params: MexParams, x: u64) -> Result<ScanReport> {
    scan(params, x, true)
}

/// An odd value of `p_{mp,p}` inside `[2 a_k - 1, a_{k+1}]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IntervalWitness {
    pub a_k: u64,
    pub lo: u64,
    pub hi: u64,
    pub witness: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Theorem5Report {
    pub m: u64,
    pub p: u64,
    pub x: u64,
    pub s: u64,
    /// `a_0, ..., a_nu`.
    pub sequence: Vec<u64>,
    pub witnesses: Vec<IntervalWitness>,
}

impl Theorem5Report {
    /// `nu`, the index of the last `a_k <= x`.
    pub fn nu(&self) -> u64 {
        self.sequence.len().saturating_sub(1) as u64
    }

    /// The guaranteed lower bound `floor(nu / 2)` on the odd count.
    pub fn guaranteed(&self) -> u64 {
        self.nu() / 2
    }
}

/// For each `[a_k, a_{k+1}]` with `a_{k+1} <= x`, finds an odd value of
/// `p_{mp,p}` in `[2 a_k - 1, a_{k+1}]`. Fails with a verification error if
/// some interval has none.
pub fn theorem5_witnesses(m: u64, p: u64, x: u64, s: u64) -> Result<Theorem5Report> {
    check_theorem5_inputs(m, p)?;
    require_residue("s", s, 2)?;
    if x < s {
        return Err(Error::Precondition("x must be at least s"));
    }
    let params = MexParams::new(m, p)?;
    let sequence = a_sequence(s, x)?;
    let mut witnesses = Vec::new();
    if sequence.len() >= 2 {
        let top = *sequence.last().unwrap_or(&0);
        let order = usize::try_from(top).map_err(|_| Error::Overflow("x"))?;
        let parities = p_mtt_parity(params, order);
        for pair in sequence.windows(2) {
            let r = pair[0];
            if !lemma_new_check(r, p, m)? {
                return Err(Error::Verification(format!(
                    "{r}(3*{r}-1) is a theta exponent for m = {m}, p = {p}"
                )));
            }
            let (lo, hi) = witness_interval(r);
            debug_assert_eq!(hi, pair[1]);
            let witness = odd_interval_witness_in(params, r, &parities)?
                .ok_or_else(|| Error::Verification(format!("hypothesis failed for a_k = {r}")))?;
            witnesses.push(IntervalWitness {
                a_k: r,
                lo,
                hi,
                witness,
            });
        }
    }
    Ok(Theorem5Report {
        m,
        p,
        x,
        s,
        sequence,
        witnesses,
    })
}
