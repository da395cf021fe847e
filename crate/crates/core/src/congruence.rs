//! Transfer of congruences `p(an + b) = 0 (mod k)` to `p_{mat,at}`, and
//! the Ramanujan families modulo powers of 5, 7 and 11.
//!
//! All arithmetic runs on residues of `p(n)` mod `k`; the full integers
//! are never formed.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::mex::{p_mtt_identity_mod, p_mtt_series};
use crate::partition::MexParams;
use crate::pentagonal::pentagonals;

/// `d` in `1..p^k` with `24 d = 1 (mod p^k)`.
pub fn delta(prime: u64, k: u32) -> Result<u64> {
    let modulus = prime.checked_pow(k).ok_or(Error::Overflow("p^k"))?;
    inverse_mod(24, modulus)
}

/// Least positive inverse of `value` mod `modulus`.
pub fn inverse_mod(value: u64, modulus: u64) -> Result<u64> {
    if modulus <= 1 {
        return Err(Error::NotCoprime { value, modulus });
    }
    let egcd = (value as i128).extended_gcd(&(modulus as i128));
    if egcd.gcd != 1 {
        return Err(Error::NotCoprime { value, modulus });
    }
    Ok(egcd.x.rem_euclid(modulus as i128) as u64)
}

/// `p(0..=limit) mod modulus` by Euler's recurrence.
pub fn partition_residues(limit: usize, modulus: u64) -> Vec<u64> {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as u128;
    let mut p = vec![0u64; limit + 1];
    p[0] = 1 % modulus;
    for n in 1..=limit {
        let mut acc: u128 = 0;
        for pent in pentagonals().skip(1) {
            let Some(rest) = n.checked_sub(pent.u as usize) else {
                break;
            };
            let v = p[rest] as u128;
            // (-1)^{k+1}: pentagonals with odd k enter with +
            acc = if pent.sign() < 0 {
                acc + v
            } else {
                acc + m - v
            } % m;
        }
        p[n] = acc as u64;
    }
    p
}

/// The modulus of the Ramanujan family for `prime^k`:
/// `5^k`, `7^{floor(k/2) + 1}` or `11^k`.
pub fn family_modulus(prime: u64, k: u32) -> Result<u64> {
    let exp = match prime {
        5 | 11 => k,
        7 => k / 2 + 1,
        _ => {
            return Err(Error::Precondition(
                "Ramanujan families exist for 5, 7 and 11",
            ))
        }
    };
    prime
        .checked_pow(exp)
        .ok_or(Error::Overflow("family modulus"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CongruenceReport {
    pub modulus: u64,
    /// Progression step `a`.
    pub a: u64,
    /// Progression offset `b`.
    pub b: u64,
    pub m: u64,
    pub t: u64,
    pub n_max: u64,
    /// `n` with `p_{mat,at}(an + b) != 0 (mod modulus)`.
    pub failures: Vec<u64>,
    pub residues_checked: u64,
    /// `p_{mat,at}(an + b) mod modulus` for `n = 0..=n_max`.
    pub residues: Vec<u64>,
}

impl CongruenceReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    /// The parameters `(m, a t)` of the function being tested.
    pub fn params(&self) -> Result<MexParams> {
        MexParams::new(
            self.m,
            self.a.checked_mul(self.t).ok_or(Error::Overflow("a t"))?,
        )
    }

    /// `a n + b`.
    pub fn argument(&self, n: u64) -> u64 {
        self.a * n + self.b
    }
}

/// Checks `p_{mat,at}(an + b) = 0 (mod k)` for `n = 0..=n_max`.
///
/// The hypothesis `p(a l + b) = 0 (mod k)` is verified first for every
/// `l <= n_max`; a violation is reported as [`Error::Hypothesis`], separate
/// from failures of the conclusion.
pub fn verify_transfer(
    a: u64,
    b: u64,
    k: u64,
    m: u64,
    t: u64,
    n_max: u64,
) -> Result<CongruenceReport> {
    if a == 0 || k == 0 {
        return Err(Error::Precondition("need a >= 1 and k >= 1"));
    }
    let inner = MexParams::new(m, t)?;
    let params = MexParams::new(inner.m(), a.checked_mul(t).ok_or(Error::Overflow("a t"))?)?;
    let top = a
        .checked_mul(n_max)
        .and_then(|v| v.checked_add(b))
        .ok_or(Error::Overflow("a n_max + b"))?;
    let limit = usize::try_from(top).map_err(|_| Error::Overflow("a n_max + b"))?;
    let p_mod = partition_residues(limit, k);

    for l in 0..=n_max {
        let argument = a * l + b;
        let residue = p_mod[argument as usize];
        if residue != 0 {
            return Err(Error::Hypothesis {
                n: l,
                argument,
                residue,
                modulus: k,
            });
        }
    }

    let mut failures = Vec::new();
    let mut residues = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let r = p_mtt_identity_mod(params, a * n + b, &p_mod, k)?;
        if r != 0 {
            failures.push(n);
        }
        residues.push(r);
    }
    Ok(CongruenceReport {
        modulus: k,
        a,
        b,
        m,
        t,
        n_max,
        failures,
        residues_checked: n_max + 1,
        residues,
    })
}

/// `p_{m p^k t, p^k t}(p^k n + delta_{p,k}) = 0` modulo the family modulus.
pub fn verify_ramanujan_family(
    prime: u64,
    k: u32,
    m: u64,
    t: u64,
    n_max: u64,
) -> Result<CongruenceReport> {
    if k == 0 {
        return Err(Error::Precondition("family exponent k must be >= 1"));
    }
    let modulus = family_modulus(prime, k)?;
    let a = prime.checked_pow(k).ok_or(Error::Overflow("p^k"))?;
    let b = delta(prime, k)?;
    verify_transfer(a, b, modulus, m, t, n_max)
}

/// Recomputes the report's residues at `points` through the generating
/// function instead of the identity, returning the first disagreement.
pub fn spot_check_series(report: &CongruenceReport, points: &[u64]) -> Result<()> {
    let Some(&last) = points.iter().max() else {
        return Ok(());
    };
    if last > report.n_max {
        return Err(Error::Precondition("spot check point beyond n_max"));
    }
    let params = report.params()?;
    let order = usize::try_from(report.argument(last)).map_err(|_| Error::Overflow("a n + b"))?;
    let series = p_mtt_series(params, order);
    let residues = series.reduce_mod(report.modulus);
    for &n in points {
        let via_series = residues[report.argument(n) as usize];
        if via_series != report.residues[n as usize] {
            return Err(Error::Verification(alloc::format!(
                "series gives {via_series}, identity gives {} at n = {n}",
                report.residues[n as usize]
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::partition_series;

    #[test]
    fn delta_small() {
        assert_eq!(delta(5, 1).unwrap(), 4);
        assert_eq!(delta(7, 1).unwrap(), 5);
        assert_eq!(delta(11, 1).unwrap(), 6);
        assert_eq!(delta(5, 2).unwrap(), 24);
        assert_eq!(delta(7, 2).unwrap(), 47);
        assert!(matches!(delta(2, 3), Err(Error::NotCoprime { .. })));
        assert!(matches!(delta(3, 1), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn delta_is_an_inverse() {
        for prime in [5u64, 7, 11, 13, 17] {
            for k in 1..=5 {
                let modulus = prime.pow(k);
                let d = delta(prime, k).unwrap();
                assert!((1..modulus).contains(&d));
                assert_eq!(24 * d % modulus, 1);
            }
        }
    }

    #[test]
    fn residues_match_exact_values() {
        let p = partition_series(500);
        for modulus in [2u64, 5, 49, 121, 1_000_003] {
            assert_eq!(partition_residues(500, modulus), p.reduce_mod(modulus));
        }
    }

    #[test]
    fn family_moduli() {
        assert_eq!(family_modulus(5, 3).unwrap(), 125);
        assert_eq!(family_modulus(7, 1).unwrap(), 7);
        assert_eq!(family_modulus(7, 2).unwrap(), 49);
        assert_eq!(family_modulus(7, 3).unwrap(), 49);
        assert_eq!(family_modulus(7, 4).unwrap(), 343);
        assert_eq!(family_modulus(11, 2).unwrap(), 121);
        assert!(family_modulus(13, 1).is_err());
    }

    #[test]
    fn classical_mod_5_transfer() {
        let r = verify_transfer(5, 4, 5, 1, 1, 200).unwrap();
        assert!(r.holds());
        assert_eq!(r.residues_checked, 201);
        spot_check_series(&r, &[0, 17, 50, 123, 200]).unwrap();
    }

    #[test]
    fn single_point() {
        let r = verify_transfer(5, 4, 5, 1, 1, 0).unwrap();
        assert_eq!(r.residues_checked, 1);
        assert!(r.holds());
    }

    #[test]
    fn bad_hypothesis_is_reported_as_such() {
        let err = verify_transfer(2, 0, 2, 1, 1, 10).unwrap_err();
        assert!(err.is_hypothesis_violation());
        // p(0) = 1 is already odd
        assert!(matches!(
            err,
            Error::Hypothesis {
                n: 0,
                argument: 0,
                residue: 1,
                ..
            }
        ));
        let err = verify_transfer(2, 2, 2, 1, 1, 10).unwrap_err();
        // p(2) = 2 is even, p(4) = 5 is not
        assert!(matches!(
            err,
            Error::Hypothesis {
                n: 1,
                argument: 4,
                residue: 1,
                ..
            }
        ));
    }

    #[test]
    fn families() {
        let r = verify_ramanujan_family(5, 1, 3, 2, 200).unwrap();
        assert!(r.holds());
        assert_eq!((r.a, r.b, r.modulus), (5, 4, 5));
        let r = verify_ramanujan_family(7, 2, 1, 1, 40).unwrap();
        assert!(r.holds());
        assert_eq!((r.a, r.b, r.modulus), (49, 47, 49));
        spot_check_series(&r, &[0, 1, 13, 39, 40]).unwrap();
        let r = verify_ramanujan_family(11, 1, 2, 1, 100).unwrap();
        assert!(r.holds());
        assert_eq!((r.a, r.b, r.modulus), (11, 6, 11));
        assert_eq!(r.params().unwrap(), MexParams::new(2, 11).unwrap());
    }

    #[test]
    fn spot_check_detects_tampering() {
        let mut r = verify_transfer(5, 4, 5, 1, 1, 20).unwrap();
        r.residues[3] = 1;
        assert!(spot_check_series(&r, &[3])
            .unwrap_err()
            .is_verification_failure());
    }
}
