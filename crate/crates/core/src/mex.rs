//! The three routes to `p_{mt,t}(n)`:
//!
//! * `Oracle`: enumerate partitions and test the mex condition directly;
//! * `Series`: the coefficient of `q^n` in `theta_{m,t}(q) / (q;q)_inf`;
//! * `Identity`: the finite signed sum of shifted `p(n)` values
//!   `p(n) + sum_r p(n - t r (2rm - m + 2)) - sum_s p(n - t (2s-1)(sm - m + 1))`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{p_aa_oracle, MexParams, ORACLE_CEILING};
use crate::series::{mex_theta, partition_series, TruncatedSeries};

pub use crate::pentagonal::{generalized_pentagonals_upto, PentagonalIndex};

/// Series whose `j`-th coefficient is `p_{mt,t}(j)`, for `j <= order`.
pub fn p_mtt_series(params: MexParams, order: usize) -> TruncatedSeries {
    partition_series(order).mul(&mex_theta(params, order))
}

/// Same as [`p_mtt_series`] but reusing an already computed
/// `sum p(n) q^n`.
pub fn p_mtt_series_with(params: MexParams, partitions: &TruncatedSeries) -> TruncatedSeries {
    partitions.mul(&mex_theta(params, partitions.order()))
}

/// One term of the identity route: `sign * p(offset)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityTerm {
    pub positive: bool,
    pub offset: u64,
}

/// The terms of the identity for argument `n`, keeping only the ones
/// with non-negative argument. The two sums are read as finite: each stops
/// at the first shift that exceeds `n`.
pub fn identity_terms(params: MexParams, n: u64) -> Vec<IdentityTerm> {
    let (m, t) = (params.m() as u128, params.t() as u128);
    let mut terms = Vec::new();
    terms.push(IdentityTerm {
        positive: true,
        offset: n,
    });
    // t r (2rm - m + 2), r >= 1
    for r in 1u128.. {
        let shift = t * r * (2 * r * m - m + 2);
        if shift > n as u128 {
            break;
        }
        terms.push(IdentityTerm {
            positive: true,
            offset: n - shift as u64,
        });
    }
    // t (2s - 1)(sm - m + 1), s >= 1
    for s in 1u128.. {
        let shift = t * (2 * s - 1) * (s * m - m + 1);
        if shift > n as u128 {
            break;
        }
        terms.push(IdentityTerm {
            positive: false,
            offset: n - shift as u64,
        });
    }
    terms
}

/// `p_{mt,t}(n)` through the `p(n)` identity. `p_table[j]` must hold
/// `p(j)` for `j <= n`.
pub fn p_mtt_identity(params: MexParams, n: u64, p_table: &[BigInt]) -> Result<BigInt> {
    let needed = usize::try_from(n).map_err(|_| Error::Overflow("n"))? + 1;
    if p_table.len() < needed {
        return Err(Error::TableTooShort {
            needed,
            len: p_table.len(),
        });
    }
    let mut acc = BigInt::zero();
    for term in identity_terms(params, n) {
        let p = &p_table[term.offset as usize];
        if term.positive {
            acc += p;
        } else {
            acc -= p;
        }
    }
    Ok(acc)
}

/// The identity route over residues: `p_mod[j]` is `p(j) mod modulus`.
pub fn p_mtt_identity_mod(params: MexParams, n: u64, p_mod: &[u64], modulus: u64) -> Result<u64> {
    let needed = usize::try_from(n).map_err(|_| Error::Overflow("n"))? + 1;
    if p_mod.len() < needed {
        return Err(Error::TableTooShort {
            needed,
            len: p_mod.len(),
        });
    }
    let modulus = modulus as u128;
    let mut acc: u128 = 0;
    for term in identity_terms(params, n) {
        let v = p_mod[term.offset as usize] as u128 % modulus;
        acc = if term.positive {
            (acc + v) % modulus
        } else {
            (acc + modulus - v) % modulus
        };
    }
    Ok(acc as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Route {
    Oracle,
    Series,
    Identity,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Oracle, Route::Series, Route::Identity];

    pub fn name(&self) -> &'static str {
        match self {
            Route::Oracle => "oracle",
            Route::Series => "series",
            Route::Identity => "identity",
        }
    }
}

impl core::str::FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Route::Oracle),
            "series" => Ok(Route::Series),
            "identity" => Ok(Route::Identity),
            _ => Err(Error::Precondition(
                "route must be oracle, series or identity",
            )),
        }
    }
}

/// Every route's value for one `(params, n)`; the oracle is `None` above
/// [`ORACLE_CEILING`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteValues {
    pub oracle: Option<BigInt>,
    pub series: BigInt,
    pub identity: BigInt,
}

impl RouteValues {
    pub fn agree(&self) -> bool {
        self.series == self.identity && self.oracle.as_ref().is_none_or(|o| *o == self.series)
    }

    pub fn get(&self, route: Route) -> Option<&BigInt> {
        match route {
            Route::Oracle => self.oracle.as_ref(),
            Route::Series => Some(&self.series),
            Route::Identity => Some(&self.identity),
        }
    }
}

fn oracle_value(params: MexParams, n: u64) -> Result<BigInt> {
    if n > ORACLE_CEILING {
        return Err(Error::OracleCeiling {
            n,
            ceiling: ORACLE_CEILING,
        });
    }
    p_aa_oracle(n, params.modulus(), params.residue()).map(BigInt::from)
}

fn order_of(n: u64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::Overflow("n"))
}

/// Computes every available route for `(params, n)`.
pub fn p_mtt_all(params: MexParams, n: u64) -> Result<RouteValues> {
    let order = order_of(n)?;
    let partitions = partition_series(order);
    let series = p_mtt_series_with(params, &partitions).coeff(order).clone();
    let identity = p_mtt_identity(params, n, partitions.coeffs())?;
    let oracle = if n <= ORACLE_CEILING {
        Some(oracle_value(params, n)?)
    } else {
        None
    };
    Ok(RouteValues {
        oracle,
        series,
        identity,
    })
}

/// `p_{mt,t}(n)` by the requested route.
///
/// With `checked`, every route that applies is evaluated and any
/// disagreement is returned as [`Error::RouteDisagreement`].
pub fn p_mtt(params: MexParams, n: u64, route: Route, checked: bool) -> Result<BigInt> {
    if checked {
        if route == Route::Oracle && n > ORACLE_CEILING {
            return oracle_value(params, n);
        }
        let values = p_mtt_all(params, n)?;
        if !values.agree() {
            return Err(Error::RouteDisagreement {
                n,
                oracle: values.oracle,
                series: values.series,
                identity: values.identity,
            });
        }
        return Ok(values.get(route).cloned().unwrap_or(values.series));
    }
    let order = order_of(n)?;
    match route {
        Route::Oracle => oracle_value(params, n),
        Route::Series => Ok(p_mtt_series(params, order).coeff(order).clone()),
        Route::Identity => p_mtt_identity(params, n, partition_series(order).coeffs()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition_count_oracle;

    fn params(m: u64, t: u64) -> MexParams {
        MexParams::new(m, t).unwrap()
    }

    #[test]
    fn p31_of_5_every_route() {
        for route in Route::ALL {
            assert_eq!(p_mtt(params(3, 1), 5, route, false).unwrap(), 3.into());
            assert_eq!(p_mtt(params(3, 1), 5, route, true).unwrap(), 3.into());
        }
        // p(5) - p(4) + p(0)
        let s = p_mtt_series(params(3, 1), 5);
        assert_eq!(*s.coeff(5), BigInt::from(7 - 5 + 1));
    }

    #[test]
    fn small_fixed_values() {
        for route in Route::ALL {
            assert_eq!(p_mtt(params(1, 1), 1, route, true).unwrap(), 0.into());
            assert_eq!(p_mtt(params(2, 3), 0, route, true).unwrap(), 1.into());
        }
    }

    #[test]
    fn identity_example_m1_t1() {
        let p = partition_series(5);
        // p(5) + p(5-3) - p(5-1)
        assert_eq!(
            p_mtt_identity(params(1, 1), 5, p.coeffs()).unwrap(),
            BigInt::from(7 + 2 - 5)
        );
        assert_eq!(p_aa_oracle(5, 1, 1).unwrap(), 4);
        for m in 1..5 {
            for t in 1..4 {
                assert_eq!(
                    p_mtt_identity(params(m, t), 0, p.coeffs()).unwrap(),
                    1.into()
                );
            }
        }
    }

    #[test]
    fn identity_needs_a_long_enough_table() {
        let p = partition_series(3);
        assert_eq!(
            p_mtt_identity(params(1, 1), 10, p.coeffs()),
            Err(Error::TableTooShort { needed: 11, len: 4 })
        );
    }

    #[test]
    fn m2_t1_matches_oracle() {
        let s = p_mtt_series(params(2, 1), 30);
        for j in 0..=30 {
            assert_eq!(
                *s.coeff(j as usize),
                BigInt::from(p_aa_oracle(j, 2, 1).unwrap())
            );
        }
    }

    #[test]
    fn constant_term_is_one() {
        for m in 1..6 {
            for t in 1..6 {
                assert_eq!(*p_mtt_series(params(m, t), 10).coeff(0), BigInt::from(1));
            }
        }
    }

    #[test]
    fn oracle_ceiling_enforced() {
        assert!(matches!(
            p_mtt(params(1, 1), ORACLE_CEILING + 1, Route::Oracle, false),
            Err(Error::OracleCeiling { .. })
        ));
        // the other routes are still fine above the ceiling
        let v = p_mtt_all(params(1, 1), 200).unwrap();
        assert!(v.oracle.is_none());
        assert!(v.agree());
    }

    #[test]
    fn routes_agree_on_small_grid() {
        let p = partition_series(40);
        for m in 1..=4 {
            for t in 1..=3 {
                let pr = params(m, t);
                let s = p_mtt_series_with(pr, &p);
                for n in 0..=40u64 {
                    let oracle = BigInt::from(p_aa_oracle(n, pr.modulus(), pr.residue()).unwrap());
                    let id = p_mtt_identity(pr, n, p.coeffs()).unwrap();
                    assert_eq!(*s.coeff(n as usize), oracle, "series {pr} n={n}");
                    assert_eq!(id, oracle, "identity {pr} n={n}");
                    assert!(oracle <= BigInt::from(partition_count_oracle(n)));
                }
            }
        }
    }

    #[test]
    fn residue_identity_matches_big_identity() {
        let p = partition_series(300);
        let p_mod = p.reduce_mod(49);
        for n in [0u64, 7, 47, 96, 299] {
            let big = p_mtt_identity(params(2, 3), n, p.coeffs()).unwrap();
            let small = p_mtt_identity_mod(params(2, 3), n, &p_mod, 49).unwrap();
            let expect = ((big % 49) + 49) % 49;
            assert_eq!(BigInt::from(small), expect);
        }
    }
}
