//! Mex-related partition functions `p_{mt,t}(n)`.
//!
//! `p_{A,a}(n)` counts the partitions of `n` whose `mex_{A,a}`, the least
//! positive integer congruent to `a` mod `A` that is not a part, is
//! congruent to `a` mod `2A`. This crate computes the family
//! `p_{mt,t}(n)` three independent ways and checks its parity and
//! congruence properties.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod congruence;
pub mod error;
pub mod mex;
pub mod parity;
pub mod partition;
pub mod pentagonal;
pub mod series;

pub use error::{Error, Result};
pub use mex::{p_mtt, Route};
pub use partition::{enumerate_partitions, mex, p_aa_oracle, MexParams, Partition};
pub use series::{ParitySeries, TruncatedSeries};
