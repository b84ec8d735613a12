//! Exact counting of relatively prime subsets of integer intervals.
//!
//! A finite set `X` of positive integers is *relatively prime to n* when
//! `gcd(X ∪ {n}) = 1`. This crate counts, with exact big-integer arithmetic,
//! the subsets of an interval `[l, m]` or of a union of two disjoint
//! intervals that are relatively prime to a given modulus, optionally
//! restricted to a fixed subset size. The counts are evaluated as short
//! Mobius-weighted divisor sums instead of by enumeration, so results with
//! hundreds of digits come back instantly.
//!
//! The crate is organised around five modules:
//!
//! * [`arith`] - factorization, divisor lists, the Mobius, divisor-count and
//!   Liouville functions, and exact power/binomial helpers.
//! * [`phi`] - the closed-form evaluators for all counting functions, with an
//!   optional per-divisor trace of the evaluated sum.
//! * [`oracle`] - a deliberately naive subset-enumeration counter used as
//!   ground truth in the test suite and the `verify` tooling.
//! * [`inversion`] - Mobius inversion for functions of several variables,
//!   mixing exactly divided and floor-divided arguments.
//! * [`identities`] - executable checks of the divisor-sum identities the
//!   closed forms are built from.
//!
//! Everything is `no_std` + `alloc`; the companion `relprime-cli` crate adds
//! the command line and the machine-readable output formats.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

#[cfg(all(feature = "std", not(test)))]
extern crate std;

pub mod arith;
pub mod identities;
pub mod inversion;
pub mod oracle;
pub mod phi;

mod error;

pub use error::Error;

/// Exact nonnegative count. Subset counts grow like `2^m`, far past any
/// fixed-width integer.
pub type Count = num_bigint::BigUint;
