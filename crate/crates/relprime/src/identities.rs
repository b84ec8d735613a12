//! Executable checks of the Mobius divisor-sum identities.
//!
//! Each checker evaluates every printed form of one identity literally
//! (independent loops over all divisors, no shared shortcuts) and compares
//! the results against the value predicted by a gcd case analysis. A failed
//! comparison means an implementation bug, so the checkers double as a
//! regression suite for [`crate::arith`].
//!
//! The five identity families:
//!
//! * `basic`:  `sum mu(d) over d | n` is 1 at `n = 1` and 0 otherwise.
//! * `tau`:    `sum mu(d) * tau(n/d)` is 1 for every `n`.
//! * `lambda`: `sum mu(d) * lambda(d)` is `2^r`, `r` = distinct primes of `n`.
//! * `theorem4` (modulus `n > 1`): the power sum over `2^(m/d - (m-1)/d)`
//!   and its linear twin both equal `[gcd(m,n) = 1]`; the paired power sum
//!   over `2^((m+1)/d - (m-1)/d)` equals `1 + [gcd(m,n)=1] + [gcd(m+1,n)=1]`.
//! * `theorem5` (modulus `n > 1`): the linear sum over
//!   `(m+1)/d - (m-1)/d` equals `[gcd(m,n)=1] + [gcd(m+1,n)=1]` and the
//!   binomial sum over `C((m+1)/d - (m-1)/d + 1, 2)` equals one more.
//!
//! (All divisions above are floors; `[..]` is the 0/1 indicator.)

use alloc::vec;
use alloc::vec::Vec;

use num_integer::gcd;

use crate::arith::{factorize, Factorization, SpfSieve};
use crate::Error;

/// Identity family tags, matching the command-line vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    BasicMobius,
    TauConvolution,
    LambdaConvolution,
    Theorem4,
    Theorem5,
}

impl IdentityId {
    pub const ALL: [IdentityId; 5] = [
        IdentityId::BasicMobius,
        IdentityId::TauConvolution,
        IdentityId::LambdaConvolution,
        IdentityId::Theorem4,
        IdentityId::Theorem5,
    ];

    /// Stable lowercase name, as used by the CLI.
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::BasicMobius => "basic",
            IdentityId::TauConvolution => "tau",
            IdentityId::LambdaConvolution => "lambda",
            IdentityId::Theorem4 => "theorem4",
            IdentityId::Theorem5 => "theorem5",
        }
    }

    /// Whether the identity is a two-parameter `(m, n)` family.
    pub fn takes_m(self) -> bool {
        matches!(self, IdentityId::Theorem4 | IdentityId::Theorem5)
    }
}

/// Outcome of checking one identity at one grid point.
///
/// `lhs_values` holds the independently evaluated printed forms, in the
/// order listed in the module docs; `expected` holds the case-analysis value
/// for each form. `matched` is true exactly when they agree elementwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub m: Option<u64>,
    pub n: u64,
    pub lhs_values: Vec<i64>,
    pub expected: Vec<i64>,
    pub matched: bool,
}

impl IdentityReport {
    fn new(id: IdentityId, m: Option<u64>, n: u64, lhs: Vec<i64>, expected: Vec<i64>) -> Self {
        let matched = lhs == expected;
        IdentityReport { id, m, n, lhs_values: lhs, expected, matched }
    }
}

/// Evaluation switches for the checkers.
#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions<'s> {
    /// Fault injection for self-tests: negate `mu(d)` for every `d > 1`.
    pub flip_mu_sign: bool,
    /// Factor through this sieve where it covers the value; sweeps over
    /// dense ranges build one sieve up front instead of trial dividing.
    pub sieve: Option<&'s SpfSieve>,
}

fn factor(n: u64, opts: &CheckOptions<'_>) -> Result<Factorization, Error> {
    match opts.sieve {
        Some(s) if n <= s.limit() => s.factorize(n),
        _ => factorize(n),
    }
}

fn mu(d: u64, opts: &CheckOptions<'_>) -> Result<i64, Error> {
    let mu = factor(d, opts)?.mobius() as i64;
    Ok(if opts.flip_mu_sign && d > 1 { -mu } else { mu })
}

fn indicator(coprime: bool) -> i64 {
    coprime as i64
}

/// `sum mu(d) over d | n` against the unit indicator.
pub fn check_basic_mobius(n: u64) -> Result<IdentityReport, Error> {
    check_basic_mobius_with(n, &CheckOptions::default())
}

pub fn check_basic_mobius_with(
    n: u64,
    opts: &CheckOptions<'_>,
) -> Result<IdentityReport, Error> {
    let divisors = factor(n, opts)?.divisors();
    let mut sum = 0i64;
    for d in divisors {
        sum += mu(d, opts)?;
    }
    let expected = if n == 1 { 1 } else { 0 };
    Ok(IdentityReport::new(IdentityId::BasicMobius, None, n, vec![sum], vec![expected]))
}

/// `sum mu(d) * tau(n/d) over d | n` against the constant 1.
pub fn check_tau_convolution(n: u64) -> Result<IdentityReport, Error> {
    check_tau_convolution_with(n, &CheckOptions::default())
}

pub fn check_tau_convolution_with(
    n: u64,
    opts: &CheckOptions<'_>,
) -> Result<IdentityReport, Error> {
    let divisors = factor(n, opts)?.divisors();
    let mut sum = 0i64;
    for d in divisors {
        sum += mu(d, opts)? * factor(n / d, opts)?.tau() as i64;
    }
    Ok(IdentityReport::new(IdentityId::TauConvolution, None, n, vec![sum], vec![1]))
}

/// `sum mu(d) * lambda(d) over d | n` against `2^(distinct primes of n)`.
pub fn check_lambda_convolution(n: u64) -> Result<IdentityReport, Error> {
    check_lambda_convolution_with(n, &CheckOptions::default())
}

pub fn check_lambda_convolution_with(
    n: u64,
    opts: &CheckOptions<'_>,
) -> Result<IdentityReport, Error> {
    let factorization = factor(n, opts)?;
    let mut sum = 0i64;
    for d in factorization.divisors() {
        sum += mu(d, opts)? * factor(d, opts)?.liouville() as i64;
    }
    let expected = 1i64 << factorization.distinct_primes();
    Ok(IdentityReport::new(IdentityId::LambdaConvolution, None, n, vec![sum], vec![expected]))
}

/// The indicator-valued sums at `m` and the pair sum at `[m, m+1]`.
///
/// Forms, in report order: `sum mu(d) * 2^(m/d - (m-1)/d)`,
/// `sum mu(d) * (m/d - (m-1)/d)`, `sum mu(d) * 2^((m+1)/d - (m-1)/d)`.
pub fn check_theorem4(m: u64, n: u64) -> Result<IdentityReport, Error> {
    check_theorem4_with(m, n, &CheckOptions::default())
}

pub fn check_theorem4_with(
    m: u64,
    n: u64,
    opts: &CheckOptions<'_>,
) -> Result<IdentityReport, Error> {
    check_two_param_args(m, n)?;
    let divisors = factor(n, opts)?.divisors();

    let mut power_single = 0i64;
    for &d in &divisors {
        let e = m / d - (m - 1) / d;
        power_single += mu(d, opts)? * (1i64 << e);
    }

    let mut linear_single = 0i64;
    for &d in &divisors {
        linear_single += mu(d, opts)? * (m / d - (m - 1) / d) as i64;
    }

    let mut power_pair = 0i64;
    for &d in &divisors {
        let e = (m + 1) / d - (m - 1) / d;
        power_pair += mu(d, opts)? * (1i64 << e);
    }

    let g1 = indicator(gcd(m, n) == 1);
    let g2 = indicator(gcd(m + 1, n) == 1);
    Ok(IdentityReport::new(
        IdentityId::Theorem4,
        Some(m),
        n,
        vec![power_single, linear_single, power_pair],
        vec![g1, g1, 1 + g1 + g2],
    ))
}

/// The linear and binomial pair sums at `[m, m+1]`.
///
/// Forms, in report order: `sum mu(d) * ((m+1)/d - (m-1)/d)`,
/// `sum mu(d) * C((m+1)/d - (m-1)/d + 1, 2)`.
pub fn check_theorem5(m: u64, n: u64) -> Result<IdentityReport, Error> {
    check_theorem5_with(m, n, &CheckOptions::default())
}

pub fn check_theorem5_with(
    m: u64,
    n: u64,
    opts: &CheckOptions<'_>,
) -> Result<IdentityReport, Error> {
    check_two_param_args(m, n)?;
    let divisors = factor(n, opts)?.divisors();

    let mut linear = 0i64;
    for &d in &divisors {
        linear += mu(d, opts)? * ((m + 1) / d - (m - 1) / d) as i64;
    }

    let mut binomial = 0i64;
    for &d in &divisors {
        let top = ((m + 1) / d - (m - 1) / d + 1) as i64;
        binomial += mu(d, opts)? * (top * (top - 1) / 2);
    }

    let g1 = indicator(gcd(m, n) == 1);
    let g2 = indicator(gcd(m + 1, n) == 1);
    Ok(IdentityReport::new(
        IdentityId::Theorem5,
        Some(m),
        n,
        vec![linear, binomial],
        vec![g1 + g2, 1 + g1 + g2],
    ))
}

fn check_two_param_args(m: u64, n: u64) -> Result<(), Error> {
    if m == 0 {
        return Err(Error::ZeroArgument);
    }
    if n <= 1 {
        return Err(Error::ModulusNotAboveOne { n });
    }
    Ok(())
}

/// Dispatch a check by tag. `m` is required for the two-parameter families
/// and ignored by the others.
pub fn check_identity(
    id: IdentityId,
    m: Option<u64>,
    n: u64,
    opts: &CheckOptions<'_>,
) -> Result<IdentityReport, Error> {
    match id {
        IdentityId::BasicMobius => check_basic_mobius_with(n, opts),
        IdentityId::TauConvolution => check_tau_convolution_with(n, opts),
        IdentityId::LambdaConvolution => check_lambda_convolution_with(n, opts),
        IdentityId::Theorem4 => {
            let m = m.ok_or(Error::ArityMismatch { expected: 2, found: 1 })?;
            check_theorem4_with(m, n, opts)
        }
        IdentityId::Theorem5 => {
            let m = m.ok_or(Error::ArityMismatch { expected: 2, found: 1 })?;
            check_theorem5_with(m, n, opts)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_matched(report: &IdentityReport) {
        assert!(
            report.matched,
            "{:?} at (m={:?}, n={}) gave {:?}, expected {:?}",
            report.id, report.m, report.n, report.lhs_values, report.expected
        );
    }

    #[test]
    fn basic_mobius_examples() {
        let r = check_basic_mobius(1).unwrap();
        assert_eq!((r.lhs_values.as_slice(), r.expected.as_slice()), ([1].as_slice(), [1].as_slice()));
        assert_matched(&r);
        assert_eq!(check_basic_mobius(2).unwrap().lhs_values, vec![0]);
        assert_eq!(check_basic_mobius(360).unwrap().lhs_values, vec![0]);
        assert_eq!(check_basic_mobius(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn tau_convolution_examples() {
        // Terms at n = 12: tau(12) - tau(6) - tau(4) + tau(2) = 6 - 4 - 3 + 2.
        assert_eq!(check_tau_convolution(12).unwrap().lhs_values, vec![1]);
        assert_eq!(check_tau_convolution(1).unwrap().lhs_values, vec![1]);
        assert_eq!(check_tau_convolution(97).unwrap().lhs_values, vec![1]);
    }

    #[test]
    fn lambda_convolution_examples() {
        let r = check_lambda_convolution(12).unwrap();
        assert_eq!((r.lhs_values[0], r.expected[0]), (4, 4));
        let r = check_lambda_convolution(1).unwrap();
        assert_eq!((r.lhs_values[0], r.expected[0]), (1, 1));
        let r = check_lambda_convolution(30).unwrap();
        assert_eq!((r.lhs_values[0], r.expected[0]), (8, 8));
    }

    #[test]
    fn theorem4_examples() {
        // gcd(4,6) = 2, gcd(5,6) = 1.
        let r = check_theorem4(4, 6).unwrap();
        assert_eq!(r.expected, vec![0, 0, 2]);
        assert_matched(&r);

        // gcd(5,6) = 1, gcd(6,6) = 6.
        let r = check_theorem4(5, 6).unwrap();
        assert_eq!(r.expected, vec![1, 1, 2]);
        assert_matched(&r);

        // Pair power sum at (2, 6) expands to 4 - 2 - 2 + 1 = 1.
        let r = check_theorem4(2, 6).unwrap();
        assert_eq!(r.lhs_values[2], 1);
        assert_eq!(r.expected, vec![0, 0, 1]);
        assert_matched(&r);

        assert_eq!(check_theorem4(4, 1), Err(Error::ModulusNotAboveOne { n: 1 }));
        assert_eq!(check_theorem4(0, 6), Err(Error::ZeroArgument));
    }

    #[test]
    fn theorem5_examples() {
        // Linear sum at (2, 6) expands to 2 - 1 - 1 + 0 = 0.
        let r = check_theorem5(2, 6).unwrap();
        assert_eq!(r.lhs_values, vec![0, 1]);
        assert_matched(&r);

        let r = check_theorem5(5, 6).unwrap();
        assert_eq!(r.lhs_values, vec![1, 2]);
        assert_matched(&r);

        // gcd(6,35) = 1, gcd(7,35) = 7.
        let r = check_theorem5(6, 35).unwrap();
        assert_eq!(r.lhs_values, vec![1, 2]);
        assert_matched(&r);
    }

    #[test]
    fn dispatch_by_id() {
        let opts = CheckOptions::default();
        let direct = check_theorem4(4, 6).unwrap();
        let via_id = check_identity(IdentityId::Theorem4, Some(4), 6, &opts).unwrap();
        assert_eq!(direct, via_id);
        assert_eq!(
            check_identity(IdentityId::Theorem4, None, 6, &opts),
            Err(Error::ArityMismatch { expected: 2, found: 1 })
        );
        let direct = check_basic_mobius(12).unwrap();
        let via_id = check_identity(IdentityId::BasicMobius, None, 12, &opts).unwrap();
        assert_eq!(direct, via_id);
    }

    #[test]
    fn sieve_backed_checks_agree() {
        let sieve = SpfSieve::new(500);
        let with_sieve = CheckOptions { flip_mu_sign: false, sieve: Some(&sieve) };
        for n in 1..=200u64 {
            assert_eq!(
                check_tau_convolution_with(n, &with_sieve).unwrap(),
                check_tau_convolution(n).unwrap()
            );
        }
        for m in 1..=20u64 {
            for n in 2..=20u64 {
                assert_eq!(
                    check_theorem5_with(m, n, &with_sieve).unwrap(),
                    check_theorem5(m, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn flipped_mu_breaks_the_identities() {
        let bad = CheckOptions { flip_mu_sign: true, sieve: None };
        assert!(!check_basic_mobius_with(2, &bad).unwrap().matched);
        assert!(!check_tau_convolution_with(12, &bad).unwrap().matched);
        assert!(!check_lambda_convolution_with(30, &bad).unwrap().matched);
        assert!(!check_theorem4_with(5, 6, &bad).unwrap().matched);
        assert!(!check_theorem5_with(5, 6, &bad).unwrap().matched);
    }
}
