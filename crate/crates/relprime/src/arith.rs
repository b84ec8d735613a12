//! Elementary arithmetic functions: factorization, divisor lists, the Mobius,
//! divisor-count and Liouville functions, gcds, and exact big-integer powers
//! and binomials. Everything else in the crate is built on top of this.
//!
//! Factorization is plain deterministic trial division; the inputs this crate
//! is meant for are small and correctness beats speed. For batch work over a
//! dense range (identity sweeps) a linear smallest-prime-factor sieve is
//! provided instead.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Count, Error};

/// Prime decomposition of a positive integer.
///
/// Primes are stored in strictly increasing order with their exponents, and
/// `n = 1` is the empty decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factored integer.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct prime factors.
    pub fn distinct_primes(&self) -> u32 {
        self.factors.len() as u32
    }

    /// Sum of all prime exponents.
    pub fn exponent_sum(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Product of the distinct prime factors.
    pub fn radical(&self) -> u64 {
        self.factors.iter().map(|&(p, _)| p).product()
    }

    /// Mobius function: 0 unless squarefree, else `(-1)^(distinct primes)`.
    pub fn mobius(&self) -> i32 {
        if !self.is_squarefree() {
            0
        } else if self.factors.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of divisors, the product of `exponent + 1` over all primes.
    pub fn tau(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    /// Liouville function, `(-1)` to the total exponent sum.
    pub fn liouville(&self) -> i32 {
        if self.exponent_sum().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let prev = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..prev {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    /// Divisors with nonzero Mobius value, ascending. These are exactly the
    /// products of subsets of the distinct primes, so there are
    /// `2^(distinct primes)` of them.
    pub fn squarefree_divisors(&self) -> Vec<u64> {
        self.squarefree_divisors_with_mu()
            .into_iter()
            .map(|(d, _)| d)
            .collect()
    }

    /// `(d, mu(d))` for every squarefree divisor, ascending by `d`.
    ///
    /// Every Mobius-weighted divisor sum in this crate runs over this list:
    /// the omitted divisors carry `mu = 0` and contribute nothing.
    pub fn squarefree_divisors_with_mu(&self) -> Vec<(u64, i32)> {
        let mut divs = vec![(1u64, 1i32)];
        for &(p, _) in &self.factors {
            let prev = divs.len();
            for i in 0..prev {
                let (d, mu) = divs[i];
                divs.push((d * p, -mu));
            }
        }
        divs.sort_unstable_by_key(|&(d, _)| d);
        divs
    }
}

/// Factor a positive integer by trial division.
pub fn factorize(n: u64) -> Result<Factorization, Error> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let strip = |p: u64, rest: &mut u64, factors: &mut Vec<(u64, u32)>| {
        if (*rest).is_multiple_of(p) {
            let mut e = 0;
            while (*rest).is_multiple_of(p) {
                *rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    };
    strip(2, &mut rest, &mut factors);
    strip(3, &mut rest, &mut factors);
    let mut p = 5u64;
    while p <= rest / p {
        strip(p, &mut rest, &mut factors);
        strip(p + 2, &mut rest, &mut factors);
        p += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// Mobius function of `n`.
pub fn mobius(n: u64) -> Result<i32, Error> {
    Ok(factorize(n)?.mobius())
}

/// Number of divisors of `n`.
pub fn tau(n: u64) -> Result<u64, Error> {
    Ok(factorize(n)?.tau())
}

/// Liouville function of `n`.
pub fn liouville(n: u64) -> Result<i32, Error> {
    Ok(factorize(n)?.liouville())
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>, Error> {
    Ok(factorize(n)?.divisors())
}

/// Divisors of `n` with nonzero Mobius value, ascending.
pub fn squarefree_divisors(n: u64) -> Result<Vec<u64>, Error> {
    Ok(factorize(n)?.squarefree_divisors())
}

/// Greatest common divisor of a nonempty slice of positive integers.
pub fn gcd_set(values: &[u64]) -> Result<u64, Error> {
    if values.is_empty() {
        return Err(Error::EmptySet);
    }
    if values.contains(&0) {
        return Err(Error::ZeroArgument);
    }
    Ok(values.iter().fold(0u64, |g, &v| num_integer::gcd(g, v)))
}

/// Exact `2^e`.
pub fn big_pow2(e: u64) -> Count {
    BigUint::one() << (e as usize)
}

/// Exact binomial coefficient `C(a, k)`; 0 when `k > a`.
pub fn big_binomial(a: u64, k: u64) -> Count {
    if k > a {
        return BigUint::zero();
    }
    let k = k.min(a - k);
    let mut res = BigUint::one();
    for i in 0..k {
        // C(a, i+1) = C(a, i) * (a - i) / (i + 1); the division is exact.
        res = res * (a - i) / (i + 1);
    }
    res
}

/// Default limit of [`SpfSieve::with_default_limit`].
pub const DEFAULT_SIEVE_LIMIT: u64 = 1_000_000;

/// Linear smallest-prime-factor sieve for batch factorization.
///
/// Built once, then read-only; factoring a sieved value walks its chain of
/// smallest prime factors instead of trial dividing.
#[derive(Debug, Clone)]
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    /// Sieve all integers up to and including `limit`.
    pub fn new(limit: u64) -> SpfSieve {
        let limit = limit as usize;
        let mut spf = vec![0u32; limit + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            for &p in &primes {
                let p = p as usize;
                if p > spf[i] as usize || p > limit / i {
                    break;
                }
                spf[i * p] = p as u32;
            }
        }
        SpfSieve { spf }
    }

    pub fn with_default_limit() -> SpfSieve {
        SpfSieve::new(DEFAULT_SIEVE_LIMIT)
    }

    /// Largest value this sieve can factor.
    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Factor `n` using the precomputed table.
    pub fn factorize(&self, n: u64) -> Result<Factorization, Error> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        if n > self.limit() {
            return Err(Error::OutsideSieve { n, limit: self.limit() });
        }
        let mut rest = n as usize;
        let mut factors = Vec::new();
        while rest > 1 {
            let p = self.spf[rest] as usize;
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p as u64, e));
        }
        factors.sort_unstable_by_key(|&(p, _)| p);
        Ok(Factorization { n, factors })
    }

    pub fn mobius(&self, n: u64) -> Result<i32, Error> {
        Ok(self.factorize(n)?.mobius())
    }

    pub fn tau(&self, n: u64) -> Result<u64, Error> {
        Ok(self.factorize(n)?.tau())
    }

    pub fn liouville(&self, n: u64) -> Result<i32, Error> {
        Ok(self.factorize(n)?.liouville())
    }
}
