//! Closed-form evaluators for the subset-counting functions.
//!
//! For a finite set `A` of positive integers and a modulus `n`, `phi(A, n)`
//! is the number of nonempty subsets `X` of `A` with `gcd(X ∪ {n}) = 1`, and
//! `phi_k` restricts the count to subsets of size `k`. Here `A` is an
//! interval `[l, m]` or a union of two disjoint intervals, and every count is
//! evaluated as a short Mobius-weighted divisor sum:
//!
//! ```text
//! phi([l1,m1] ∪ [l2,m2], n)   = sum over d | n of
//!     mu(d) * 2^( m1/d + m2/d - (l1-1)/d - (l2-1)/d )        (floor divisions)
//! phi_k([l1,m1] ∪ [l2,m2], n) = the same sum with C(exponent, k) in place of 2^exponent
//! ```
//!
//! The anchored variants `psi` and `psi2` count only subsets forced to
//! contain the lower endpoint of one (respectively both) of the intervals;
//! their divisor index shrinks to `d | gcd(l, n)` (respectively
//! `d | gcd(l1, l2, n)`) and the anchored endpoints divide out exactly:
//!
//! ```text
//! psi(l, m, n)            = sum over d | gcd(l, n) of mu(d) * 2^( m/d - l/d )
//! psi2(l1, m1, l2, m2, n) = sum over d | gcd(l1, l2, n) of
//!     mu(d) * 2^( m1/d + m2/d - (l1 + l2)/d )
//! ```
//!
//! In the size-k anchored forms the binomial counts the free elements, so
//! `psi_k` uses `C(., k - 1)` and `psi2_k` uses `C(., k - 2)`.
//!
//! Only squarefree divisors are iterated; all other Mobius terms vanish. For
//! `n = 1` the all-sizes divisor sums would also count the empty set, so the
//! `phi` family answers `2^|A| - 1` directly in that case.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::gcd;
use num_traits::Zero;

use crate::arith::{big_binomial, big_pow2, factorize};
use crate::{Count, Error};

/// Closed integer range `[l, m]` with `1 <= l <= m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    l: u64,
    m: u64,
}

impl Interval {
    pub fn new(l: u64, m: u64) -> Result<Interval, Error> {
        if l == 0 {
            return Err(Error::ZeroArgument);
        }
        if l > m {
            return Err(Error::EmptyInterval { l, m });
        }
        Ok(Interval { l, m })
    }

    /// Inclusive lower endpoint.
    pub fn lower(&self) -> u64 {
        self.l
    }

    /// Inclusive upper endpoint.
    pub fn upper(&self) -> u64 {
        self.m
    }

    /// Number of elements, `m - l + 1`.
    pub fn len(&self) -> u64 {
        self.m - self.l + 1
    }

    pub fn is_empty(&self) -> bool {
        false // intervals are nonempty by construction
    }

    pub fn contains(&self, v: u64) -> bool {
        self.l <= v && v <= self.m
    }
}

/// Union of one or two disjoint, ordered intervals.
///
/// Construction normalizes: the intervals are sorted and merged when they
/// overlap or touch, so a stored second interval always starts at least two
/// past the end of the first and the union is genuinely two pieces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnionDomain {
    first: Interval,
    second: Option<Interval>,
}

impl UnionDomain {
    pub fn single(interval: Interval) -> UnionDomain {
        UnionDomain { first: interval, second: None }
    }

    /// Normalized union of two intervals, in either order.
    pub fn union(a: Interval, b: Interval) -> UnionDomain {
        let (lo, hi) = if (a.l, a.m) <= (b.l, b.m) { (a, b) } else { (b, a) };
        if hi.l - 1 <= lo.m {
            // Overlapping or adjacent: one interval.
            let merged = Interval { l: lo.l, m: lo.m.max(hi.m) };
            UnionDomain { first: merged, second: None }
        } else {
            UnionDomain { first: lo, second: Some(hi) }
        }
    }

    pub fn first(&self) -> Interval {
        self.first
    }

    pub fn second(&self) -> Option<Interval> {
        self.second
    }

    pub fn is_single(&self) -> bool {
        self.second.is_none()
    }

    /// Total number of elements.
    pub fn len(&self) -> u64 {
        self.first.len() + self.second.map_or(0, |s| s.len())
    }

    pub fn is_empty(&self) -> bool {
        false // intervals are nonempty by construction
    }

    pub fn contains(&self, v: u64) -> bool {
        self.first.contains(v) || self.second.is_some_and(|s| s.contains(v))
    }

    /// All elements in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = u64> + '_ {
        let tail = self.second.map(|s| s.l..=s.m);
        (self.first.l..=self.first.m).chain(tail.into_iter().flatten())
    }
}

/// A counting question: domain, coprimality modulus, optional subset size.
///
/// With `k = None` all nonempty subset sizes are counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiQuery {
    pub domain: UnionDomain,
    pub n: u64,
    pub k: Option<u64>,
}

impl PhiQuery {
    pub fn evaluate(&self) -> Result<Count, Error> {
        match self.k {
            None => phi(&self.domain, self.n),
            Some(k) => phi_k(&self.domain, self.n, k),
        }
    }

    pub fn evaluate_with(&self, opts: &EvalOptions) -> Result<Evaluation, Error> {
        match (self.domain.second(), self.k) {
            (None, None) => {
                phi_interval_eval(self.domain.first.l, self.domain.first.m, self.n, opts)
            }
            (None, Some(k)) => {
                phi_k_interval_eval(self.domain.first.l, self.domain.first.m, self.n, k, opts)
            }
            (Some(s), None) => {
                phi_union_eval(self.domain.first.l, self.domain.first.m, s.l, s.m, self.n, opts)
            }
            (Some(s), Some(k)) => phi_k_union_eval(
                self.domain.first.l,
                self.domain.first.m,
                s.l,
                s.m,
                self.n,
                k,
                opts,
            ),
        }
    }
}

/// Evaluation switches shared by all `*_eval` entry points.
#[derive(Debug, Clone, Copy, Default)]
pub struct EvalOptions {
    /// Record one [`DivisorTerm`] per evaluated divisor.
    pub trace: bool,
    /// Fault injection for self-tests: negate `mu(d)` for every `d > 1`.
    /// Deliberately corrupts every result; never enable outside tests.
    pub flip_mu_sign: bool,
}

impl EvalOptions {
    pub fn traced() -> EvalOptions {
        EvalOptions { trace: true, flip_mu_sign: false }
    }
}

/// The weight a divisor term applies to its exponent expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermArg {
    /// `2^exponent`
    Pow2 { exponent: u64 },
    /// `C(top, k)`
    Binomial { top: u64, k: u64 },
}

/// One evaluated divisor term: `term = mu * weight(arg)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTerm {
    pub d: u64,
    pub mu: i32,
    pub arg: TermArg,
    pub term: BigInt,
}

/// Result of a traced or fault-injected evaluation.
///
/// Under default options the value is the exact count and the trace terms
/// (when requested) sum to it. For the `n = 1` direct path of the `phi`
/// family the trace is a single `d = 1` record carrying the final value,
/// since the divisor-sum form would count the empty set there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: BigInt,
    pub terms: Vec<DivisorTerm>,
}

impl Evaluation {
    fn into_count(self) -> Count {
        let (sign, mag) = self.value.into_parts();
        assert!(
            sign != num_bigint::Sign::Minus,
            "divisor sum for a subset count came out negative"
        );
        mag
    }
}

enum Weight {
    Pow2,
    Binomial(u64),
}

/// Shared engine: `sum over squarefree d | base of mu(d) * weight(expo(d))`.
///
/// `expo` must be nonnegative on every divisor of `base`; all evaluators
/// guarantee that after argument validation, and the assertion guards it.
fn mu_divisor_sum(
    base: u64,
    weight: Weight,
    expo: impl Fn(u64) -> i128,
    opts: &EvalOptions,
) -> Result<Evaluation, Error> {
    let factorization = factorize(base)?;
    let mut value = BigInt::zero();
    let mut terms = Vec::new();
    for (d, mut mu) in factorization.squarefree_divisors_with_mu() {
        if opts.flip_mu_sign && d > 1 {
            mu = -mu;
        }
        let e = expo(d);
        assert!(e >= 0, "negative exponent {e} at divisor {d}");
        let e = e as u64;
        let (arg, magnitude) = match weight {
            Weight::Pow2 => (TermArg::Pow2 { exponent: e }, big_pow2(e)),
            Weight::Binomial(k) => (TermArg::Binomial { top: e, k }, big_binomial(e, k)),
        };
        let term = signed(magnitude, mu);
        value += &term;
        if opts.trace {
            terms.push(DivisorTerm { d, mu, arg, term });
        }
    }
    Ok(Evaluation { value, terms })
}

fn signed(magnitude: BigUint, mu: i32) -> BigInt {
    let signed = BigInt::from(magnitude);
    if mu < 0 {
        -signed
    } else {
        signed
    }
}

/// Direct `n = 1` answers for the `phi` family (all nonempty subsets
/// qualify; the sizes-`k` count is a plain binomial).
fn direct_all_subsets(size: u64, opts: &EvalOptions) -> Evaluation {
    let value = BigInt::from(big_pow2(size)) - BigInt::from(1u32);
    let terms = if opts.trace {
        vec![DivisorTerm {
            d: 1,
            mu: 1,
            arg: TermArg::Pow2 { exponent: size },
            term: value.clone(),
        }]
    } else {
        Vec::new()
    };
    Evaluation { value, terms }
}

fn direct_sized_subsets(size: u64, k: u64, opts: &EvalOptions) -> Evaluation {
    let value = BigInt::from(big_binomial(size, k));
    let terms = if opts.trace {
        vec![DivisorTerm {
            d: 1,
            mu: 1,
            arg: TermArg::Binomial { top: size, k },
            term: value.clone(),
        }]
    } else {
        Vec::new()
    };
    Evaluation { value, terms }
}

fn check_modulus(n: u64) -> Result<(), Error> {
    if n == 0 {
        Err(Error::ZeroArgument)
    } else {
        Ok(())
    }
}

fn check_interval(l: u64, m: u64) -> Result<(), Error> {
    Interval::new(l, m).map(|_| ())
}

fn check_union(l1: u64, m1: u64, l2: u64, m2: u64) -> Result<(), Error> {
    check_interval(l1, m1)?;
    check_interval(l2, m2)?;
    if m1 >= l2 {
        return Err(Error::UnorderedIntervals { m1, l2 });
    }
    Ok(())
}

fn check_size(k: u64) -> Result<(), Error> {
    if k == 0 {
        Err(Error::ZeroArgument)
    } else {
        Ok(())
    }
}

// Floor-division building blocks for the exponent expressions. Each one is
// nonnegative on its own, so sums of them never go negative.

/// Number of multiples of `d` in `[l, m]`: the element count of the
/// divisor-scaled interval, `m/d - (l-1)/d`.
fn span(l: u64, m: u64, d: u64) -> i128 {
    (m / d) as i128 - ((l - 1) / d) as i128
}

/// Number of multiples of `d` in `(l, m]` when `d | l`, so `l/d` is exact:
/// the scaled elements above the anchor.
fn anchored_span(l: u64, m: u64, d: u64) -> i128 {
    debug_assert_eq!(l % d, 0);
    (m / d) as i128 - (l / d) as i128
}

/// `phi([l, m], n)`: nonempty subsets of `[l, m]` relatively prime to `n`.
///
/// Evaluated as `sum over d | n of mu(d) * 2^(m/d - (l-1)/d)` for `n > 1`
/// and as `2^(m - l + 1) - 1` for `n = 1`.
pub fn phi_interval(l: u64, m: u64, n: u64) -> Result<Count, Error> {
    phi_interval_eval(l, m, n, &EvalOptions::default()).map(Evaluation::into_count)
}

pub fn phi_interval_eval(l: u64, m: u64, n: u64, opts: &EvalOptions) -> Result<Evaluation, Error> {
    check_interval(l, m)?;
    check_modulus(n)?;
    if n == 1 {
        return Ok(direct_all_subsets(m - l + 1, opts));
    }
    mu_divisor_sum(n, Weight::Pow2, |d| span(l, m, d), opts)
}

/// `phi_k([l, m], n)`: size-`k` subsets of `[l, m]` relatively prime to `n`.
pub fn phi_k_interval(l: u64, m: u64, n: u64, k: u64) -> Result<Count, Error> {
    phi_k_interval_eval(l, m, n, k, &EvalOptions::default()).map(Evaluation::into_count)
}

pub fn phi_k_interval_eval(
    l: u64,
    m: u64,
    n: u64,
    k: u64,
    opts: &EvalOptions,
) -> Result<Evaluation, Error> {
    check_interval(l, m)?;
    check_modulus(n)?;
    check_size(k)?;
    if n == 1 {
        return Ok(direct_sized_subsets(m - l + 1, k, opts));
    }
    mu_divisor_sum(n, Weight::Binomial(k), |d| span(l, m, d), opts)
}

/// `phi([l1, m1] ∪ [l2, m2], n)` over two disjoint ordered intervals
/// (`m1 < l2`): nonempty relatively prime subsets of the union.
pub fn phi_union(l1: u64, m1: u64, l2: u64, m2: u64, n: u64) -> Result<Count, Error> {
    phi_union_eval(l1, m1, l2, m2, n, &EvalOptions::default()).map(Evaluation::into_count)
}

pub fn phi_union_eval(
    l1: u64,
    m1: u64,
    l2: u64,
    m2: u64,
    n: u64,
    opts: &EvalOptions,
) -> Result<Evaluation, Error> {
    check_union(l1, m1, l2, m2)?;
    check_modulus(n)?;
    if n == 1 {
        return Ok(direct_all_subsets((m1 - l1 + 1) + (m2 - l2 + 1), opts));
    }
    mu_divisor_sum(n, Weight::Pow2, |d| span(l1, m1, d) + span(l2, m2, d), opts)
}

/// `phi_k` over two disjoint ordered intervals.
pub fn phi_k_union(l1: u64, m1: u64, l2: u64, m2: u64, n: u64, k: u64) -> Result<Count, Error> {
    phi_k_union_eval(l1, m1, l2, m2, n, k, &EvalOptions::default()).map(Evaluation::into_count)
}

pub fn phi_k_union_eval(
    l1: u64,
    m1: u64,
    l2: u64,
    m2: u64,
    n: u64,
    k: u64,
    opts: &EvalOptions,
) -> Result<Evaluation, Error> {
    check_union(l1, m1, l2, m2)?;
    check_modulus(n)?;
    check_size(k)?;
    if n == 1 {
        return Ok(direct_sized_subsets((m1 - l1 + 1) + (m2 - l2 + 1), k, opts));
    }
    mu_divisor_sum(
        n,
        Weight::Binomial(k),
        |d| span(l1, m1, d) + span(l2, m2, d),
        opts,
    )
}

/// `phi([1, m1] ∪ [l2, m2], n)`, the prefix-union special case.
///
/// Kept as its own code path (exponent `m1/d + m2/d - (l2-1)/d`, with no
/// first-interval lower term) so that its agreement with
/// [`phi_union`] at `l1 = 1` is a real cross-check between two formulas.
pub fn phi_prefix_union(m1: u64, l2: u64, m2: u64, n: u64) -> Result<Count, Error> {
    phi_prefix_union_eval(m1, l2, m2, n, &EvalOptions::default()).map(Evaluation::into_count)
}

pub fn phi_prefix_union_eval(
    m1: u64,
    l2: u64,
    m2: u64,
    n: u64,
    opts: &EvalOptions,
) -> Result<Evaluation, Error> {
    check_union(1, m1, l2, m2)?;
    check_modulus(n)?;
    if n == 1 {
        return Ok(direct_all_subsets(m1 + (m2 - l2 + 1), opts));
    }
    mu_divisor_sum(
        n,
        Weight::Pow2,
        |d| (m1 / d) as i128 + span(l2, m2, d),
        opts,
    )
}

/// Size-`k` form of [`phi_prefix_union`].
pub fn phi_k_prefix_union(m1: u64, l2: u64, m2: u64, n: u64, k: u64) -> Result<Count, Error> {
    phi_k_prefix_union_eval(m1, l2, m2, n, k, &EvalOptions::default()).map(Evaluation::into_count)
}

pub fn phi_k_prefix_union_eval(
    m1: u64,
    l2: u64,
    m2: u64,
    n: u64,
    k: u64,
    opts: &EvalOptions,
) -> Result<Evaluation, Error> {
    check_union(1, m1, l2, m2)?;
    check_modulus(n)?;
    check_size(k)?;
    if n == 1 {
        return Ok(direct_sized_subsets(m1 + (m2 - l2 + 1), k, opts));
    }
    mu_divisor_sum(
        n,
        Weight::Binomial(k),
        |d| (m1 / d) as i128 + span(l2, m2, d),
        opts,
    )
}

/// `psi(l, m, n)`: subsets of `[l, m]` that contain `l` and are relatively
/// prime to `n`. The divisor index is `d | gcd(l, n)`.
pub fn psi_anchored(l: u64, m: u64, n: u64) -> Result<Count, Error> {
    psi_anchored_eval(l, m, n, &EvalOptions::default()).map(Evaluation::into_count)
}

pub fn psi_anchored_eval(l: u64, m: u64, n: u64, opts: &EvalOptions) -> Result<Evaluation, Error> {
    check_interval(l, m)?;
    check_modulus(n)?;
    mu_divisor_sum(gcd(l, n), Weight::Pow2, |d| anchored_span(l, m, d), opts)
}

/// `psi_k(l, m, n)`: as [`psi_anchored`] with `|X| = k`.
///
/// The binomial chooses the `k - 1` elements besides the anchor:
/// `sum over d | gcd(l, n) of mu(d) * C(m/d - l/d, k - 1)`.
pub fn psi_k_anchored(l: u64, m: u64, n: u64, k: u64) -> Result<Count, Error> {
    psi_k_anchored_eval(l, m, n, k, &EvalOptions::default()).map(Evaluation::into_count)
}

pub fn psi_k_anchored_eval(
    l: u64,
    m: u64,
    n: u64,
    k: u64,
    opts: &EvalOptions,
) -> Result<Evaluation, Error> {
    check_interval(l, m)?;
    check_modulus(n)?;
    check_size(k)?;
    mu_divisor_sum(
        gcd(l, n),
        Weight::Binomial(k - 1),
        |d| anchored_span(l, m, d),
        opts,
    )
}

/// `psi2(l1, m1, l2, m2, n)`: subsets of the union containing both lower
/// endpoints, relatively prime to `n`. Divisor index `d | gcd(l1, l2, n)`.
pub fn psi2_anchored(l1: u64, m1: u64, l2: u64, m2: u64, n: u64) -> Result<Count, Error> {
    psi2_anchored_eval(l1, m1, l2, m2, n, &EvalOptions::default()).map(Evaluation::into_count)
}

pub fn psi2_anchored_eval(
    l1: u64,
    m1: u64,
    l2: u64,
    m2: u64,
    n: u64,
    opts: &EvalOptions,
) -> Result<Evaluation, Error> {
    check_union(l1, m1, l2, m2)?;
    check_modulus(n)?;
    mu_divisor_sum(
        gcd(l1, gcd(l2, n)),
        Weight::Pow2,
        |d| anchored_span(l1, m1, d) + anchored_span(l2, m2, d),
        opts,
    )
}

/// `psi2_k`: as [`psi2_anchored`] with `|X| = k`, `k >= 2`. The binomial
/// chooses the `k - 2` elements besides the two anchors.
pub fn psi2_k_anchored(l1: u64, m1: u64, l2: u64, m2: u64, n: u64, k: u64) -> Result<Count, Error> {
    psi2_k_anchored_eval(l1, m1, l2, m2, n, k, &EvalOptions::default())
        .map(Evaluation::into_count)
}

pub fn psi2_k_anchored_eval(
    l1: u64,
    m1: u64,
    l2: u64,
    m2: u64,
    n: u64,
    k: u64,
    opts: &EvalOptions,
) -> Result<Evaluation, Error> {
    check_union(l1, m1, l2, m2)?;
    check_modulus(n)?;
    if k < 2 {
        return Err(Error::SizeTooSmall { k, min: 2 });
    }
    mu_divisor_sum(
        gcd(l1, gcd(l2, n)),
        Weight::Binomial(k - 2),
        |d| anchored_span(l1, m1, d) + anchored_span(l2, m2, d),
        opts,
    )
}

/// Count all nonempty relatively prime subsets of a normalized domain.
pub fn phi(domain: &UnionDomain, n: u64) -> Result<Count, Error> {
    match domain.second() {
        None => phi_interval(domain.first.l, domain.first.m, n),
        Some(s) => phi_union(domain.first.l, domain.first.m, s.l, s.m, n),
    }
}

/// Count size-`k` relatively prime subsets of a normalized domain.
pub fn phi_k(domain: &UnionDomain, n: u64, k: u64) -> Result<Count, Error> {
    match domain.second() {
        None => phi_k_interval(domain.first.l, domain.first.m, n, k),
        Some(s) => phi_k_union(domain.first.l, domain.first.m, s.l, s.m, n, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn interval_construction() {
        assert!(Interval::new(3, 3).is_ok());
        assert_eq!(Interval::new(0, 4), Err(Error::ZeroArgument));
        assert_eq!(Interval::new(5, 4), Err(Error::EmptyInterval { l: 5, m: 4 }));
        let iv = Interval::new(3, 7).unwrap();
        assert_eq!(iv.len(), 5);
        assert!(iv.contains(3) && iv.contains(7) && !iv.contains(8));
    }

    #[test]
    fn union_domain_normalizes() {
        let a = Interval::new(2, 5).unwrap();
        let b = Interval::new(8, 9).unwrap();
        let two = UnionDomain::union(a, b);
        assert_eq!(two.first(), a);
        assert_eq!(two.second(), Some(b));
        assert_eq!(two.len(), 6);
        assert_eq!(two.elements().collect::<Vec<_>>(), vec![2, 3, 4, 5, 8, 9]);

        // Order of arguments does not matter.
        assert_eq!(UnionDomain::union(b, a), two);

        // Adjacent intervals merge.
        let c = Interval::new(6, 9).unwrap();
        let merged = UnionDomain::union(a, c);
        assert!(merged.is_single());
        assert_eq!(merged.first(), Interval::new(2, 9).unwrap());

        // Overlapping intervals merge.
        let d = Interval::new(4, 6).unwrap();
        let merged = UnionDomain::union(a, d);
        assert_eq!(merged.first(), Interval::new(2, 6).unwrap());
        assert!(merged.second().is_none());

        // Contained intervals collapse.
        let e = Interval::new(3, 4).unwrap();
        let merged = UnionDomain::union(a, e);
        assert_eq!(merged.first(), a);
        assert!(merged.is_single());
    }

    #[test]
    fn phi_interval_examples() {
        assert_eq!(phi_interval(1, 2, 2).unwrap(), count(2));
        assert_eq!(phi_interval(3, 5, 1).unwrap(), count(7));
        assert_eq!(phi_interval(1, 5, 5).unwrap(), count(30));
        assert_eq!(phi_interval(5, 3, 7), Err(Error::EmptyInterval { l: 5, m: 3 }));
        assert_eq!(phi_interval(1, 4, 0), Err(Error::ZeroArgument));
    }

    #[test]
    fn phi_k_interval_examples() {
        assert_eq!(phi_k_interval(1, 4, 4, 2).unwrap(), count(5));
        assert_eq!(phi_k_interval(1, 4, 4, 7).unwrap(), count(0));
        assert_eq!(phi_k_interval(2, 2, 3, 1).unwrap(), count(1));
        assert_eq!(phi_k_interval(1, 4, 4, 0), Err(Error::ZeroArgument));
    }

    #[test]
    fn phi_union_examples() {
        assert_eq!(phi_union(2, 3, 5, 6, 6).unwrap(), count(10));
        assert_eq!(phi_union(1, 1, 3, 3, 2).unwrap(), count(3));
        assert_eq!(
            phi_union(2, 5, 4, 6, 3),
            Err(Error::UnorderedIntervals { m1: 5, l2: 4 })
        );
        assert_eq!(phi_union(1, 2, 4, 5, 0), Err(Error::ZeroArgument));
    }

    #[test]
    fn phi_union_trace_terms() {
        let ev = phi_union_eval(2, 3, 5, 6, 6, &EvalOptions::traced()).unwrap();
        assert_eq!(ev.value, BigInt::from(10));
        let rendered: Vec<(u64, i32, i64)> = ev
            .terms
            .iter()
            .map(|t| {
                let as_i64: i64 = (&t.term).try_into().unwrap();
                (t.d, t.mu, as_i64)
            })
            .collect();
        assert_eq!(
            rendered,
            vec![(1, 1, 16), (2, -1, -4), (3, -1, -4), (6, 1, 2)]
        );
        let sum: BigInt = ev.terms.iter().map(|t| t.term.clone()).sum();
        assert_eq!(sum, ev.value);
    }

    #[test]
    fn trace_on_direct_path_sums_to_value() {
        let ev = phi_interval_eval(3, 5, 1, &EvalOptions::traced()).unwrap();
        assert_eq!(ev.value, BigInt::from(7));
        assert_eq!(ev.terms.len(), 1);
        assert_eq!(ev.terms[0].d, 1);
        assert_eq!(ev.terms[0].term, BigInt::from(7));
    }

    #[test]
    fn phi_k_union_examples() {
        assert_eq!(phi_k_union(2, 3, 5, 6, 6, 1).unwrap(), count(1));
        assert_eq!(phi_k_union(2, 3, 5, 6, 6, 4).unwrap(), count(1));
        let sum: Count = (1..=4)
            .map(|k| phi_k_union(2, 3, 5, 6, 6, k).unwrap())
            .sum();
        assert_eq!(sum, phi_union(2, 3, 5, 6, 6).unwrap());
    }

    #[test]
    fn prefix_union_examples() {
        assert_eq!(
            phi_prefix_union(3, 5, 6, 6).unwrap(),
            phi_union(1, 3, 5, 6, 6).unwrap()
        );
        assert_eq!(phi_prefix_union(1, 3, 3, 2).unwrap(), count(3));
        // Pairs from {1,2} ∪ {4,5} coprime to 3: every pair qualifies.
        assert_eq!(phi_k_prefix_union(2, 4, 5, 3, 2).unwrap(), count(6));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_anchored(2, 4, 2).unwrap(), count(2));
        assert_eq!(psi_anchored(1, 4, 1).unwrap(), count(8));
        // Size-k anchored counts choose k - 1 free elements.
        assert_eq!(psi_k_anchored(2, 4, 2, 2).unwrap(), count(1));
        assert_eq!(psi_k_anchored(2, 5, 2, 2).unwrap(), count(2));
        assert_eq!(psi_k_anchored(2, 4, 2, 0), Err(Error::ZeroArgument));
    }

    #[test]
    fn psi2_examples() {
        assert_eq!(psi2_anchored(2, 3, 4, 5, 6).unwrap(), count(3));
        assert_eq!(psi2_k_anchored(2, 3, 4, 5, 6, 2).unwrap(), count(0));
        assert_eq!(psi2_anchored(1, 1, 2, 2, 1).unwrap(), count(1));
        assert_eq!(
            psi2_k_anchored(2, 3, 4, 5, 6, 1),
            Err(Error::SizeTooSmall { k: 1, min: 2 })
        );
    }

    #[test]
    fn psi2_trace_terms() {
        let ev = psi2_anchored_eval(2, 3, 4, 5, 6, &EvalOptions::traced()).unwrap();
        assert_eq!(ev.value, BigInt::from(3));
        let rendered: Vec<(u64, i32, i64)> = ev
            .terms
            .iter()
            .map(|t| ((t.d), t.mu, (&t.term).try_into().unwrap()))
            .collect();
        assert_eq!(rendered, vec![(1, 1, 4), (2, -1, -1)]);
    }

    #[test]
    fn dispatch_merges_touching_intervals() {
        // [2,4] ∪ [5,6] is really [2,6]; the union constructor merges and the
        // dispatcher must answer with the single-interval evaluator.
        let merged = UnionDomain::union(
            Interval::new(2, 4).unwrap(),
            Interval::new(5, 6).unwrap(),
        );
        assert!(merged.is_single());
        assert_eq!(phi(&merged, 6).unwrap(), phi_interval(2, 6, 6).unwrap());
        // The two-interval closed form on the adjacent split agrees too.
        assert_eq!(phi_union(2, 4, 5, 6, 6).unwrap(), phi_interval(2, 6, 6).unwrap());
    }

    #[test]
    fn query_dispatch() {
        let domain = UnionDomain::union(
            Interval::new(2, 3).unwrap(),
            Interval::new(5, 6).unwrap(),
        );
        let q = PhiQuery { domain: domain.clone(), n: 6, k: None };
        assert_eq!(q.evaluate().unwrap(), count(10));
        let q = PhiQuery { domain, n: 6, k: Some(1) };
        assert_eq!(q.evaluate().unwrap(), count(1));
        let q = PhiQuery {
            domain: UnionDomain::single(Interval::new(1, 4).unwrap()),
            n: 4,
            k: Some(2),
        };
        assert_eq!(q.evaluate().unwrap(), count(5));
    }

    #[test]
    fn flip_mu_corrupts_results() {
        let opts = EvalOptions { trace: false, flip_mu_sign: true };
        let honest = phi_union(2, 3, 5, 6, 6).unwrap();
        let faulted = phi_union_eval(2, 3, 5, 6, 6, &opts).unwrap();
        assert_ne!(BigInt::from(honest), faulted.value);
    }

    #[test]
    fn big_interval_counts() {
        // phi([1, p], p) = 2^p - 2 for prime p: only divisors 1 and p.
        let v = phi_interval(1, 257, 257).unwrap();
        let expected = big_pow2(257) - Count::from(2u32);
        assert_eq!(v, expected);
        assert_eq!(v.to_string().len(), 78);
    }
}
