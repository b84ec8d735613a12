//! Mobius inversion for arithmetical functions of several variables.
//!
//! A function here takes `a` *exact* variables followed by `b` *floored*
//! variables, all positive integers. The forward transform of `F` is
//!
//! ```text
//! G(m1..ma, n1..nb) = sum over d | gcd(m1..ma) of
//!     F(m1/d, .., ma/d, floor(n1/d), .., floor(nb/d))
//! ```
//!
//! and the inverse transform carries a `mu(d)` weight on each term. The two
//! are mutually inverse: `G` is the forward transform of `F` exactly when
//! `F` is the inverse transform of `G`. The divisor index runs over the gcd
//! of the exact variables only, so at least one exact variable is required.
//!
//! Values are exact [`BigInt`]s; nothing here is approximate.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_bigint::BigInt;
use num_integer::gcd;
use num_traits::Zero;

use crate::arith::factorize;
use crate::Error;

/// An arithmetical function of `exact + floored` integer variables.
///
/// The wrapped evaluator must be total and deterministic on tuples whose
/// exact coordinates are positive (floored coordinates may scale down to
/// zero inside a transform). Memoization (see
/// [`MultiArgFunction::memoized`]) uses a single-threaded interior cache;
/// share functions across workers by giving each worker its own instance.
type EvalFn<'f> = Box<dyn Fn(&[u64]) -> BigInt + 'f>;

pub struct MultiArgFunction<'f> {
    exact: usize,
    floored: usize,
    eval: EvalFn<'f>,
}

impl core::fmt::Debug for MultiArgFunction<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("MultiArgFunction")
            .field("exact", &self.exact)
            .field("floored", &self.floored)
            .finish_non_exhaustive()
    }
}

impl<'f> MultiArgFunction<'f> {
    /// Wrap an evaluator with `exact` exactly-divided leading variables and
    /// `floored` floor-divided trailing ones. At least one variable in total
    /// is required.
    pub fn new(
        exact: usize,
        floored: usize,
        eval: impl Fn(&[u64]) -> BigInt + 'f,
    ) -> Result<MultiArgFunction<'f>, Error> {
        if exact + floored == 0 {
            return Err(Error::ArityMismatch { expected: 1, found: 0 });
        }
        Ok(MultiArgFunction { exact, floored, eval: Box::new(eval) })
    }

    pub fn exact_vars(&self) -> usize {
        self.exact
    }

    pub fn floored_vars(&self) -> usize {
        self.floored
    }

    pub fn arity(&self) -> usize {
        self.exact + self.floored
    }

    /// Evaluate at an argument tuple of the declared arity.
    ///
    /// Exact coordinates must be positive. Floored coordinates may be zero:
    /// the transforms scale their arguments by divisors larger than a
    /// floored coordinate, and the inversion identity holds no matter what
    /// the function returns at those points.
    pub fn eval(&self, args: &[u64]) -> Result<BigInt, Error> {
        if args.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: args.len() });
        }
        if args[..self.exact].contains(&0) {
            return Err(Error::ZeroArgument);
        }
        Ok((self.eval)(args))
    }

    /// Cache evaluations keyed by the full argument tuple.
    ///
    /// The transforms evaluate their operand on nested divisor-scaled grids,
    /// so round-trip checks hit the same tuples many times over.
    pub fn memoized(self) -> MultiArgFunction<'f> {
        let MultiArgFunction { exact, floored, eval } = self;
        let cache: RefCell<BTreeMap<Vec<u64>, BigInt>> = RefCell::new(BTreeMap::new());
        MultiArgFunction {
            exact,
            floored,
            eval: Box::new(move |args: &[u64]| {
                if let Some(hit) = cache.borrow().get(args) {
                    return hit.clone();
                }
                let value = eval(args);
                cache.borrow_mut().insert(args.to_vec(), value.clone());
                value
            }),
        }
    }
}

/// `sum over d | gcd(exact args) of f(args scaled by d)`.
pub fn forward_transform(f: &MultiArgFunction<'_>, args: &[u64]) -> Result<BigInt, Error> {
    let divisor_base = transform_base(f, args)?;
    let mut sum = BigInt::zero();
    let mut scaled = vec![0u64; args.len()];
    for d in factorize(divisor_base)?.divisors() {
        scale_args(args, d, &mut scaled);
        sum += f.eval(&scaled)?;
    }
    Ok(sum)
}

/// `sum over d | gcd(exact args) of mu(d) * g(args scaled by d)`.
///
/// Divisors with `mu(d) = 0` are skipped; their terms are zero regardless
/// of `g`.
pub fn inverse_transform(g: &MultiArgFunction<'_>, args: &[u64]) -> Result<BigInt, Error> {
    let divisor_base = transform_base(g, args)?;
    let mut sum = BigInt::zero();
    let mut scaled = vec![0u64; args.len()];
    for (d, mu) in factorize(divisor_base)?.squarefree_divisors_with_mu() {
        scale_args(args, d, &mut scaled);
        let term = g.eval(&scaled)?;
        sum += if mu < 0 { -term } else { term };
    }
    Ok(sum)
}

// Like eval, the transforms demand positive exact coordinates but tolerate
// zero in floored ones, so they can be composed with each other.
fn transform_base(f: &MultiArgFunction<'_>, args: &[u64]) -> Result<u64, Error> {
    if f.exact_vars() == 0 {
        return Err(Error::NoExactVariables);
    }
    if args.len() != f.arity() {
        return Err(Error::ArityMismatch { expected: f.arity(), found: args.len() });
    }
    if args[..f.exact_vars()].contains(&0) {
        return Err(Error::ZeroArgument);
    }
    Ok(args[..f.exact_vars()].iter().fold(0u64, |g, &v| gcd(g, v)))
}

// d divides every exact argument, so the leading divisions are exact; the
// trailing ones are the intended floors.
fn scale_args(args: &[u64], d: u64, out: &mut [u64]) {
    for (o, &v) in out.iter_mut().zip(args) {
        *o = v / d;
    }
}
