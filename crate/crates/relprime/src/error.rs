use core::fmt;

/// Error type shared by every fallible operation in the crate.
///
/// All functions work over positive integers only; zero is rejected rather
/// than given a meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// An argument that must be a positive integer was zero.
    ZeroArgument,
    /// `gcd_set` was called on an empty slice.
    EmptySet,
    /// Interval endpoints with `l > m`.
    EmptyInterval { l: u64, m: u64 },
    /// Two-interval arguments that are not ordered as `m1 < l2`.
    UnorderedIntervals { m1: u64, l2: u64 },
    /// A subset-size argument below the smallest meaningful value
    /// (for example `k < 2` for the two-anchor counters).
    SizeTooSmall { k: u64, min: u64 },
    /// The modulus must exceed 1 for the combinatorial identity checks.
    ModulusNotAboveOne { n: u64 },
    /// The enumeration domain has more elements than the oracle cap allows.
    DomainTooLarge { size: u64, cap: u64 },
    /// A required element of a subset predicate lies outside the domain.
    RequiredElementOutsideDomain { value: u64 },
    /// An exact-size constraint smaller than the number of required elements.
    SizeBelowRequired { size: u64, required: u64 },
    /// A value beyond the sieve's factorization limit.
    OutsideSieve { n: u64, limit: u64 },
    /// A multivariable transform needs at least one exactly divided variable.
    NoExactVariables,
    /// An argument tuple whose length does not match the declared arity.
    ArityMismatch { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::ZeroArgument => write!(f, "argument must be a positive integer"),
            Error::EmptySet => write!(f, "gcd of an empty set is undefined"),
            Error::EmptyInterval { l, m } => {
                write!(f, "interval [{l}, {m}] is empty (need l <= m)")
            }
            Error::UnorderedIntervals { m1, l2 } => {
                write!(f, "intervals must satisfy m1 < l2 (got m1 = {m1}, l2 = {l2})")
            }
            Error::SizeTooSmall { k, min } => {
                write!(f, "subset size {k} is below the minimum {min}")
            }
            Error::ModulusNotAboveOne { n } => {
                write!(f, "identity requires a modulus above 1 (got {n})")
            }
            Error::DomainTooLarge { size, cap } => {
                write!(f, "domain of {size} elements exceeds the enumeration cap {cap}")
            }
            Error::RequiredElementOutsideDomain { value } => {
                write!(f, "required element {value} is not in the domain")
            }
            Error::SizeBelowRequired { size, required } => {
                write!(
                    f,
                    "exact size {size} is smaller than the {required} required elements"
                )
            }
            Error::OutsideSieve { n, limit } => {
                write!(f, "{n} is beyond the sieve limit {limit}")
            }
            Error::NoExactVariables => {
                write!(f, "transform needs at least one exactly divided variable")
            }
            Error::ArityMismatch { expected, found } => {
                write!(f, "expected {expected} arguments, found {found}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
