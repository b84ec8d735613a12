//! Ground-truth subset counting by exhaustive enumeration.
//!
//! This module is the trust anchor for the whole crate: it implements the
//! counting definitions literally, walking every nonempty subset of the
//! domain with a binary counter and testing the predicate on each one. It is
//! deliberately exponential and deliberately boring; the closed forms in
//! [`crate::phi`] are validated against it at small scale.

use num_integer::gcd;

use alloc::vec::Vec;

use crate::phi::UnionDomain;
use crate::{Count, Error};

/// Default limit on the number of domain elements (about 4M subsets).
pub const DEFAULT_ENUMERATION_CAP: u64 = 22;

/// Membership test applied to each enumerated subset `X`:
/// `required ⊆ X`, `|X| = exact_size` when present, and `gcd(X ∪ {n}) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetPredicate {
    required: Vec<u64>,
    exact_size: Option<u64>,
    modulus: u64,
}

impl SubsetPredicate {
    /// Predicate selecting subsets relatively prime to `n`, any size.
    pub fn coprime_to(n: u64) -> Result<SubsetPredicate, Error> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        Ok(SubsetPredicate { required: Vec::new(), exact_size: None, modulus: n })
    }

    /// Additionally require `element` to be in every counted subset.
    pub fn require(mut self, element: u64) -> Result<SubsetPredicate, Error> {
        if element == 0 {
            return Err(Error::ZeroArgument);
        }
        if let Err(pos) = self.required.binary_search(&element) {
            self.required.insert(pos, element);
        }
        Ok(self)
    }

    /// Additionally require `|X| = k`.
    pub fn with_exact_size(mut self, k: u64) -> Result<SubsetPredicate, Error> {
        if k == 0 {
            return Err(Error::ZeroArgument);
        }
        self.exact_size = Some(k);
        Ok(self)
    }

    pub fn required(&self) -> &[u64] {
        &self.required
    }

    pub fn exact_size(&self) -> Option<u64> {
        self.exact_size
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// Count the nonempty subsets of `domain` satisfying `pred`, enumerating
/// all of them. Domains above [`DEFAULT_ENUMERATION_CAP`] elements are
/// rejected; use [`count_subsets_with_cap`] to choose a different cap.
pub fn count_subsets(domain: &UnionDomain, pred: &SubsetPredicate) -> Result<Count, Error> {
    count_subsets_with_cap(domain, pred, DEFAULT_ENUMERATION_CAP)
}

/// As [`count_subsets`] with an explicit element cap. Caps beyond 62 are
/// meaningless here: the subset counter is a `u64` bitmask and the scan of
/// `2^size` subsets would never finish anyway.
pub fn count_subsets_with_cap(
    domain: &UnionDomain,
    pred: &SubsetPredicate,
    cap: u64,
) -> Result<Count, Error> {
    let size = domain.len();
    let cap = cap.min(62);
    if size > cap {
        return Err(Error::DomainTooLarge { size, cap });
    }
    let elements: Vec<u64> = domain.elements().collect();

    let mut required_mask = 0u64;
    for &r in pred.required() {
        match elements.binary_search(&r) {
            Ok(i) => required_mask |= 1 << i,
            Err(_) => return Err(Error::RequiredElementOutsideDomain { value: r }),
        }
    }
    if let Some(k) = pred.exact_size() {
        let required = pred.required().len() as u64;
        if k < required {
            return Err(Error::SizeBelowRequired { size: k, required });
        }
    }

    let n = pred.modulus();
    let mut qualifying = 0u64;
    for mask in 1u64..(1u64 << size) {
        if mask & required_mask != required_mask {
            continue;
        }
        if let Some(k) = pred.exact_size() {
            if mask.count_ones() as u64 != k {
                continue;
            }
        }
        let mut g = n;
        let mut rest = mask;
        while rest != 0 && g != 1 {
            let i = rest.trailing_zeros() as usize;
            g = gcd(g, elements[i]);
            rest &= rest - 1;
        }
        if g == 1 {
            qualifying += 1;
        }
    }
    Ok(Count::from(qualifying))
}
