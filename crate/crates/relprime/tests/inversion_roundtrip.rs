//! Round-trip checks for the multivariable Mobius transforms and the
//! reconstruction of the two-anchor counting formula through them.

use num_bigint::BigInt;

use relprime::arith::big_pow2;
use relprime::inversion::{forward_transform, inverse_transform, MultiArgFunction};
use relprime::oracle::{count_subsets, SubsetPredicate};
use relprime::phi::{psi2_anchored, Interval, UnionDomain};

/// Deterministic value in [-100, 100] mixed from a seed and a tuple; stands
/// in for an arbitrary integer-valued function.
fn mixed(seed: u64, args: &[u64]) -> i64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for &a in args {
        h ^= a.wrapping_add(0xbf58_476d_1ce4_e5b9).wrapping_mul(h | 1);
        h = h.rotate_left(27).wrapping_mul(0x94d0_49bb_1331_11eb);
    }
    h ^= h >> 31;
    (h % 201) as i64 - 100
}

fn seeded(exact: usize, floored: usize, seed: u64) -> MultiArgFunction<'static> {
    MultiArgFunction::new(exact, floored, move |args| BigInt::from(mixed(seed, args))).unwrap()
}

/// Evaluation points with each coordinate at most `bound`: the full grid for
/// one or two variables, a deterministic slice of it for more.
fn grid_points(arity: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut points = Vec::new();
    let mut current = vec![1u64; arity];
    loop {
        points.push(current.clone());
        let mut i = 0;
        loop {
            current[i] += if arity <= 2 { 1 } else { 3 };
            if current[i] <= bound {
                break;
            }
            current[i] = 1;
            i += 1;
            if i == arity {
                return points;
            }
        }
    }
}

#[test]
fn inverse_of_forward_recovers_the_function() {
    for &(a, b) in &[(1, 0), (1, 1), (2, 0), (2, 1), (2, 2)] {
        for seed in 0..6u64 {
            let f = seeded(a, b, seed).memoized();
            let forward = MultiArgFunction::new(a, b, |args: &[u64]| {
                forward_transform(&f, args).unwrap()
            })
            .unwrap()
            .memoized();
            for point in grid_points(a + b, 16) {
                assert_eq!(
                    inverse_transform(&forward, &point).unwrap(),
                    f.eval(&point).unwrap(),
                    "a={a} b={b} seed={seed} point={point:?}"
                );
            }
        }
    }
}

#[test]
fn forward_of_inverse_recovers_the_function() {
    for &(a, b) in &[(1, 0), (1, 1), (2, 0), (2, 1), (2, 2)] {
        for seed in 6..12u64 {
            let g = seeded(a, b, seed).memoized();
            let inverse = MultiArgFunction::new(a, b, |args: &[u64]| {
                inverse_transform(&g, args).unwrap()
            })
            .unwrap()
            .memoized();
            for point in grid_points(a + b, 16) {
                assert_eq!(
                    forward_transform(&inverse, &point).unwrap(),
                    g.eval(&point).unwrap(),
                    "a={a} b={b} seed={seed} point={point:?}"
                );
            }
        }
    }
}

#[test]
fn two_anchor_count_is_the_inverse_transform_of_a_power() {
    // The subsets of [l1, m1] ∪ [l2, m2] containing both anchors number
    // 2^(m1 + m2 - l1 - l2), and grouping them by gcd shows that power is
    // the forward transform of the two-anchor coprime count in the
    // variables (l1, l2, n | m1, m2). Inverting must therefore reproduce
    // the closed form and the enumeration both.
    let power = MultiArgFunction::new(3, 2, |args: &[u64]| {
        let (l1, l2, m1, m2) = (args[0] as i128, args[1] as i128, args[3] as i128, args[4] as i128);
        let e = m1 + m2 - l1 - l2;
        if e < 0 {
            BigInt::from(0)
        } else {
            BigInt::from(big_pow2(e as u64))
        }
    })
    .unwrap();

    for l1 in 1u64..=4 {
        for m1 in l1..=5 {
            for l2 in m1 + 1..=7 {
                for m2 in l2..=8 {
                    for n in 1u64..=12 {
                        let reconstructed =
                            inverse_transform(&power, &[l1, l2, n, m1, m2]).unwrap();
                        let closed = BigInt::from(psi2_anchored(l1, m1, l2, m2, n).unwrap());
                        assert_eq!(reconstructed, closed, "({l1},{m1},{l2},{m2},{n})");

                        let domain = UnionDomain::union(
                            Interval::new(l1, m1).unwrap(),
                            Interval::new(l2, m2).unwrap(),
                        );
                        let pred = SubsetPredicate::coprime_to(n)
                            .unwrap()
                            .require(l1)
                            .unwrap()
                            .require(l2)
                            .unwrap();
                        let enumerated = BigInt::from(count_subsets(&domain, &pred).unwrap());
                        assert_eq!(reconstructed, enumerated, "({l1},{m1},{l2},{m2},{n})");
                    }
                }
            }
        }
    }
}

#[test]
fn forward_applied_to_anchored_counts_gives_the_plain_power() {
    // The other direction of the same grouping: summing the anchored counts
    // over the divisor-scaled shapes recovers 2^(m1 + m2 - l1 - l2).
    let anchored = MultiArgFunction::new(3, 2, |args: &[u64]| {
        let (l1, l2, n, m1, m2) = (args[0], args[1], args[2], args[3], args[4]);
        if m1 < l1 || m2 < l2 || m1 >= l2 {
            return BigInt::from(0);
        }
        BigInt::from(psi2_anchored(l1, m1, l2, m2, n).unwrap())
    })
    .unwrap();

    for l1 in 1u64..=4 {
        for m1 in l1..=5 {
            for l2 in (m1 + 1)..=7 {
                for m2 in l2..=8 {
                    for n in 1u64..=12 {
                        let split = forward_transform(&anchored, &[l1, l2, n, m1, m2]).unwrap();
                        let power = BigInt::from(big_pow2(m1 + m2 - l1 - l2));
                        assert_eq!(split, power, "({l1},{m1},{l2},{m2},{n})");
                    }
                }
            }
        }
    }
}
