//! Factorial, binomial and multinomial primitives.
//!
//! Everything is computed in exact integer arithmetic; there is no floating
//! point and no modular reduction anywhere in this module.

use crate::error::Error;
use crate::scalar::{scalar_from_u64, ExactScalar};

/// `n!` as an exact integer.
pub fn factorial<T: ExactScalar>(n: u64) -> T {
    let mut acc = T::one();
    for i in 2..=n {
        acc *= scalar_from_u64::<T>(i);
    }
    acc
}

/// Binomial coefficient `C(n, s)`.
///
/// Out-of-range arguments (`s < 0` or `s > n`) yield 0 so that alternating
/// sums can run over relaxed bounds without special cases.
///
/// Computed by the multiplicative running product; the division at each step
/// is exact, so intermediates never exceed the final value times `n`.
pub fn binomial<T: ExactScalar>(n: u64, s: i64) -> T {
    if s < 0 {
        return T::zero();
    }
    let s = s as u64;
    if s > n {
        return T::zero();
    }
    let s = s.min(n - s); // C(n, s) = C(n, n - s)
    let mut acc = T::one();
    for i in 0..s {
        acc = acc * scalar_from_u64::<T>(n - i) / scalar_from_u64::<T>(i + 1);
    }
    acc
}

/// Multinomial coefficient `k! / (t_1! t_2! ... t_n!)`.
///
/// The parts must be nonnegative and sum to `k`. Evaluated as a product of
/// binomials, `C(k, t_1) C(k - t_1, t_2) ...`, which keeps every
/// intermediate an exact integer no larger than the result.
pub fn multinomial<T: ExactScalar>(k: u64, parts: &[u64]) -> Result<T, Error> {
    let total: u64 = parts.iter().sum();
    if total != k {
        return Err(Error::Domain(format!(
            "multinomial parts sum to {total}, expected {k}"
        )));
    }
    let mut acc = T::one();
    let mut remaining = k;
    for &t in parts {
        acc *= binomial::<T>(remaining, t as i64);
        remaining -= t;
    }
    Ok(acc)
}

/// Exact `base^exp` with the convention `0^0 = 1` (empty product).
pub fn int_pow<T: ExactScalar>(base: T, exp: u64) -> T {
    let mut result = T::one();
    let mut base = base;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result *= base.clone();
        }
        exp >>= 1;
        if exp > 0 {
            base = base.clone() * base;
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactInt;

    fn big(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial::<ExactInt>(0), big(1));
        assert_eq!(factorial::<ExactInt>(1), big(1));
        assert_eq!(factorial::<ExactInt>(6), big(720));
        assert_eq!(factorial::<ExactInt>(20), big(2432902008176640000));
    }

    #[test]
    fn factorial_agrees_with_recursive_definition() {
        // n! = n * (n-1)! checked independently of the iterative product.
        let mut expect = ExactInt::from(1);
        for n in 1..=30u64 {
            expect *= ExactInt::from(n);
            assert_eq!(factorial::<ExactInt>(n), expect);
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial::<ExactInt>(5, 0), big(1));
        assert_eq!(binomial::<ExactInt>(6, 2), big(15));
        assert_eq!(binomial::<ExactInt>(4, 7), big(0));
        assert_eq!(binomial::<ExactInt>(4, -1), big(0));
        assert_eq!(binomial::<ExactInt>(0, 0), big(1));
    }

    #[test]
    fn binomial_matches_subset_enumeration() {
        // Count s-subsets of an n-set exhaustively via bitmasks.
        for n in 0..=12u64 {
            for s in 0..=n {
                let count = (0u32..1 << n)
                    .filter(|m| m.count_ones() as u64 == s)
                    .count() as u64;
                assert_eq!(binomial::<ExactInt>(n, s as i64), ExactInt::from(count));
            }
        }
    }

    #[test]
    fn pascal_recurrence_and_symmetry() {
        for n in 1..=30u64 {
            for s in 1..=n {
                let lhs = binomial::<ExactInt>(n, s as i64);
                let rhs = binomial::<ExactInt>(n - 1, s as i64 - 1) + binomial::<ExactInt>(n - 1, s as i64);
                assert_eq!(lhs, rhs, "Pascal fails at n={n} s={s}");
                assert_eq!(lhs, binomial::<ExactInt>(n, (n - s) as i64));
            }
        }
    }

    #[test]
    fn binomial_row_sums() {
        for n in 0..=30u64 {
            let sum: ExactInt = (0..=n).map(|s| binomial::<ExactInt>(n, s as i64)).sum();
            assert_eq!(sum, int_pow(ExactInt::from(2), n));
        }
    }

    #[test]
    fn multinomial_values() {
        // Arrangements of {a, b, b}: abb, bab, bba.
        assert_eq!(multinomial::<ExactInt>(3, &[1, 2]).unwrap(), big(3));
        // Arrangements of (1,1,2,2,3,3).
        assert_eq!(multinomial::<ExactInt>(6, &[2, 2, 2]).unwrap(), big(90));
        assert_eq!(multinomial::<ExactInt>(7, &[7]).unwrap(), big(1));
        assert_eq!(multinomial::<ExactInt>(0, &[]).unwrap(), big(1));
    }

    #[test]
    fn multinomial_matches_arrangement_enumeration() {
        // Exhaustively count distinct arrangements of the multiset
        // {0^t0, 1^t1, ...} by permuting and deduplicating.
        fn arrangements(parts: &[u64]) -> u64 {
            let mut symbols = Vec::new();
            for (sym, &t) in parts.iter().enumerate() {
                for _ in 0..t {
                    symbols.push(sym);
                }
            }
            let mut seen = std::collections::HashSet::new();
            permute(&mut symbols, 0, &mut seen);
            seen.len() as u64
        }
        fn permute(v: &mut Vec<usize>, i: usize, seen: &mut std::collections::HashSet<Vec<usize>>) {
            if i == v.len() {
                seen.insert(v.clone());
                return;
            }
            for j in i..v.len() {
                v.swap(i, j);
                permute(v, i + 1, seen);
                v.swap(i, j);
            }
        }
        for parts in [&[1u64, 2][..], &[2, 2, 2], &[1, 1, 1], &[3, 1], &[2, 3]] {
            let k: u64 = parts.iter().sum();
            assert_eq!(
                multinomial::<ExactInt>(k, parts).unwrap(),
                ExactInt::from(arrangements(parts)),
                "parts {parts:?}"
            );
        }
    }

    #[test]
    fn multinomial_rejects_bad_sum() {
        assert!(multinomial::<ExactInt>(5, &[1, 2]).is_err());
        assert!(multinomial::<ExactInt>(2, &[1, 1, 1]).is_err());
    }

    #[test]
    fn multinomial_all_ones_is_factorial() {
        for k in 0..=8u64 {
            let ones = vec![1u64; k as usize];
            assert_eq!(
                multinomial::<ExactInt>(k, &ones).unwrap(),
                factorial::<ExactInt>(k)
            );
        }
    }

    #[test]
    fn int_pow_values() {
        assert_eq!(int_pow(big(15), 3), big(3375));
        assert_eq!(int_pow(big(7), 0), big(1));
        assert_eq!(int_pow(big(0), 0), big(1));
        assert_eq!(int_pow(big(0), 5), big(0));
        assert_eq!(int_pow(big(-2), 3), big(-8));
    }

    #[test]
    fn int_pow_matches_repeated_multiplication() {
        for base in -4i64..=4 {
            let mut expect = ExactInt::from(1);
            for exp in 0..=12u64 {
                assert_eq!(int_pow(big(base), exp), expect);
                expect *= big(base);
            }
        }
    }

    #[test]
    fn generic_instantiations_agree() {
        // The same formulas on i128 and on the arbitrary-precision scalar
        // must coincide wherever i128 does not overflow.
        for n in 0..=20u64 {
            assert_eq!(
                factorial::<ExactInt>(n).to_string(),
                factorial::<i128>(n).to_string()
            );
            for s in 0..=n {
                assert_eq!(
                    binomial::<ExactInt>(n, s as i64).to_string(),
                    binomial::<i128>(n, s as i64).to_string()
                );
            }
        }
    }
}
