//! Cross-route checks: closed-form counts against the exhaustive
//! enumerator and against independent combinatorial routes.

use matcount::arith::{binomial, factorial, int_pow};
use matcount::counting::{count_covering, count_unrestricted, surjection_count_lhs};
use matcount::enumerate::{count_covering_bruteforce, enumerate_matrices, DEFAULT_CAP};
use matcount::shape::MatrixShape;
use matcount::ExactInt;

fn shape(n: u64, k: u64, p: u64) -> MatrixShape {
    MatrixShape::new(n, k, p).unwrap()
}

fn big(v: u64) -> ExactInt {
    ExactInt::from(v)
}

#[test]
fn covering_formula_matches_bruteforce_on_oracle_grid() {
    for n in 1..=5u64 {
        for k in 1..=4u64 {
            for p in 1..=n {
                let s = shape(n, k, p);
                if count_unrestricted::<ExactInt>(&s) > ExactInt::from(1_000_000u64) {
                    continue;
                }
                let formula = count_covering::<ExactInt>(&s);
                let brute = count_covering_bruteforce::<ExactInt>(&s, DEFAULT_CAP).unwrap();
                assert_eq!(formula, brute, "disagreement at {s}");
            }
        }
    }
}

#[test]
fn unrestricted_formula_matches_stream_totals() {
    for n in 1..=5u64 {
        for k in 1..=3u64 {
            for p in 0..=n {
                let s = shape(n, k, p);
                let streamed = enumerate_matrices(&s, false, DEFAULT_CAP).unwrap().count() as u64;
                assert_eq!(count_unrestricted::<ExactInt>(&s), big(streamed), "{s}");
            }
        }
    }
}

#[test]
fn transform_inversion_holds() {
    // C(n,p)^k = sum_{m=p}^{n} C(n,m) R(m x k, p): every unrestricted
    // matrix has a unique set of nonzero rows.
    for n in 1..=7u64 {
        for k in 1..=4u64 {
            for p in 1..=3.min(n) {
                let lhs = count_unrestricted::<ExactInt>(&shape(n, k, p));
                let mut rhs = ExactInt::from(0);
                for m in p..=n {
                    rhs += binomial::<ExactInt>(n, m as i64)
                        * count_covering::<ExactInt>(&shape(m, k, p));
                }
                assert_eq!(lhs, rhs, "n={n} k={k} p={p}");
            }
        }
    }
}

#[test]
fn transform_decomposition_matches_enumeration() {
    // Partition the unrestricted matrices by their nonzero-row set and
    // compare group totals with C(n,m) R(m x k, p).
    use std::collections::HashMap;
    for (n, k, p) in [(3u64, 2u64, 1u64), (4, 3, 2), (4, 2, 1)] {
        let s = shape(n, k, p);
        let mut by_support_size: HashMap<u32, u64> = HashMap::new();
        for m in enumerate_matrices(&s, false, DEFAULT_CAP).unwrap() {
            let support = (0..n as usize).filter(|&i| m.row_sum(i) > 0).count() as u32;
            *by_support_size.entry(support).or_insert(0) += 1;
        }
        for m in p..=n {
            let expected = binomial::<ExactInt>(n, m as i64)
                * count_covering::<ExactInt>(&shape(m, k, p));
            let got = big(by_support_size.get(&(m as u32)).copied().unwrap_or(0));
            assert_eq!(got, expected, "support size {m} of {s}");
        }
    }
}

#[test]
fn weight_one_covering_counts_are_surjection_counts() {
    // Independent route via Stirling numbers of the second kind:
    // surjections(n, k) = n! * S2(k, n).
    fn stirling2(k: u64, n: u64) -> ExactInt {
        let mut table = vec![vec![ExactInt::from(0); n as usize + 1]; k as usize + 1];
        table[0][0] = ExactInt::from(1);
        for i in 1..=k as usize {
            for j in 1..=n as usize {
                table[i][j] =
                    ExactInt::from(j as u64) * table[i - 1][j].clone() + table[i - 1][j - 1].clone();
            }
        }
        table[k as usize][n as usize].clone()
    }
    for n in 1..=7u64 {
        for k in n..=7u64 {
            let expected = factorial::<ExactInt>(n) * stirling2(k, n);
            assert_eq!(surjection_count_lhs::<ExactInt>(n, k), expected, "n={n} k={k}");
            assert_eq!(count_covering::<ExactInt>(&shape(n, k, 1)), expected);
        }
    }
}

#[test]
fn closed_form_regimes_agree_with_the_general_count() {
    // n = k, p = 1 regime.
    for n in 1..=8u64 {
        assert_eq!(
            count_covering::<ExactInt>(&shape(n, n, 1)),
            factorial::<ExactInt>(n)
        );
    }
    // n = 2p, k = 2 regime.
    for p in 1..=5u64 {
        let pf = factorial::<ExactInt>(p);
        assert_eq!(
            count_covering::<ExactInt>(&shape(2 * p, 2, p)),
            factorial::<ExactInt>(2 * p) / (pf.clone() * pf)
        );
    }
    // n = kp regime.
    for k in 1..=10u64 {
        for p in 1..=10u64 {
            if k * p > 10 {
                continue;
            }
            assert_eq!(
                count_covering::<ExactInt>(&shape(k * p, k, p)),
                factorial::<ExactInt>(k * p) / int_pow(factorial::<ExactInt>(p), k)
            );
        }
    }
}
