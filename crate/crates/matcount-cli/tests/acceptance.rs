//! Acceptance suite: one test per criterion, each printing a pass line and
//! holding the stated time bound. Run with `--nocapture` to see the lines.

use std::collections::{HashMap, HashSet};
use std::process::Command;
use std::time::{Duration, Instant};

use matcount::arith::{binomial, factorial, int_pow, multinomial};
use matcount::bijection::{
    column_tuple_to_matrix, matrix_to_column_tuple, matrix_to_row_tuple, row_multiplicities,
    row_tuple_to_matrix,
};
use matcount::compose::compositions;
use matcount::counting::{
    closed_form_rhs, count_covering, count_unrestricted, surjection_count_lhs, IdentityId,
    ParamPoint,
};
use matcount::enumerate::{count_covering_bruteforce, enumerate_matrices, DEFAULT_CAP};
use matcount::matrix::BoolMatrix;
use matcount::shape::MatrixShape;
use matcount::ExactInt;

fn shape(n: u64, k: u64, p: u64) -> MatrixShape {
    MatrixShape::new(n, k, p).unwrap()
}

fn big(v: u64) -> ExactInt {
    ExactInt::from(v)
}

fn timed(criterion: &str, limit: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed();
    assert!(
        elapsed <= limit,
        "{criterion}: took {elapsed:?}, limit {limit:?}"
    );
    println!("acceptance: {criterion}: PASS ({elapsed:?} <= {limit:?})");
}

#[test]
fn criterion_1_square_weight_one_counts_are_factorials() {
    timed("criterion 1 (covering(n,n,1) = n!)", Duration::from_secs(1), || {
        for n in 1..=8u64 {
            assert_eq!(
                count_covering::<ExactInt>(&shape(n, n, 1)),
                factorial::<ExactInt>(n),
                "n={n}"
            );
        }
        for n in 1..=5u64 {
            assert_eq!(
                count_covering_bruteforce::<ExactInt>(&shape(n, n, 1), DEFAULT_CAP).unwrap(),
                factorial::<ExactInt>(n),
                "oracle n={n}"
            );
        }
    });
}

#[test]
fn criterion_2_two_column_counts_are_central_binomials() {
    timed(
        "criterion 2 (covering(2p,2,p) = (2p)!/(p!)^2)",
        Duration::from_secs(1),
        || {
            let expected = [2u64, 6, 20, 70, 252];
            for p in 1..=5u64 {
                let pf = factorial::<ExactInt>(p);
                let rhs = factorial::<ExactInt>(2 * p) / (pf.clone() * pf);
                assert_eq!(rhs, big(expected[p as usize - 1]));
                assert_eq!(count_covering::<ExactInt>(&shape(2 * p, 2, p)), rhs, "p={p}");
            }
            for p in 1..=3u64 {
                assert_eq!(
                    count_covering_bruteforce::<ExactInt>(&shape(2 * p, 2, p), DEFAULT_CAP)
                        .unwrap(),
                    count_covering::<ExactInt>(&shape(2 * p, 2, p)),
                    "oracle p={p}"
                );
            }
        },
    );
}

#[test]
fn criterion_3_tall_shapes_count_zero() {
    timed(
        "criterion 3 (covering = 0 when n > pk)",
        Duration::from_secs(30),
        || {
            let mut oracle_points = 0;
            for n in 1..=12u64 {
                for k in 1..=4u64 {
                    for p in 1..=3u64 {
                        if n <= p * k {
                            continue;
                        }
                        let s = shape(n, k, p);
                        assert_eq!(count_covering::<ExactInt>(&s), big(0), "{s}");
                        if count_unrestricted::<ExactInt>(&s) <= big(1_000_000) {
                            assert_eq!(
                                count_covering_bruteforce::<ExactInt>(&s, DEFAULT_CAP).unwrap(),
                                big(0),
                                "oracle {s}"
                            );
                            oracle_points += 1;
                        }
                    }
                }
            }
            assert!(oracle_points > 0, "no oracle-backed points in the sweep");
        },
    );
}

#[test]
fn criterion_4_saturated_shapes_count_multiset_permutations() {
    timed(
        "criterion 4 (covering(kp,k,p) = (kp)!/(p!)^k)",
        Duration::from_secs(60),
        || {
            for k in 1..=10u64 {
                for p in 1..=10u64 {
                    if k * p > 10 {
                        continue;
                    }
                    let rhs = factorial::<ExactInt>(k * p) / int_pow(factorial::<ExactInt>(p), k);
                    assert_eq!(
                        count_covering::<ExactInt>(&shape(k * p, k, p)),
                        rhs,
                        "k={k} p={p}"
                    );
                    if k * p <= 8 {
                        // (k=8, p=1) enumerates 8^8 ~ 1.7e7 candidates, so
                        // this sweep runs with a raised cap.
                        assert_eq!(
                            count_covering_bruteforce::<ExactInt>(&shape(k * p, k, p), 20_000_000)
                                .unwrap(),
                            rhs,
                            "oracle k={k} p={p}"
                        );
                    }
                }
            }
            // The worked parameter point.
            assert_eq!(count_covering::<ExactInt>(&shape(6, 3, 2)), big(90));
        },
    );
}

#[test]
fn criterion_5_surjection_identity() {
    timed(
        "criterion 5 (alternating sum = composition sum = surjections)",
        Duration::from_secs(10),
        || {
            // Exhaustive surjection count over all n^k tuples.
            fn surjections(n: u64, k: u64) -> u64 {
                let mut count = 0u64;
                let mut tuple = vec![1u64; k as usize];
                'enumerate: loop {
                    let hit: HashSet<u64> = tuple.iter().copied().collect();
                    if hit.len() as u64 == n {
                        count += 1;
                    }
                    for j in (0..k as usize).rev() {
                        if tuple[j] < n {
                            tuple[j] += 1;
                            for t in tuple.iter_mut().skip(j + 1) {
                                *t = 1;
                            }
                            continue 'enumerate;
                        }
                    }
                    break;
                }
                count
            }
            for n in 1..=7u64 {
                for k in n..=7u64 {
                    let lhs = surjection_count_lhs::<ExactInt>(n, k);
                    let rhs = closed_form_rhs::<ExactInt>(
                        IdentityId::Eq5,
                        &ParamPoint::default().with_n(n).with_k(k),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs, "n={n} k={k}");
                    if k <= 6 {
                        assert_eq!(lhs, big(surjections(n, k)), "oracle n={n} k={k}");
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_6_binomial_transform_inversion() {
    timed(
        "criterion 6 (C(n,p)^k = sum_m C(n,m) covering(m,k,p))",
        Duration::from_secs(5),
        || {
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
        },
    );
}

#[test]
fn criterion_7_bijection_round_trips() {
    // Column-tuple regime n = kp for kp <= 8; the (8,1) point streams
    // 8^8 ~ 1.7e7 candidates, hence the raised cap.
    for k in 1..=8u64 {
        for p in 1..=8u64 {
            if k * p > 8 {
                continue;
            }
            let s = shape(k * p, k, p);
            let mut seen = HashSet::new();
            for m in enumerate_matrices(&s, true, 20_000_000).unwrap() {
                let tuple = matrix_to_column_tuple(&m).unwrap();
                assert_eq!(column_tuple_to_matrix(&tuple, &s).unwrap(), m);
                assert!(seen.insert(tuple.indices.clone()), "duplicate tuple");
            }
            let parts = vec![p; k as usize];
            assert_eq!(
                big(seen.len() as u64),
                multinomial::<ExactInt>(k * p, &parts).unwrap(),
                "k={k} p={p}"
            );
        }
    }
    // Row-tuple regime p = 1 for n <= k <= 5.
    for n in 1..=5u64 {
        for k in n..=5u64 {
            let s = shape(n, k, 1);
            let mut seen = HashSet::new();
            for m in enumerate_matrices(&s, true, DEFAULT_CAP).unwrap() {
                let tuple = matrix_to_row_tuple(&m).unwrap();
                assert_eq!(row_tuple_to_matrix(&tuple, &s).unwrap(), m);
                assert!(seen.insert(tuple.indices.clone()), "duplicate tuple");
            }
            assert_eq!(
                big(seen.len() as u64),
                count_covering::<ExactInt>(&s),
                "n={n} k={k}"
            );
        }
    }
    // The worked example: ones at (1,1),(2,3),(3,1),(4,3),(5,2),(6,2).
    let worked = BoolMatrix::from_row_strings(
        shape(6, 3, 2),
        &["100", "001", "100", "001", "010", "010"],
    )
    .unwrap();
    let tuple = matrix_to_column_tuple(&worked).unwrap();
    assert_eq!(tuple.indices, [1, 3, 1, 3, 2, 2]);
    assert_eq!(column_tuple_to_matrix(&tuple, &shape(6, 3, 2)).unwrap(), worked);
    println!("acceptance: criterion 7 (bijection round-trips): PASS");
}

#[test]
fn criterion_8_partition_by_row_multiplicities() {
    for n in 1..=6u64 {
        for k in n..=6u64 {
            let s = shape(n, k, 1);
            let mut groups: HashMap<Vec<u64>, u64> = HashMap::new();
            for m in enumerate_matrices(&s, true, DEFAULT_CAP).unwrap() {
                *groups.entry(row_multiplicities(&m)).or_insert(0) += 1;
            }
            let mut total = ExactInt::from(0);
            for c in compositions(k, n) {
                let size = groups.get(c.parts()).copied().unwrap_or(0);
                assert_eq!(
                    big(size),
                    multinomial::<ExactInt>(k, c.parts()).unwrap(),
                    "group {c} at n={n} k={k}"
                );
                total += big(size);
            }
            assert_eq!(total, count_covering::<ExactInt>(&s), "n={n} k={k}");
        }
    }
    println!("acceptance: criterion 8 (row-multiplicity partition): PASS");
}

#[test]
fn criterion_9_cli_black_box() {
    let bin = env!("CARGO_BIN_EXE_matcount");

    // All registered identities pass on their default grids.
    let status = Command::new(bin)
        .args(["verify", "--identity", "all"])
        .output()
        .expect("spawn matcount");
    assert!(
        status.status.success(),
        "verify --identity all failed: {}",
        String::from_utf8_lossy(&status.stderr)
    );

    // Machine outputs are byte-identical across consecutive runs.
    for format in ["json", "csv"] {
        let run = || {
            Command::new(bin)
                .args(["verify", "--identity", "all", "--format", format])
                .output()
                .expect("spawn matcount")
        };
        let first = run();
        let second = run();
        assert!(first.status.success());
        assert_eq!(
            first.stdout, second.stdout,
            "{format} output differs between runs"
        );
        assert!(!first.stdout.is_empty());
    }

    // An explosive shape is refused with the dedicated exit code before
    // any enumeration happens.
    let refused = Command::new(bin)
        .args([
            "enumerate",
            "--rows",
            "30",
            "--cols",
            "10",
            "--colweight",
            "15",
        ])
        .output()
        .expect("spawn matcount");
    assert_eq!(refused.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&refused.stderr);
    assert!(stderr.contains("exceeds cap"), "unexpected stderr: {stderr}");

    println!("acceptance: criterion 9 (CLI black box): PASS");
}
