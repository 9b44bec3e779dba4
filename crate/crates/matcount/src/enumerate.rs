//! Brute-force enumeration of column-weight-constrained matrices.
//!
//! A matrix with exactly `p` ones per column is a `k`-tuple of column
//! patterns, each an `n`-bit word with `p` set bits. The enumerators walk
//! the Cartesian product of per-column patterns in a fixed canonical order:
//! patterns are ordered by their set-bit positions read as an increasing
//! index tuple (so the pattern with ones in the top rows comes first), and
//! matrices are ordered lexicographically over the column tuple with column
//! 1 most significant. Streams are deterministic and keep only O(k·p)
//! cursor state.

use num_bigint::BigInt;

use crate::counting::count_unrestricted;
use crate::error::Error;
use crate::matrix::{BoolMatrix, MAX_DIM};
use crate::scalar::{scalar_from_u64, ExactScalar};
use crate::shape::MatrixShape;

/// Default refusal threshold on the closed-form candidate count `C(n,p)^k`.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Cursor over the `p`-subsets of `n` row positions, in lexicographic order
/// of the index tuple.
#[derive(Debug, Clone)]
struct PatternCursor {
    n: u64,
    positions: Vec<u32>, // strictly increasing 0-based row indices
    mask: u64,
}

impl PatternCursor {
    /// The first pattern (ones in the top `p` rows), or `None` when `p > n`.
    fn first(n: u64, p: u64) -> Option<Self> {
        if p > n {
            return None;
        }
        let positions: Vec<u32> = (0..p as u32).collect();
        let mut cursor = PatternCursor {
            n,
            positions,
            mask: 0,
        };
        cursor.recompute_mask();
        Some(cursor)
    }

    fn recompute_mask(&mut self) {
        self.mask = self.positions.iter().fold(0u64, |m, &i| m | 1 << i);
    }

    fn reset(&mut self) {
        for (i, pos) in self.positions.iter_mut().enumerate() {
            *pos = i as u32;
        }
        self.recompute_mask();
    }

    /// Advance to the next subset; `false` once exhausted.
    fn advance(&mut self) -> bool {
        let p = self.positions.len();
        let mut i = p;
        while i > 0 {
            i -= 1;
            if (self.positions[i] as u64) < self.n - (p as u64 - i as u64) {
                self.positions[i] += 1;
                for j in i + 1..p {
                    self.positions[j] = self.positions[j - 1] + 1;
                }
                self.recompute_mask();
                return true;
            }
        }
        false
    }
}

/// All `n`-bit patterns with exactly `p` set bits, in canonical order.
/// Empty when `p > n`. Bit `i` of a pattern is row `i+1`.
///
/// Panics if `n` exceeds the 64-bit materialization limit.
pub fn column_patterns(n: u64, p: u64) -> ColumnPatterns {
    assert!(n <= MAX_DIM, "column patterns limited to {MAX_DIM} rows");
    ColumnPatterns {
        cursor: PatternCursor::first(n, p),
        started: false,
    }
}

#[derive(Debug, Clone)]
pub struct ColumnPatterns {
    cursor: Option<PatternCursor>,
    started: bool,
}

impl Iterator for ColumnPatterns {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cursor = self.cursor.as_mut()?;
        if !self.started {
            self.started = true;
            return Some(cursor.mask);
        }
        if cursor.advance() {
            Some(cursor.mask)
        } else {
            self.cursor = None;
            None
        }
    }
}

/// A pattern rendered as an `n`-character '0'/'1' string, row 1 first.
pub fn pattern_string(mask: u64, n: u64) -> String {
    (0..n).map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Odometer over the per-column pattern cursors.
#[derive(Debug, Clone)]
struct RawStream {
    cursors: Vec<PatternCursor>,
    started: bool,
    done: bool,
}

impl RawStream {
    fn new(shape: &MatrixShape) -> Self {
        match PatternCursor::first(shape.rows, shape.col_weight) {
            Some(first) => RawStream {
                cursors: vec![first; shape.cols as usize],
                started: false,
                done: false,
            },
            // p > n: no column pattern exists at all.
            None => RawStream {
                cursors: Vec::new(),
                started: false,
                done: true,
            },
        }
    }

    /// Position at the next candidate; `false` once exhausted.
    fn step(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        for j in (0..self.cursors.len()).rev() {
            if self.cursors[j].advance() {
                return true;
            }
            self.cursors[j].reset();
        }
        self.done = true;
        false
    }

    fn or_of_masks(&self) -> u64 {
        self.cursors.iter().fold(0u64, |acc, c| acc | c.mask)
    }

    fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.cursors.iter().map(|c| c.mask)
    }
}

fn full_row_mask(rows: u64) -> u64 {
    if rows >= 64 {
        u64::MAX
    } else {
        (1u64 << rows) - 1
    }
}

/// Refuse before enumerating anything when the closed-form candidate count
/// exceeds `cap`; afterwards check the materialization limit.
fn guard(shape: &MatrixShape, cap: u64) -> Result<(), Error> {
    let candidates: BigInt = count_unrestricted(shape);
    if candidates > BigInt::from(cap) {
        return Err(Error::CapExceeded {
            candidates: candidates.to_string(),
            cap,
        });
    }
    if shape.rows > MAX_DIM || shape.cols > MAX_DIM {
        return Err(Error::Domain(format!(
            "enumeration limited to {MAX_DIM} rows and columns, got {shape}"
        )));
    }
    Ok(())
}

/// Stream all matrices of the given shape in canonical order, optionally
/// keeping only those with no all-zero row.
///
/// Fails with [`Error::CapExceeded`] when `C(n,p)^k > cap`, before any
/// matrix is produced.
pub fn enumerate_matrices(
    shape: &MatrixShape,
    require_coverage: bool,
    cap: u64,
) -> Result<MatrixStream, Error> {
    guard(shape, cap)?;
    Ok(MatrixStream {
        shape: *shape,
        raw: RawStream::new(shape),
        require_coverage,
        full: full_row_mask(shape.rows),
    })
}

#[derive(Debug, Clone)]
pub struct MatrixStream {
    shape: MatrixShape,
    raw: RawStream,
    require_coverage: bool,
    full: u64,
}

impl Iterator for MatrixStream {
    type Item = BoolMatrix;

    fn next(&mut self) -> Option<BoolMatrix> {
        while self.raw.step() {
            if self.require_coverage && self.raw.or_of_masks() != self.full {
                continue;
            }
            let columns: Vec<u64> = self.raw.masks().collect();
            let matrix = BoolMatrix::from_columns(self.shape, &columns)
                .expect("enumerator emits valid columns");
            return Some(matrix);
        }
        None
    }
}

/// Count enumerated matrices without materializing them.
pub fn count_bruteforce<T: ExactScalar>(
    shape: &MatrixShape,
    require_coverage: bool,
    cap: u64,
) -> Result<T, Error> {
    guard(shape, cap)?;
    let full = full_row_mask(shape.rows);
    let mut raw = RawStream::new(shape);
    let mut count = 0u64;
    while raw.step() {
        if !require_coverage || raw.or_of_masks() == full {
            count += 1;
        }
    }
    Ok(scalar_from_u64(count))
}

/// Exact covering count by exhaustive filtering; the independent oracle for
/// the alternating-sum formula.
pub fn count_covering_bruteforce<T: ExactScalar>(
    shape: &MatrixShape,
    cap: u64,
) -> Result<T, Error> {
    count_bruteforce(shape, true, cap)
}
