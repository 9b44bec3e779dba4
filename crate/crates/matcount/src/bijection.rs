//! Matrix/tuple correspondences.
//!
//! Two regimes admit a tuple encoding of a matrix by its nonzero entries:
//! when every row has exactly one 1 the matrix is the column-index tuple of
//! its rows, and when every column has exactly one 1 (weight 1) it is the
//! row-index tuple of its columns. All tuple values are 1-based.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::matrix::BoolMatrix;
use crate::shape::MatrixShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TupleKind {
    /// Length `n`, values in `1..=k`; value `j` appears exactly `p` times.
    ColumnTuple,
    /// Length `k`, values in `1..=n`.
    RowTuple,
}

/// An ordered tuple of 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexTuple {
    pub kind: TupleKind,
    /// 1-based indices, as in the written form `(1, 3, 1, 3, 2, 2)`.
    pub indices: Vec<u64>,
}

/// JSON form spells out the index convention:
/// `{"kind": ..., "index_base": 1, "indices": [...]}`.
impl Serialize for IndexTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("IndexTuple", 3)?;
        state.serialize_field("kind", &self.kind)?;
        state.serialize_field("index_base", &1u8)?;
        state.serialize_field("indices", &self.indices)?;
        state.end()
    }
}

impl std::fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Encode a matrix whose every row holds exactly one 1 as the tuple
/// `(t_1, ..., t_n)` where `t_s` is the column of row `s`'s 1.
pub fn matrix_to_column_tuple(m: &BoolMatrix) -> Result<IndexTuple, Error> {
    let n = m.shape().rows as usize;
    let mut indices = Vec::with_capacity(n);
    for i in 0..n {
        if m.row_sum(i) != 1 {
            return Err(Error::Domain(format!(
                "row {} has {} ones, expected exactly 1",
                i + 1,
                m.row_sum(i)
            )));
        }
        indices.push(m.row_bits(i).trailing_zeros() as u64 + 1);
    }
    Ok(IndexTuple {
        kind: TupleKind::ColumnTuple,
        indices,
    })
}

/// Rebuild the unique matrix with a 1 at `(s, t_s)` for each `s`. The tuple
/// must have length `n` and use each column `1..=k` exactly `p` times.
pub fn column_tuple_to_matrix(t: &IndexTuple, shape: &MatrixShape) -> Result<BoolMatrix, Error> {
    if t.kind != TupleKind::ColumnTuple {
        return Err(Error::Domain("expected a column tuple".into()));
    }
    if t.indices.len() as u64 != shape.rows {
        return Err(Error::Domain(format!(
            "tuple length {} does not match {} rows",
            t.indices.len(),
            shape.rows
        )));
    }
    let mut uses = vec![0u64; shape.cols as usize];
    let mut rows = Vec::with_capacity(t.indices.len());
    for &col in &t.indices {
        if col < 1 || col > shape.cols {
            return Err(Error::Domain(format!(
                "column index {col} outside 1..={}",
                shape.cols
            )));
        }
        uses[(col - 1) as usize] += 1;
        rows.push(1u64 << (col - 1));
    }
    if uses.iter().any(|&u| u != shape.col_weight) {
        return Err(Error::Domain(format!(
            "tuple multiset must repeat each column exactly {} times",
            shape.col_weight
        )));
    }
    BoolMatrix::from_rows(*shape, rows)
}

/// Encode a weight-1 matrix as the tuple `(r_1, ..., r_k)` where `r_j` is
/// the row of column `j`'s unique 1.
pub fn matrix_to_row_tuple(m: &BoolMatrix) -> Result<IndexTuple, Error> {
    let (n, k) = (m.shape().rows as usize, m.shape().cols as usize);
    let mut indices = Vec::with_capacity(k);
    for j in 0..k {
        if m.column_sum(j) != 1 {
            return Err(Error::Domain(format!(
                "column {} has {} ones, expected exactly 1",
                j + 1,
                m.column_sum(j)
            )));
        }
        let row = (0..n).find(|&i| m.get(i, j)).expect("column sum is 1");
        indices.push(row as u64 + 1);
    }
    Ok(IndexTuple {
        kind: TupleKind::RowTuple,
        indices,
    })
}

/// Inverse of [`matrix_to_row_tuple`] for a weight-1 shape.
pub fn row_tuple_to_matrix(t: &IndexTuple, shape: &MatrixShape) -> Result<BoolMatrix, Error> {
    if t.kind != TupleKind::RowTuple {
        return Err(Error::Domain("expected a row tuple".into()));
    }
    if shape.col_weight != 1 {
        return Err(Error::Domain(
            "row tuples encode matrices of column weight 1".into(),
        ));
    }
    if t.indices.len() as u64 != shape.cols {
        return Err(Error::Domain(format!(
            "tuple length {} does not match {} columns",
            t.indices.len(),
            shape.cols
        )));
    }
    let mut rows = vec![0u64; shape.rows as usize];
    for (j, &row) in t.indices.iter().enumerate() {
        if row < 1 || row > shape.rows {
            return Err(Error::Domain(format!(
                "row index {row} outside 1..={}",
                shape.rows
            )));
        }
        rows[(row - 1) as usize] |= 1 << j;
    }
    BoolMatrix::from_rows(*shape, rows)
}

/// Row sums `(t_1, ..., t_n)`. Zeros are possible; for a covering weight-1
/// matrix this is a composition of `k`.
pub fn row_multiplicities(m: &BoolMatrix) -> Vec<u64> {
    (0..m.shape().rows as usize).map(|i| m.row_sum(i)).collect()
}
