//! 0/1 matrices with bit-packed rows.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::shape::MatrixShape;

/// Largest supported dimension on either axis; rows and column patterns are
/// single 64-bit words.
pub const MAX_DIM: u64 = 64;

/// An `n x k` 0/1 matrix. Row `i` is a `k`-bit word whose bit `j` (counting
/// from the least significant bit) is the entry in column `j`; both indices
/// are 0-based here, while the tuple bijections speak 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    shape: MatrixShape,
    rows: Vec<u64>,
}

impl BoolMatrix {
    /// Build from packed rows. The row count must match the shape and no row
    /// may have bits outside the column range. The shape's column weight is
    /// not enforced here; enumerators guarantee it for their output.
    pub fn from_rows(shape: MatrixShape, rows: Vec<u64>) -> Result<Self, Error> {
        check_dims(&shape)?;
        if rows.len() as u64 != shape.rows {
            return Err(Error::Domain(format!(
                "expected {} rows, got {}",
                shape.rows,
                rows.len()
            )));
        }
        let mask = width_mask(shape.cols);
        if rows.iter().any(|&r| r & !mask != 0) {
            return Err(Error::Domain(format!(
                "row has bits outside {} columns",
                shape.cols
            )));
        }
        Ok(BoolMatrix { shape, rows })
    }

    /// Build from per-column bit patterns (bit `i` of `columns[j]` is the
    /// entry at row `i`, column `j`).
    pub fn from_columns(shape: MatrixShape, columns: &[u64]) -> Result<Self, Error> {
        check_dims(&shape)?;
        if columns.len() as u64 != shape.cols {
            return Err(Error::Domain(format!(
                "expected {} columns, got {}",
                shape.cols,
                columns.len()
            )));
        }
        let row_mask = width_mask(shape.rows);
        if columns.iter().any(|&c| c & !row_mask != 0) {
            return Err(Error::Domain(format!(
                "column has bits outside {} rows",
                shape.rows
            )));
        }
        let mut rows = vec![0u64; shape.rows as usize];
        for (j, &col) in columns.iter().enumerate() {
            let mut bits = col;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                rows[i] |= 1 << j;
                bits &= bits - 1;
            }
        }
        Ok(BoolMatrix { shape, rows })
    }

    /// Parse from row strings of '0'/'1' characters, one per row.
    pub fn from_row_strings(shape: MatrixShape, lines: &[&str]) -> Result<Self, Error> {
        let mut rows = Vec::with_capacity(lines.len());
        for line in lines {
            if line.len() as u64 != shape.cols {
                return Err(Error::Domain(format!(
                    "row string {line:?} is not {} characters wide",
                    shape.cols
                )));
            }
            let mut row = 0u64;
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '1' => row |= 1 << j,
                    '0' => {}
                    other => {
                        return Err(Error::Domain(format!("invalid matrix character {other:?}")))
                    }
                }
            }
            rows.push(row);
        }
        Self::from_rows(shape, rows)
    }

    pub fn shape(&self) -> &MatrixShape {
        &self.shape
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row] >> col & 1 == 1
    }

    pub fn row_bits(&self, row: usize) -> u64 {
        self.rows[row]
    }

    pub fn row_sum(&self, row: usize) -> u64 {
        self.rows[row].count_ones() as u64
    }

    pub fn column_sum(&self, col: usize) -> u64 {
        self.rows.iter().filter(|&&r| r >> col & 1 == 1).count() as u64
    }

    /// True when no row is all zeros.
    pub fn is_covering(&self) -> bool {
        self.rows.iter().all(|&r| r != 0)
    }

    /// Row `i` as a `k`-character '0'/'1' string, column 1 first.
    pub fn row_string(&self, row: usize) -> String {
        (0..self.shape.cols as usize)
            .map(|j| if self.get(row, j) { '1' } else { '0' })
            .collect()
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows.len()).map(|i| self.row_string(i)).collect()
    }
}

fn check_dims(shape: &MatrixShape) -> Result<(), Error> {
    if shape.rows > MAX_DIM || shape.cols > MAX_DIM {
        return Err(Error::Domain(format!(
            "matrix dimensions {}x{} exceed the {MAX_DIM}-bit materialization limit",
            shape.rows, shape.cols
        )));
    }
    Ok(())
}

fn width_mask(width: u64) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Text form: one row per line, top row first.
impl std::fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows.len() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row_string(i))?;
        }
        Ok(())
    }
}

/// JSON form: `{"shape": {"rows", "cols", "colweight"}, "rows": ["010", ...]}`.
impl Serialize for BoolMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("BoolMatrix", 2)?;
        state.serialize_field("shape", &self.shape)?;
        state.serialize_field("rows", &self.row_strings())?;
        state.end()
    }
}
