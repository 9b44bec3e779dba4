//! Matrix shape parameters and their feasibility classification.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The parameter triple of the counting problem: `rows` x `cols` 0/1 matrices
/// with exactly `col_weight` ones in every column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixShape {
    pub rows: u64,
    pub cols: u64,
    #[serde(rename = "colweight")]
    pub col_weight: u64,
}

/// Exactly one class applies to every valid shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeClass {
    /// `1 <= col_weight <= rows <= cols * col_weight`: covering matrices exist.
    Feasible,
    /// More rows than total ones (`rows > cols * col_weight`, weight >= 1):
    /// some row must be all zeros.
    InfeasibleTall,
    /// `col_weight = 0` or `col_weight > rows`: no column pattern can
    /// contribute to covering the rows.
    InfeasibleWeight,
}

impl MatrixShape {
    /// A shape needs at least one row and one column; any column weight is
    /// accepted and classified rather than rejected.
    pub fn new(rows: u64, cols: u64, col_weight: u64) -> Result<Self, Error> {
        if rows < 1 || cols < 1 {
            return Err(Error::Domain(format!(
                "shape requires rows >= 1 and cols >= 1, got {rows}x{cols}"
            )));
        }
        Ok(MatrixShape {
            rows,
            cols,
            col_weight,
        })
    }

    pub fn classify(&self) -> ShapeClass {
        // Weight violations take precedence: col_weight = 0 also satisfies
        // rows > cols * col_weight, but it is a weight defect, not a
        // tallness one.
        if self.col_weight == 0 || self.col_weight > self.rows {
            ShapeClass::InfeasibleWeight
        } else if self.rows > self.cols * self.col_weight {
            ShapeClass::InfeasibleTall
        } else {
            ShapeClass::Feasible
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.classify() == ShapeClass::Feasible
    }
}

impl std::fmt::Display for MatrixShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{} (colweight {})", self.rows, self.cols, self.col_weight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_dimensions() {
        assert!(MatrixShape::new(0, 3, 1).is_err());
        assert!(MatrixShape::new(3, 0, 1).is_err());
        assert!(MatrixShape::new(1, 1, 0).is_ok());
    }

    #[test]
    fn classification_cases() {
        let class = |n, k, p| MatrixShape::new(n, k, p).unwrap().classify();
        assert_eq!(class(1, 1, 1), ShapeClass::Feasible);
        assert_eq!(class(6, 3, 2), ShapeClass::Feasible);
        assert_eq!(class(3, 2, 1), ShapeClass::InfeasibleTall);
        assert_eq!(class(5, 2, 2), ShapeClass::InfeasibleTall);
        assert_eq!(class(3, 5, 4), ShapeClass::InfeasibleWeight);
        assert_eq!(class(4, 2, 0), ShapeClass::InfeasibleWeight);
    }

    #[test]
    fn classification_is_a_partition() {
        // Every shape in a small box lands in exactly one class, and the
        // feasible class coincides with 1 <= p <= n <= kp.
        for n in 1..=10u64 {
            for k in 1..=6u64 {
                for p in 0..=12u64 {
                    let shape = MatrixShape::new(n, k, p).unwrap();
                    let feasible = 1 <= p && p <= n && n <= k * p;
                    assert_eq!(shape.is_feasible(), feasible, "shape {shape}");
                }
            }
        }
    }
}
