//! Exact matrices over the Gaussian rationals.
//!
//! Rank and determinant use fraction-free (Bareiss-style) elimination so
//! intermediate entries stay ratios of minors of the input; inverse and
//! kernel use exact Gauss-Jordan reduction. Everything here is
//! deterministic: pivots are chosen as the first nonzero entry in scan
//! order, never by magnitude.

use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::scalar::GaussianRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// Square matrix with rank below its size.
    #[error("matrix is singular")]
    Singular,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {lhs_rows}x{lhs_cols} against {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },
    #[error("rows have unequal lengths")]
    RaggedRows,
}

/// Dense matrix of [`GaussianRational`] entries, row-major.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, LinalgError> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(LinalgError::RaggedRows);
        }
        Ok(Self {
            rows: height,
            cols: width,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer literals, mostly for tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussianRational::from_int(v)).collect())
                .collect(),
        )
        .expect("literal rows must be rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: GaussianRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// New matrix keeping the given columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, columns.len());
        for i in 0..self.rows {
            for (jj, &j) in columns.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(self.shape_mismatch(other));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows {
            return Err(self.shape_mismatch(other));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(self.shape_mismatch(rhs));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = GaussianRational::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * rhs.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    fn shape_mismatch(&self, rhs: &Self) -> LinalgError {
        LinalgError::ShapeMismatch {
            lhs_rows: self.rows,
            lhs_cols: self.cols,
            rhs_rows: rhs.rows,
            rhs_cols: rhs.cols,
        }
    }

    /// Exact rank via one-step Bareiss elimination.
    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    /// Exact determinant. Errors on non-square input.
    pub fn determinant(&self) -> Result<GaussianRational, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let (rank, det) = self.bareiss();
        if rank < self.rows {
            return Ok(GaussianRational::zero());
        }
        Ok(det)
    }

    /// Fraction-free elimination; returns (rank, determinant-so-far).
    ///
    /// The Bareiss one-step update divides each 2x2 cross product by the
    /// previous pivot; over a field the division is exact and keeps each
    /// entry equal to a ratio of minors of the input, bounding growth.
    fn bareiss(&self) -> (usize, GaussianRational) {
        let mut m = self.clone();
        let mut prev_pivot = GaussianRational::one();
        let mut sign_flips = 0usize;
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if found != pivot_row {
                m.swap_rows(found, pivot_row);
                sign_flips += 1;
            }
            let pivot = m.get(pivot_row, col).clone();
            for i in pivot_row + 1..m.rows {
                let factor = m.get(i, col).clone();
                for j in col + 1..m.cols {
                    let updated = (&pivot * m.get(i, j) - &factor * m.get(pivot_row, j))
                        / &prev_pivot;
                    m.set(i, j, updated);
                }
                m.set(i, col, GaussianRational::zero());
            }
            prev_pivot = pivot;
            pivot_row += 1;
        }
        let det = if sign_flips % 2 == 1 {
            -prev_pivot
        } else {
            prev_pivot
        };
        (pivot_row, det)
    }

    /// Exact inverse via Gauss-Jordan on the augmented matrix.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let Some(found) = (col..n).find(|&r| !work.get(r, col).is_zero()) else {
                return Err(LinalgError::Singular);
            };
            if found != col {
                work.swap_rows(found, col);
                inv.swap_rows(found, col);
            }
            let pivot = work.get(col, col).clone();
            let pivot_inv = pivot.recip();
            work.scale_row(col, &pivot_inv);
            inv.scale_row(col, &pivot_inv);
            for i in 0..n {
                if i == col || work.get(i, col).is_zero() {
                    continue;
                }
                let factor = work.get(i, col).clone();
                work.sub_scaled_row(i, col, &factor);
                inv.sub_scaled_row(i, col, &factor);
            }
        }
        Ok(inv)
    }

    /// Exact basis of the right kernel, read off the reduced row echelon
    /// form. Always returns `cols - rank` vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussianRational>> {
        let (rref, pivot_cols) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut flags = vec![false; self.cols];
            for &c in &pivot_cols {
                flags[c] = true;
            }
            flags
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[free] = GaussianRational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -rref.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form with the list of pivot columns.
    fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let pivot_inv = m.get(pivot_row, col).recip();
            m.scale_row(pivot_row, &pivot_inv);
            for i in 0..m.rows {
                if i == pivot_row || m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col).clone();
                m.sub_scaled_row(i, pivot_row, &factor);
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        (m, pivot_cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, row: usize, factor: &GaussianRational) {
        for j in 0..self.cols {
            let v = self.get(row, j) * factor;
            self.set(row, j, v);
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: &GaussianRational) {
        for j in 0..self.cols {
            let v = self.get(target, j).clone() - &(factor * self.get(source, j));
            self.set(target, j, v);
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.row_vecs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<GaussianRational>>::deserialize(deserializer)?;
        ExactMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Incrementally maintained row space, used for greedy basis selection.
///
/// `insert` reduces the candidate against the rows collected so far and
/// keeps it only if a nonzero residue remains, so the number of kept rows
/// is always the rank of everything inserted.
#[derive(Clone, Debug, Default)]
pub struct IncrementalSpan {
    // Each stored row is normalized to have entry 1 at its pivot column.
    rows: Vec<(usize, Vec<GaussianRational>)>,
}

impl IncrementalSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Returns true when the vector enlarged the span.
    pub fn insert(&mut self, mut v: Vec<GaussianRational>) -> bool {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (target, source) in v.iter_mut().zip(row.iter()) {
                *target = target.clone() - &(&factor * source);
            }
        }
        let Some(pivot) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        for e in v.iter_mut() {
            *e = e.clone() * &inv;
        }
        self.rows.push((pivot, v));
        true
    }

    /// Whether the vector already lies in the span (does not modify it).
    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        let mut probe = self.clone();
        !probe.insert(v.to_vec())
    }
}
