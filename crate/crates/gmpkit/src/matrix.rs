//! Dense matrices over a finite field.
//!
//! Matrices are immutable after construction and stored row-major as packed
//! element codes. All binary operations require both operands to share the
//! same field and return `Err(Error::FieldMismatch)` otherwise.

use std::fmt;

use crate::field::{Field, FieldElem};
use crate::{Error, Result};

#[derive(Clone)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && self.field.same_as(&other.field)
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{}: {})", self.rows, self.cols, self)
    }
}

impl fmt::Display for Matrix {
    /// Prints in the same literal syntax `parse` accepts: rows separated by
    /// `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        Ok(())
    }
}

/// Splits on `sep` at bracket depth zero, so tuple entries like `[1,2]`
/// survive splitting a row on commas.
pub(crate) fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl Matrix {
    /// The all-zero matrix. Dimensions must be positive.
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] })
    }

    /// The n×n identity.
    pub fn identity(field: &Field, n: usize) -> Result<Self> {
        let mut m = Self::zero(field, n, n)?;
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        Ok(m)
    }

    pub(crate) fn from_codes(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Builds a matrix entry by entry from a closure over (row, col).
    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElem,
    ) -> Result<Self> {
        let mut m = Self::zero(field, rows, cols)?;
        for r in 0..rows {
            for c in 0..cols {
                let e = f(r, c);
                if !e.field().same_as(field) {
                    return Err(Error::FieldMismatch);
                }
                m.data[r * cols + c] = e.code();
            }
        }
        Ok(m)
    }

    /// Parses a matrix literal: rows separated by `;`, entries by `,`, each
    /// entry in the field-element grammar. `"0,a;1,a^2"` is 2×2 over F_4.
    pub fn parse(field: &Field, text: &str) -> Result<Self> {
        let body = text.trim();
        if body.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let mut data = Vec::new();
        let mut cols = None;
        let row_texts = split_top_level(body, ';');
        for row in &row_texts {
            let entries = split_top_level(row, ',');
            match cols {
                None => cols = Some(entries.len()),
                Some(c) if c != entries.len() => {
                    return Err(Error::Parse(format!(
                        "ragged matrix literal: expected {c} entries per row, got {}",
                        entries.len()
                    )));
                }
                _ => {}
            }
            for e in entries {
                data.push(FieldElem::parse(field, e)?.code());
            }
        }
        let cols = cols.unwrap();
        if cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(Self::from_codes(field, row_texts.len(), cols, data))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        FieldElem::from_code(&self.field, self.data[r * self.cols + c])
    }

    pub(crate) fn code_at(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub(crate) fn set_code(&mut self, r: usize, c: usize, code: u32) {
        self.data[r * self.cols + c] = code;
    }

    pub(crate) fn row_codes(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&c| c == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| self.data[r * self.cols + c] == u32::from(r == c)))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field.same_as(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data =
            self.data.iter().zip(&other.data).map(|(&a, &b)| self.field.add_code(a, b)).collect();
        Ok(Self::from_codes(&self.field, self.rows, self.cols, data))
    }

    pub fn scale(&self, s: &FieldElem) -> Result<Self> {
        if !s.field().same_as(&self.field) {
            return Err(Error::FieldMismatch);
        }
        let data = self.data.iter().map(|&a| self.field.mul_code(a, s.code())).collect();
        Ok(Self::from_codes(&self.field, self.rows, self.cols, data))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(&self.field, self.rows, other.cols)?;
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.data[k * other.cols + c];
                    if b == 0 {
                        continue;
                    }
                    let idx = r * other.cols + c;
                    out.data[idx] = self.field.add_code(out.data[idx], self.field.mul_code(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![0; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        Self::from_codes(&self.field, self.cols, self.rows, data)
    }

    /// Matrix power by repeated squaring; the zeroth power is the identity.
    pub fn pow(&self, e: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NonSquare);
        }
        let mut acc = Self::identity(&self.field, self.rows)?;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Kronecker product: the (i,j) block of the result is `self[i][j] · other`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zero(&self.field, rows, cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.data[i * self.cols + j];
                if a == 0 {
                    continue;
                }
                for r in 0..other.rows {
                    for c in 0..other.cols {
                        let v = self.field.mul_code(a, other.data[r * other.cols + c]);
                        out.data[(i * other.rows + r) * cols + j * other.cols + c] = v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal assembly of the given matrices (at least one required).
    pub fn block_diag(blocks: &[Matrix]) -> Result<Self> {
        let first = blocks.first().ok_or(Error::EmptyMatrix)?;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zero(&first.field, rows, cols)?;
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            first.same_field(b)?;
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.data[(ro + r) * cols + co + c] = b.data[r * b.cols + c];
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        Ok(out)
    }

    /// Stacks matrices vertically; all must have the same column count.
    pub fn vstack(blocks: &[Matrix]) -> Result<Self> {
        let first = blocks.first().ok_or(Error::EmptyMatrix)?;
        let cols = first.cols;
        let mut data = Vec::new();
        for b in blocks {
            first.same_field(b)?;
            if b.cols != cols {
                return Err(Error::ShapeMismatch(format!(
                    "vstack needs equal widths, got {} and {cols}",
                    b.cols
                )));
            }
            data.extend_from_slice(&b.data);
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        Ok(Self::from_codes(&first.field, rows, cols, data))
    }

    /// Places matrices side by side; all must have the same row count.
    pub fn hstack(blocks: &[Matrix]) -> Result<Self> {
        let first = blocks.first().ok_or(Error::EmptyMatrix)?;
        let rows = first.rows;
        for b in blocks {
            first.same_field(b)?;
            if b.rows != rows {
                return Err(Error::ShapeMismatch(format!(
                    "hstack needs equal heights, got {} and {rows}",
                    b.rows
                )));
            }
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zero(&first.field, rows, cols)?;
        let mut co = 0;
        for b in blocks {
            for r in 0..rows {
                for c in 0..b.cols {
                    out.data[r * cols + co + c] = b.data[r * b.cols + c];
                }
            }
            co += b.cols;
        }
        Ok(out)
    }

    /// Keeps the rows with the given 1-based indices, which must be strictly
    /// ascending and in range.
    pub fn take_rows(&self, indices: &[usize]) -> Result<Self> {
        check_indices(indices, self.rows, "row")?;
        let mut data = Vec::with_capacity(indices.len() * self.cols);
        for &i in indices {
            data.extend_from_slice(self.row_codes(i - 1));
        }
        if indices.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        Ok(Self::from_codes(&self.field, indices.len(), self.cols, data))
    }

    /// Keeps the columns with the given 1-based indices, which must be
    /// strictly ascending and in range.
    pub fn take_cols(&self, indices: &[usize]) -> Result<Self> {
        check_indices(indices, self.cols, "column")?;
        if indices.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let mut data = Vec::with_capacity(indices.len() * self.rows);
        for r in 0..self.rows {
            for &c in indices {
                data.push(self.data[r * self.cols + c - 1]);
            }
        }
        Ok(Self::from_codes(&self.field, self.rows, indices.len(), data))
    }

    /// Column-major flattening into a single row: `[a,b; c,d]` becomes
    /// `(a, c, b, d)`.
    pub fn vec_row(&self) -> Self {
        let data = self.transpose().data;
        Self::from_codes(&self.field, 1, self.rows * self.cols, data)
    }

    /// Inverse of [`vec_row`](Self::vec_row): reshapes a 1×(rows·cols) row
    /// back into a rows×cols matrix, filling columns first.
    pub fn reshape_col_major(&self, rows: usize, cols: usize) -> Result<Self> {
        if self.rows * self.cols != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot reshape {} entries into {rows}x{cols}",
                self.rows * self.cols
            )));
        }
        let mut out = Self::zero(&self.field, rows, cols)?;
        for (i, &v) in self.data.iter().enumerate() {
            out.data[(i % rows) * cols + i / rows] = v;
        }
        Ok(out)
    }

    /// Reduced row echelon form. Returns the reduced matrix, its rank, and
    /// the 0-based pivot column indices. Pivot search takes the first row
    /// with a nonzero entry in the current column.
    pub fn rref(&self) -> (Self, usize, Vec<usize>) {
        let mut m = self.clone();
        let f = m.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.data[i * m.cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(r * m.cols + j, pr * m.cols + j);
                }
            }
            let inv = f.inv_code(m.data[r * m.cols + c]).expect("pivot is nonzero");
            for j in c..m.cols {
                m.data[r * m.cols + j] = f.mul_code(m.data[r * m.cols + j], inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.data[i * m.cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let sub = f.mul_code(factor, m.data[r * m.cols + j]);
                    m.data[i * m.cols + j] = f.sub_code(m.data[i * m.cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    /// Rank via row reduction.
    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// The nonzero rows of the RREF: a canonical basis of the row space.
    /// Returns `None` for the zero matrix.
    pub fn row_basis(&self) -> Option<Self> {
        let (r, rank, _) = self.rref();
        if rank == 0 {
            return None;
        }
        Some(Self::from_codes(&self.field, rank, self.cols, r.data[..rank * self.cols].to_vec()))
    }
}

fn check_indices(indices: &[usize], limit: usize, what: &str) -> Result<()> {
    for (i, &v) in indices.iter().enumerate() {
        if v == 0 || v > limit {
            return Err(Error::IndexOutOfRange(format!(
                "{what} index {v} out of range 1..={limit}"
            )));
        }
        if i > 0 && indices[i - 1] >= v {
            return Err(Error::IndexOutOfRange(format!(
                "{what} indices must be strictly ascending"
            )));
        }
    }
    Ok(())
}
