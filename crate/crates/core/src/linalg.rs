//! Dense exact linear algebra over a cyclotomic field.

use std::fmt;

use crate::cyclotomic::CycNumber;
use crate::error::CycError;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    conductor: u32,
    data: Vec<CycNumber>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, conductor: u32) -> Self {
        Matrix {
            rows,
            cols,
            conductor,
            data: vec![CycNumber::zero(conductor); rows * cols],
        }
    }

    pub fn identity(n: usize, conductor: u32) -> Self {
        Self::diagonal(&vec![CycNumber::one(conductor); n])
    }

    pub fn diagonal(entries: &[CycNumber]) -> Self {
        assert!(!entries.is_empty(), "empty diagonal");
        let conductor = entries[0].conductor();
        let n = entries.len();
        let mut m = Self::zeros(n, n, conductor);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        conductor: u32,
        mut f: impl FnMut(usize, usize) -> CycNumber,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            conductor,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn get(&self, r: usize, c: usize) -> &CycNumber {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycNumber) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[CycNumber] {
        &self.data
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols, self.conductor);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] += &(a * b);
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &CycNumber) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut out = Matrix::identity(self.rows, self.conductor);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn diag(&self) -> Vec<CycNumber> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    /// Every column has at most one nonzero entry.
    pub fn is_monomial(&self) -> bool {
        (0..self.cols).all(|c| (0..self.rows).filter(|&r| !self.get(r, c).is_zero()).count() <= 1)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<CycNumber>> = (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        row_reduce(rows, self.cols).1.len()
    }

    /// A basis of `{ v : self · v = 0 }`.
    pub fn nullspace(&self) -> Vec<Vec<CycNumber>> {
        let rows: Vec<Vec<CycNumber>> = (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let (reduced, pivots) = row_reduce(rows, self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![CycNumber::zero(self.conductor); self.cols];
                v[f] = CycNumber::one(self.conductor);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&reduced[row][f];
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix, CycError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let rows: Vec<Vec<CycNumber>> = (0..n)
            .map(|r| {
                let mut row = self.data[r * n..(r + 1) * n].to_vec();
                for c in 0..n {
                    row.push(if r == c {
                        CycNumber::one(self.conductor)
                    } else {
                        CycNumber::zero(self.conductor)
                    });
                }
                row
            })
            .collect();
        let (reduced, pivots) = row_reduce(rows, n);
        if pivots.len() < n {
            return Err(CycError::DivisionByZero);
        }
        Ok(Matrix::from_fn(n, n, self.conductor, |r, c| {
            reduced[r][n + c].clone()
        }))
    }
}

/// Reduced row echelon form on the first `pivot_cols` columns.
/// Returns the nonzero reduced rows and their pivot columns.
fn row_reduce(mut rows: Vec<Vec<CycNumber>>, pivot_cols: usize) -> (Vec<Vec<CycNumber>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..pivot_cols {
        let Some(p) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let inv = rows[top][col].inv().expect("pivot is nonzero");
        for v in rows[top].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, pv) in pivot_row.iter().enumerate() {
                if !pv.is_zero() {
                    row[c] = &row[c] - &(pv * &factor);
                }
            }
        }
        pivots.push(col);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    (rows, pivots)
}

/// Single line, rows in order: `[[a, b], [c, d]]`.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over Q(z_{})", self.rows, self.cols, self.conductor)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::root_of_unity;

    fn int(v: i64) -> CycNumber {
        CycNumber::from_int(4, v)
    }

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_fn(2, 3, 4, |r, c| int((r + 1) as i64 * (c + 1) as i64));
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            for r in 0..2 {
                let mut s = CycNumber::zero(4);
                for c in 0..3 {
                    s += &(m.get(r, c) * &v[c]);
                }
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let i = root_of_unity(4, 1);
        let m = Matrix::from_fn(2, 2, 4, |r, c| match (r, c) {
            (0, 0) => i.clone(),
            (0, 1) => int(1),
            (1, 0) => int(2),
            _ => -&i,
        });
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2, 4));
        let singular = Matrix::from_fn(2, 2, 4, |_, _| int(1));
        assert!(singular.inverse().is_err());
    }

    #[test]
    fn vandermonde_of_roots_is_full_rank() {
        let n = 5;
        let m = Matrix::from_fn(n, n, 25, |r, c| root_of_unity(25, 5 * (r * c) as i64));
        assert_eq!(m.rank(), n);
    }
}
