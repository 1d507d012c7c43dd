use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: (0..rows * cols).map(|_| BigInt::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(1);
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    /// Builds a matrix from rows of machine integers. All rows must have
    /// the same length; an empty slice gives a `0 x 0` matrix.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn diagonal<I: IntoIterator<Item = BigInt>>(diag: I) -> Self {
        let diag: Vec<BigInt> = diag.into_iter().collect();
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &IntMatrix) -> Self {
        let mut k = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = &other[(p, q)];
                        if !b.is_zero() {
                            k[(i * other.rows + p, j * other.cols + q)] = a * b;
                        }
                    }
                }
            }
        }
        k
    }

    /// Stacks `other` below `self`. Column counts must agree.
    pub fn vstack(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Places `other` to the right of `self`. Row counts must agree.
    pub fn hstack(&self, other: &IntMatrix) -> Result<Self> {
        self.transpose()
            .vstack(&other.transpose())
            .map(|m| m.transpose())
            .map_err(|_| Error::Dimension {
                expected: self.rows,
                found: other.rows,
            })
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * &c).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] -= q * row[src]`, starting at column `from`.
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for j in from..self.cols {
            let s = &self.entries[src * self.cols + j];
            if !s.is_zero() {
                let v = s * q;
                self.entries[dst * self.cols + j] -= v;
            }
        }
    }

    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for i in from..self.rows {
            let s = &self.entries[i * self.cols + src];
            if !s.is_zero() {
                let v = s * q;
                self.entries[i * self.cols + dst] -= v;
            }
        }
    }

    /// Position of the nonzero entry of least absolute value in the
    /// trailing submatrix starting at `(t, t)`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = &self[(i, j)];
                if v.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if self[b].abs() <= v.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[BigInt]> = self.entries.chunks(self.cols.max(1)).take(self.rows).collect();
        write!(f, "IntMatrix{{{}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(rows).finish()?;
        f.write_str("}")
    }
}

/// Smith normal form diagonal of `m`.
///
/// Returns `min(rows, cols)` non-negative invariants: the nonzero ones form a
/// divisor chain and zeros trail. Pivots are always the entry of least
/// absolute value in the remaining block.
pub fn snf(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let n = a.rows.min(a.cols);
    let mut diag = Vec::with_capacity(n);

    for t in 0..n {
        let Some((pi, pj)) = a.min_pivot(t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);

        loop {
            let mut dirty = false;

            for i in t + 1..a.rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                a.sub_row(i, t, &q, t);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..a.cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.sub_col(j, t, &q, t);
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }

            if dirty {
                // A remainder survived: it is smaller than the pivot.
                let (pi, pj) = a.min_pivot_in_cross(t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }

            // Row and column are clear; enforce divisibility on the block.
            let pivot = a[(t, t)].clone();
            let offender = (t + 1..a.rows).find(|&i| {
                (t + 1..a.cols).any(|j| !a[(i, j)].is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    a.sub_row(t, i, &minus_one, t);
                }
                None => break,
            }
        }
        diag.push(a[(t, t)].abs());
    }

    while diag.len() < n {
        diag.push(BigInt::zero());
    }
    diag
}

impl IntMatrix {
    /// Least-magnitude nonzero entry on row `t` or column `t`, at or past the
    /// diagonal.
    fn min_pivot_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs: Option<BigInt> = None;
        let candidates = (t..self.rows)
            .map(|i| (i, t))
            .chain((t + 1..self.cols).map(|j| (t, j)));
        for (i, j) in candidates {
            let v = &self[(i, j)];
            if v.is_zero() {
                continue;
            }
            let av = v.abs();
            if best_abs.as_ref().is_none_or(|b| av < *b) {
                best = (i, j);
                best_abs = Some(av);
            }
        }
        best
    }
}
