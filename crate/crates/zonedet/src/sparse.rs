//! Complex sparse matrices in compressed row form.

use crate::error::{Error, Result};
use crate::partition::BlockPartition;
use num_complex::Complex64;

/// Magnitude below which products drop an accumulated entry.
pub const PRODUCT_DROP_TOL: f64 = 1e-300;

/// A square sparse matrix of complex entries, canonicalized to compressed
/// row-major form at construction.
///
/// Indices are 0-based. Entry iteration order is deterministic: by row,
/// then by column. Values are immutable after construction.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexSparseMatrix {
    order: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<Complex64>,
}

impl ComplexSparseMatrix {
    /// Build from coordinate triples. Duplicate positions are summed; sums
    /// that cancel to exactly zero are dropped.
    pub fn from_entries(order: usize, triples: &[(usize, usize, Complex64)]) -> Result<Self> {
        for &(row, col, v) in triples {
            if row >= order || col >= order {
                return Err(Error::IndexOutOfRange { row, col, order });
            }
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteValue { row, col });
            }
        }
        let mut sorted: Vec<(usize, usize, Complex64)> = triples.to_vec();
        sorted.sort_by_key(|&(r, c, _)| (r, c));

        let mut row_ptr = vec![0usize; order + 1];
        let mut cols = Vec::with_capacity(sorted.len());
        let mut vals = Vec::with_capacity(sorted.len());
        let mut it = sorted.into_iter().peekable();
        while let Some((r, c, mut v)) = it.next() {
            while let Some(&(r2, c2, v2)) = it.peek() {
                if r2 == r && c2 == c {
                    v += v2;
                    it.next();
                } else {
                    break;
                }
            }
            if v != Complex64::ZERO {
                row_ptr[r + 1] += 1;
                cols.push(c);
                vals.push(v);
            }
        }
        for r in 0..order {
            row_ptr[r + 1] += row_ptr[r];
        }
        Ok(ComplexSparseMatrix { order, row_ptr, cols, vals })
    }

    /// The identity matrix of the given order.
    pub fn identity(order: usize) -> Self {
        ComplexSparseMatrix {
            order,
            row_ptr: (0..=order).collect(),
            cols: (0..order).collect(),
            vals: vec![Complex64::ONE; order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    /// Column indices and values of row `r`.
    pub fn row(&self, r: usize) -> (&[usize], &[Complex64]) {
        let range = self.row_ptr[r]..self.row_ptr[r + 1];
        (&self.cols[range.clone()], &self.vals[range])
    }

    /// The stored value at `(row, col)`, or zero.
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        let (cols, vals) = self.row(row);
        match cols.binary_search(&col) {
            Ok(k) => vals[k],
            Err(_) => Complex64::ZERO,
        }
    }

    /// Deterministic row-major iteration over stored entries.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..self.order).flat_map(move |r| {
            let (cols, vals) = self.row(r);
            cols.iter().zip(vals.iter()).map(move |(&c, &v)| (r, c, v))
        })
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Complex64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Induced 1-norm: maximum absolute column sum.
    pub fn norm_one(&self) -> f64 {
        let mut col_sums = vec![0.0f64; self.order];
        for (_, c, v) in self.iter() {
            col_sums[c] += v.norm();
        }
        col_sums.into_iter().fold(0.0, f64::max)
    }

    /// Induced infinity-norm: maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.order)
            .map(|r| self.row(r).1.iter().map(|v| v.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Conjugate transpose.
    pub fn conjugate_transpose(&self) -> Self {
        let triples: Vec<_> = self.iter().map(|(r, c, v)| (c, r, v.conj())).collect();
        ComplexSparseMatrix::from_entries(self.order, &triples)
            .expect("transposing preserves validity")
    }

    /// Entrywise difference `self - other`.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch { left: self.order, right: other.order });
        }
        let mut triples: Vec<_> = self.iter().collect();
        triples.extend(other.iter().map(|(r, c, v)| (r, c, -v)));
        ComplexSparseMatrix::from_entries(self.order, &triples)
    }

    /// True iff `||M - M*||_1 <= tol * ||M||_1`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        let diff = self
            .sub(&self.conjugate_transpose())
            .expect("orders match by construction");
        diff.norm_one() <= tol * self.norm_one()
    }

    /// Exact sparse product `self * other`. Accumulated entries of
    /// magnitude below [`PRODUCT_DROP_TOL`] are dropped.
    pub fn sparse_product(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch { left: self.order, right: other.order });
        }
        let n = self.order;
        let mut acc = vec![Complex64::ZERO; n];
        let mut marker = vec![usize::MAX; n];
        let mut row_ptr = vec![0usize; n + 1];
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        for r in 0..n {
            let (rc, rv) = self.row(r);
            let mut touched: Vec<usize> = Vec::new();
            for (&k, &a) in rc.iter().zip(rv.iter()) {
                let (kc, kv) = other.row(k);
                for (&c, &b) in kc.iter().zip(kv.iter()) {
                    if marker[c] != r {
                        marker[c] = r;
                        acc[c] = Complex64::ZERO;
                        touched.push(c);
                    }
                    acc[c] += a * b;
                }
            }
            touched.sort_unstable();
            for c in touched {
                let v = acc[c];
                if v.norm() >= PRODUCT_DROP_TOL {
                    cols.push(c);
                    vals.push(v);
                }
            }
            row_ptr[r + 1] = cols.len();
        }
        Ok(ComplexSparseMatrix { order: n, row_ptr, cols, vals })
    }

    /// Decompose `M = M_D + M_off` with respect to a block partition:
    /// `M_D` keeps the entries whose row and column fall in the same block,
    /// `M_off` everything else.
    pub fn split(&self, p: &BlockPartition) -> Result<(Self, Self)> {
        p.check_covers(self.order)?;
        let mut diag = Vec::new();
        let mut off = Vec::new();
        for (r, c, v) in self.iter() {
            if p.block_of(r) == p.block_of(c) {
                diag.push((r, c, v));
            } else {
                off.push((r, c, v));
            }
        }
        Ok((
            ComplexSparseMatrix::from_entries(self.order, &diag)?,
            ComplexSparseMatrix::from_entries(self.order, &off)?,
        ))
    }
}
