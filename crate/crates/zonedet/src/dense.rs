//! Dense complex matrices and LU factorization with partial pivoting.

use crate::logdet::LogDet;
use crate::sparse::ComplexSparseMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

/// A dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    a: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix { n, a: vec![Complex64::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    pub fn from_sparse(m: &ComplexSparseMatrix) -> Self {
        let mut d = DenseMatrix::zeros(m.order());
        for (r, c, v) in m.iter() {
            d.set(r, c, v);
        }
        d
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.a[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.a[r * self.n + c] = v;
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum absolute column sum.
    pub fn norm_one(&self) -> f64 {
        (0..self.n)
            .map(|c| (0..self.n).map(|r| self.get(r, c).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.a
    }
}

/// Packed LU factors `P*A = L*U` from partial pivoting.
#[derive(Clone, Debug)]
pub struct LuFactors {
    n: usize,
    /// L (unit lower, below the diagonal) and U (upper) packed together.
    lu: Vec<Complex64>,
    /// Row i of the factored matrix came from row `perm[i]` of the input.
    perm: Vec<usize>,
    swaps: usize,
}

/// LU factorization with partial pivoting. Fails with the offending pivot
/// magnitude when it does not exceed `pivot_floor`.
pub fn lu_factor(mut m: DenseMatrix, pivot_floor: f64) -> Result<LuFactors, f64> {
    let n = m.order();
    let a = m.data_mut();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut swaps = 0usize;
    for k in 0..n {
        let mut piv = k;
        let mut best = a[k * n + k].norm();
        for i in k + 1..n {
            let mag = a[i * n + k].norm();
            if mag > best {
                best = mag;
                piv = i;
            }
        }
        if !(best > pivot_floor) {
            return Err(best);
        }
        if piv != k {
            for c in 0..n {
                a.swap(k * n + c, piv * n + c);
            }
            perm.swap(k, piv);
            swaps += 1;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let factor = a[i * n + k] / pivot;
            a[i * n + k] = factor;
            if factor != Complex64::ZERO {
                for c in k + 1..n {
                    let akc = a[k * n + c];
                    a[i * n + c] -= factor * akc;
                }
            }
        }
    }
    Ok(LuFactors { n, lu: m.a, perm, swaps })
}

impl LuFactors {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Log-determinant from the pivots: magnitudes into `ln_abs`, principal
    /// pivot arguments summed into `phase`, plus `pi` for odd swap parity.
    pub fn logdet(&self) -> LogDet {
        let n = self.n;
        let mut ln_abs = 0.0;
        let mut phase = if self.swaps % 2 == 1 { PI } else { 0.0 };
        for k in 0..n {
            let u = self.lu[k * n + k];
            ln_abs += u.norm().ln();
            phase += u.arg();
        }
        LogDet::new(ln_abs, phase)
    }

    /// Solve `A x = b` in place using the stored factors.
    pub fn solve_in_place(&self, b: &mut [Complex64]) {
        let n = self.n;
        debug_assert_eq!(b.len(), n);
        let mut x: Vec<Complex64> = (0..n).map(|i| b[self.perm[i]]).collect();
        // forward substitution with unit lower factor
        for i in 1..n {
            let mut s = x[i];
            for j in 0..i {
                s -= self.lu[i * n + j] * x[j];
            }
            x[i] = s;
        }
        // back substitution
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= self.lu[i * n + j] * x[j];
            }
            x[i] = s / self.lu[i * n + i];
        }
        b.copy_from_slice(&x);
    }

    /// Reconstruct the factored matrix (for verification): `P^T * L * U`.
    pub fn reconstruct(&self) -> DenseMatrix {
        let n = self.n;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex64::ZERO;
                let kmax = i.min(j);
                for k in 0..=kmax {
                    let l = if k == i { Complex64::ONE } else { self.lu[i * n + k] };
                    if k <= j {
                        s += l * self.lu[k * n + j];
                    }
                }
                out.set(self.perm[i], j, s);
            }
        }
        out
    }
}
