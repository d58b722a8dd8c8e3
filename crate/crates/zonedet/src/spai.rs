//! Sparse-inverse determinant approximation for Hermitian
//! positive-definite matrices.
//!
//! For principal submatrices `S_i` of the leading minor `M_i` (each
//! containing index `i`), `sigma_i` is the trailing diagonal element of
//! `S_i^{-1}` and the approximation is `sigma = prod_i 1/sigma_i`, which
//! sandwiches the determinant: `det(M) <= sigma <= prod_i m_ii`. Growing
//! any `S_i` can only move `sigma` closer to the determinant.

use crate::error::{Error, Result};
use crate::logdet::LogDet;
use crate::sparse::ComplexSparseMatrix;
use num_complex::Complex64;

/// Per-index principal submatrix patterns: `S_i` is a sorted subset of
/// `{0..=i}` with `max(S_i) = i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaiPattern {
    sets: Vec<Vec<usize>>,
}

impl SpaiPattern {
    /// Validate and adopt explicit index sets.
    pub fn from_sets(sets: Vec<Vec<usize>>) -> Result<Self> {
        for (i, s) in sets.iter().enumerate() {
            if s.last() != Some(&i) {
                return Err(Error::InvalidParameter(format!(
                    "pattern {i} must end with its own index"
                )));
            }
            if !s.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "pattern {i} must be sorted and duplicate-free"
                )));
            }
        }
        Ok(SpaiPattern { sets })
    }

    /// The minimal pattern `S_i = {i}` (yields the Hadamard diagonal
    /// product).
    pub fn diagonal(n: usize) -> Self {
        SpaiPattern { sets: (0..n).map(|i| vec![i]).collect() }
    }

    /// The full leading pattern `S_i = {0..=i}` (yields the exact
    /// determinant).
    pub fn full_lower(n: usize) -> Self {
        SpaiPattern { sets: (0..n).map(|i| (0..=i).collect()).collect() }
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn order(&self) -> usize {
        self.sets.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }
}

/// Per-index pattern from the `level`-step neighbourhood of `i` in the
/// adjacency graph of `M`, restricted to indices `<= i` and truncated to
/// the `cap` largest indices (index `i` is always retained).
pub fn lower_neighbor_pattern(
    m: &ComplexSparseMatrix,
    level: usize,
    cap: usize,
) -> Result<SpaiPattern> {
    if level == 0 {
        return Err(Error::InvalidParameter("pattern level must be at least 1".into()));
    }
    if cap == 0 {
        return Err(Error::InvalidParameter("pattern cap must be at least 1".into()));
    }
    if !m.is_hermitian(1e-10) {
        return Err(Error::NotHermitian);
    }
    let n = m.order();
    // symmetrized adjacency (structure may be one-sided at round-off level)
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (r, c, _) in m.iter() {
        if r != c {
            adj[r].push(c);
            adj[c].push(r);
        }
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }
    let mut sets = Vec::with_capacity(n);
    for i in 0..n {
        let mut member = vec![false; i + 1];
        member[i] = true;
        let mut frontier = vec![i];
        for _ in 0..level {
            let mut next = Vec::new();
            for &u in &frontier {
                for &v in &adj[u] {
                    if v <= i && !member[v] {
                        member[v] = true;
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        let mut set: Vec<usize> = (0..=i).filter(|&j| member[j]).collect();
        if set.len() > cap {
            set.drain(..set.len() - cap);
        }
        sets.push(set);
    }
    Ok(SpaiPattern { sets })
}

/// The outcome of a sparse-inverse determinant approximation.
#[derive(Clone, Debug)]
pub struct SpaiResult {
    /// Trailing inverse diagonal elements `sigma_i` (all positive).
    pub sigmas: Vec<f64>,
    /// `ln sigma` with `sigma = prod_i 1/sigma_i`; the phase is zero.
    pub logdet: LogDet,
    /// `n_i = |S_i|`.
    pub pattern_sizes: Vec<usize>,
}

/// For each `i`, densify `M[S_i, S_i]`, Cholesky-factor it and read
/// `1/sigma_i` off the squared trailing pivot. Fails with the offending
/// index when a submatrix is not positive-definite.
pub fn spai_logdet(m: &ComplexSparseMatrix, pattern: &SpaiPattern) -> Result<SpaiResult> {
    if pattern.order() != m.order() {
        return Err(Error::DimensionMismatch { left: m.order(), right: pattern.order() });
    }
    let mut sigmas = Vec::with_capacity(m.order());
    let mut ln_sigma = 0.0f64;
    for (i, set) in pattern.sets().iter().enumerate() {
        let k = set.len();
        let mut sub = vec![Complex64::ZERO; k * k];
        for (a, &ga) in set.iter().enumerate() {
            let (cols, vals) = m.row(ga);
            for (&gc, &v) in cols.iter().zip(vals.iter()) {
                if let Ok(b) = set.binary_search(&gc) {
                    sub[a * k + b] = v;
                }
            }
        }
        let trailing = cholesky_trailing_pivot(&mut sub, k).ok_or(Error::CholeskyBreakdown(i))?;
        // 1/sigma_i = (L_kk)^2
        sigmas.push(1.0 / (trailing * trailing));
        ln_sigma += 2.0 * trailing.ln();
    }
    let pattern_sizes = pattern.sizes();
    Ok(SpaiResult { sigmas, logdet: LogDet::new(ln_sigma, 0.0), pattern_sizes })
}

/// In-place complex Cholesky `S = L L*`; returns the trailing diagonal
/// pivot of `L`, or `None` on breakdown.
fn cholesky_trailing_pivot(a: &mut [Complex64], k: usize) -> Option<f64> {
    let mut trailing = 0.0f64;
    for j in 0..k {
        let mut d = a[j * k + j].re;
        for r in 0..j {
            d -= a[j * k + r].norm_sqr();
        }
        if !(d > 0.0) || !d.is_finite() {
            return None;
        }
        let ljj = d.sqrt();
        trailing = ljj;
        for i in j + 1..k {
            let mut s = a[i * k + j];
            for r in 0..j {
                s -= a[i * k + r] * a[j * k + r].conj();
            }
            a[i * k + j] = s / ljj;
        }
        a[j * k + j] = Complex64::new(ljj, 0.0);
    }
    Some(trailing)
}

/// `ln prod_i m_ii`: the Hadamard diagonal product in log form. A complex
/// or negative diagonal shows up as a non-zero phase rather than an error;
/// a zero or missing diagonal entry is fatal.
pub fn hadamard_product_logdet(m: &ComplexSparseMatrix) -> Result<LogDet> {
    let mut ld = LogDet::ZERO;
    for i in 0..m.order() {
        let d = m.get(i, i);
        if d == Complex64::ZERO {
            return Err(Error::ZeroDiagonal(i));
        }
        ld += LogDet::from_value(d);
    }
    Ok(ld)
}
