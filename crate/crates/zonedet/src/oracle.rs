//! Exact and brute-force reference computations.
//!
//! Everything here is an independent check for the sparse pipeline: a dense
//! LU log-determinant, a permutation-sum determinant for tiny orders, power
//! iteration for the spectral radius, and a cyclic complex Jacobi
//! eigensolver for the Hermitian positive-definite regime.

use crate::dense::{lu_factor, DenseMatrix};
use crate::error::{Error, Result};
use crate::logdet::LogDet;
use crate::partition::BlockPartition;
use crate::rng::SplitMix64;
use crate::sparse::ComplexSparseMatrix;
use crate::zone::{RhoEstimate, RhoMethod};
use num_complex::Complex64;

/// Default order cap for dense oracle computations.
pub const DEFAULT_DENSE_CAP: usize = 4096;

/// Order limit for the permutation-sum determinant.
pub const LEIBNIZ_LIMIT: usize = 10;

/// Exact log-determinant by densifying and LU-factoring with partial
/// pivoting. Refuses orders above [`DEFAULT_DENSE_CAP`].
pub fn dense_lu_logdet(m: &ComplexSparseMatrix) -> Result<LogDet> {
    dense_lu_logdet_with_cap(m, DEFAULT_DENSE_CAP)
}

/// Same as [`dense_lu_logdet`] with an explicit order cap.
pub fn dense_lu_logdet_with_cap(m: &ComplexSparseMatrix, cap: usize) -> Result<LogDet> {
    if m.order() > cap {
        return Err(Error::DenseCapExceeded { order: m.order(), cap });
    }
    let factors = lu_factor(DenseMatrix::from_sparse(m), 0.0).map_err(|_| Error::SingularMatrix)?;
    Ok(factors.logdet())
}

/// Brute-force determinant as the signed sum over all permutations.
/// Only sensible for tiny matrices; rejects orders above 10.
pub fn leibniz_det(m: &DenseMatrix) -> Result<Complex64> {
    let n = m.order();
    if n > LEIBNIZ_LIMIT {
        return Err(Error::OrderTooLarge { order: n, limit: LEIBNIZ_LIMIT });
    }
    if n == 0 {
        return Ok(Complex64::ONE);
    }
    fn expand(m: &DenseMatrix, row: usize, free_cols: u32) -> Complex64 {
        let n = m.order();
        if row == n {
            return Complex64::ONE;
        }
        let mut acc = Complex64::ZERO;
        let mut sign = 1.0;
        let mut rest = free_cols;
        while rest != 0 {
            let c = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let a = m.get(row, c);
            if a != Complex64::ZERO {
                acc += sign * a * expand(m, row + 1, free_cols & !(1u32 << c));
            }
            sign = -sign;
        }
        acc
    }
    Ok(expand(m, 0, (1u32 << n) - 1))
}

fn spmv(a: &ComplexSparseMatrix, x: &[Complex64], out: &mut [Complex64]) {
    for r in 0..a.order() {
        let (cols, vals) = a.row(r);
        let mut s = Complex64::ZERO;
        for (&c, &v) in cols.iter().zip(vals.iter()) {
            s += v * x[c];
        }
        out[r] = s;
    }
}

/// Estimate the spectral radius of `A` by power iteration on `A^2`.
///
/// Squaring handles spectra that come in `+/-` pairs (checkerboard
/// structure), where iteration on `A` itself has no dominant eigenvalue.
/// Runs from `seeds` deterministic pseudo-random starts; the value is the
/// square root of the largest Rayleigh-quotient magnitude among converged
/// runs (or among all runs when none converged, flagged accordingly).
pub fn power_iteration_rho(
    a: &ComplexSparseMatrix,
    seeds: usize,
    tol: f64,
    max_iter: usize,
) -> RhoEstimate {
    let n = a.order();
    if n == 0 || a.nnz() == 0 {
        return RhoEstimate { value: 0.0, method: RhoMethod::PowerIteration, converged: true, iterations: 0 };
    }
    let mut best_converged: Option<(f64, usize)> = None;
    let mut best_any: (f64, usize) = (0.0, max_iter);
    let mut tmp = vec![Complex64::ZERO; n];
    let mut y = vec![Complex64::ZERO; n];
    for seed in 0..seeds.max(1) {
        let mut rng = SplitMix64::new(0x5EED + seed as u64);
        let mut x: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.next_f64() - 0.5, rng.next_f64() - 0.5))
            .collect();
        let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in x.iter_mut() {
            *z /= norm;
        }
        let mut prev = f64::INFINITY;
        let mut rayleigh = 0.0f64;
        let mut converged = false;
        let mut used = max_iter;
        for it in 1..=max_iter {
            spmv(a, &x, &mut tmp);
            spmv(a, &tmp, &mut y);
            let ray: Complex64 = x.iter().zip(y.iter()).map(|(xi, yi)| xi.conj() * yi).sum();
            rayleigh = ray.norm();
            let ynorm = y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if ynorm == 0.0 {
                // A^2 annihilated the iterate: nilpotent directions only
                rayleigh = 0.0;
                converged = true;
                used = it;
                break;
            }
            if (rayleigh - prev).abs() <= tol * rayleigh.max(1e-300) {
                converged = true;
                used = it;
                break;
            }
            prev = rayleigh;
            for (xi, yi) in x.iter_mut().zip(y.iter()) {
                *xi = yi / ynorm;
            }
        }
        let value = rayleigh.sqrt();
        if converged && best_converged.is_none_or(|(v, _)| value > v) {
            best_converged = Some((value, used));
        }
        if value > best_any.0 {
            best_any = (value, used);
        }
    }
    match best_converged {
        Some((value, iterations)) => {
            RhoEstimate { value, method: RhoMethod::PowerIteration, converged: true, iterations }
        }
        None => RhoEstimate {
            value: best_any.0,
            method: RhoMethod::PowerIteration,
            converged: false,
            iterations: best_any.1,
        },
    }
}

fn check_dense_hermitian(h: &DenseMatrix, tol: f64) -> Result<()> {
    let n = h.order();
    let mut scale = 0.0f64;
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            scale = scale.max(h.get(i, j).norm());
            worst = worst.max((h.get(i, j) - h.get(j, i).conj()).norm());
        }
    }
    if worst > tol * scale.max(1.0) {
        return Err(Error::NotHermitian);
    }
    Ok(())
}

fn off_diagonal_norm(a: &DenseMatrix) -> f64 {
    let n = a.order();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j).norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic complex Jacobi eigendecomposition of a Hermitian matrix.
/// Returns eigenvalues in diagonal order together with the accumulated
/// unitary (eigenvectors in columns).
fn jacobi_eigendecomposition(h: &DenseMatrix, tol: f64) -> Result<(Vec<f64>, DenseMatrix)> {
    check_dense_hermitian(h, 1e-10)?;
    let n = h.order();
    let mut a = h.clone();
    // enforce exact Hermitian symmetry before sweeping
    for i in 0..n {
        for j in 0..i {
            let avg = 0.5 * (a.get(i, j) + a.get(j, i).conj());
            a.set(i, j, avg);
            a.set(j, i, avg.conj());
        }
        let d = a.get(i, i);
        a.set(i, i, Complex64::new(d.re, 0.0));
    }
    let mut v = DenseMatrix::identity(n);
    let fro = a.frobenius_norm();
    if fro == 0.0 {
        return Ok((vec![0.0; n], v));
    }
    let target = tol * fro;
    for _sweep in 0..100 {
        if off_diagonal_norm(&a) <= target {
            let eigs = (0..n).map(|i| a.get(i, i).re).collect();
            return Ok((eigs, v));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r <= 1e-300 {
                    continue;
                }
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let phase = apq / r;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = (t * c) * phase;
                // A <- G* A G with G = [[c, s], [-conj(s), c]] at (p, q)
                for j in 0..n {
                    let ajp = a.get(j, p);
                    let ajq = a.get(j, q);
                    a.set(j, p, c * ajp - s.conj() * ajq);
                    a.set(j, q, s * ajp + c * ajq);
                }
                for j in 0..n {
                    let apj = a.get(p, j);
                    let aqj = a.get(q, j);
                    a.set(p, j, c * apj - s * aqj);
                    a.set(q, j, s.conj() * apj + c * aqj);
                }
                a.set(p, q, Complex64::ZERO);
                a.set(q, p, Complex64::ZERO);
                let dp = a.get(p, p);
                let dq = a.get(q, q);
                a.set(p, p, Complex64::new(dp.re, 0.0));
                a.set(q, q, Complex64::new(dq.re, 0.0));
                for j in 0..n {
                    let vjp = v.get(j, p);
                    let vjq = v.get(j, q);
                    v.set(j, p, c * vjp - s.conj() * vjq);
                    v.set(j, q, s * vjp + c * vjq);
                }
            }
        }
    }
    Err(Error::ConvergenceFailed)
}

/// Eigenvalues of a Hermitian matrix via cyclic complex Jacobi rotations,
/// sorted ascending.
pub fn hermitian_eigs_jacobi(h: &DenseMatrix, tol: f64) -> Result<Vec<f64>> {
    let (mut eigs, _) = jacobi_eigendecomposition(h, tol)?;
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(eigs)
}

/// Extreme eigenvalues of `M_D^{-1} M_off` for a Hermitian
/// positive-definite `M`: the spectrum equals that of the Hermitian
/// `M_D^{-1/2} M_off M_D^{-1/2}`, which a dense Jacobi solve handles.
/// Returns `(rho, lambda_min)`.
pub fn symmetrized_zone_spectrum(
    m: &ComplexSparseMatrix,
    p: &BlockPartition,
    cap: usize,
) -> Result<(f64, f64)> {
    let n = m.order();
    if n > cap {
        return Err(Error::DenseCapExceeded { order: n, cap });
    }
    p.check_covers(n)?;
    if !m.is_hermitian(1e-10) {
        return Err(Error::NotHermitian);
    }
    let (md, moff) = m.split(p)?;
    if moff.nnz() == 0 {
        return Ok((0.0, 0.0));
    }
    // per-block inverse square roots via block Jacobi eigendecompositions
    let k = p.block_count();
    let mut inv_sqrt: Vec<DenseMatrix> = Vec::with_capacity(k);
    for b in 0..k {
        let range = p.block_range(b);
        let nb = range.len();
        let mut block = DenseMatrix::zeros(nb);
        for r in range.clone() {
            let (cols, vals) = md.row(r);
            for (&c, &v) in cols.iter().zip(vals.iter()) {
                block.set(r - range.start, c - range.start, v);
            }
        }
        let (eigs, u) = jacobi_eigendecomposition(&block, 1e-12)?;
        if eigs.iter().any(|&l| l <= 0.0) {
            return Err(Error::NotPositiveDefinite);
        }
        let mut w = DenseMatrix::zeros(nb);
        for i in 0..nb {
            for j in 0..nb {
                let mut s = Complex64::ZERO;
                for l in 0..nb {
                    s += u.get(i, l) * u.get(j, l).conj() / eigs[l].sqrt();
                }
                w.set(i, j, s);
            }
        }
        inv_sqrt.push(w);
    }
    // S = D^{-1/2} * M_off * D^{-1/2}, assembled densely
    let mut t = DenseMatrix::from_sparse(&moff);
    let mut s = DenseMatrix::zeros(n);
    for b in 0..k {
        let range = p.block_range(b);
        let nb = range.len();
        let w = &inv_sqrt[b];
        for col in 0..n {
            for (li, gi) in range.clone().enumerate() {
                let mut acc = Complex64::ZERO;
                for lj in 0..nb {
                    acc += w.get(li, lj) * t.get(range.start + lj, col);
                }
                s.set(gi, col, acc);
            }
        }
    }
    std::mem::swap(&mut t, &mut s);
    for b in 0..k {
        let range = p.block_range(b);
        let nb = range.len();
        let w = &inv_sqrt[b];
        for row in 0..n {
            for (lj, gj) in range.clone().enumerate() {
                let mut acc = Complex64::ZERO;
                for li in 0..nb {
                    acc += t.get(row, range.start + li) * w.get(li, lj);
                }
                s.set(row, gj, acc);
            }
        }
    }
    let eigs = hermitian_eigs_jacobi(&s, 1e-12)?;
    let rho = eigs.iter().fold(0.0f64, |m, &l| m.max(l.abs()));
    let lambda_min = eigs.first().copied().unwrap_or(0.0);
    Ok((rho, lambda_min))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_logdet() {
        let ld = dense_lu_logdet(&ComplexSparseMatrix::identity(6)).unwrap();
        assert_eq!(ld, LogDet::ZERO);
    }

    #[test]
    fn dense_cap_is_enforced() {
        let m = ComplexSparseMatrix::identity(5);
        assert!(matches!(
            dense_lu_logdet_with_cap(&m, 4),
            Err(Error::DenseCapExceeded { order: 5, cap: 4 })
        ));
    }

    #[test]
    fn leibniz_small_cases() {
        let mut m1 = DenseMatrix::zeros(1);
        m1.set(0, 0, c(3.0, -1.0));
        assert_eq!(leibniz_det(&m1).unwrap(), c(3.0, -1.0));

        // [[1, i/2], [i/2, 1]] has det 1 - (i/2)^2 = 5/4
        let mut m2 = DenseMatrix::zeros(2);
        m2.set(0, 0, c(1.0, 0.0));
        m2.set(0, 1, c(0.0, 0.5));
        m2.set(1, 0, c(0.0, 0.5));
        m2.set(1, 1, c(1.0, 0.0));
        let d = leibniz_det(&m2).unwrap();
        assert!((d - c(1.25, 0.0)).norm() < 1e-15);

        assert!(matches!(
            leibniz_det(&DenseMatrix::zeros(11)),
            Err(Error::OrderTooLarge { order: 11, limit: 10 })
        ));
    }

    #[test]
    fn lu_agrees_with_leibniz() {
        let mut rng = SplitMix64::new(2024);
        for trial in 0..20 {
            let n = 2 + (trial % 7);
            let mut triples = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if rng.next_f64() < 0.7 || i == j {
                        let v = c(rng.next_f64() - 0.5, rng.next_f64() - 0.5);
                        let v = if i == j { v + c(2.0, 0.0) } else { v };
                        triples.push((i, j, v));
                    }
                }
            }
            let m = ComplexSparseMatrix::from_entries(n, &triples).unwrap();
            let lu = dense_lu_logdet(&m).unwrap();
            let brute = leibniz_det(&DenseMatrix::from_sparse(&m)).unwrap();
            let brute_ld = LogDet::from_value(brute);
            assert!(
                lu.distance(&brute_ld) < 1e-10 * brute_ld.ln_abs.abs().max(1.0),
                "trial {trial}: lu {lu:?} vs brute {brute_ld:?}"
            );
        }
    }

    #[test]
    fn power_iteration_on_antidiagonal() {
        // [[0, 1/2], [1/2, 0]] has eigenvalues +/- 1/2
        let a = ComplexSparseMatrix::from_entries(
            2,
            &[(0, 1, c(0.5, 0.0)), (1, 0, c(0.5, 0.0))],
        )
        .unwrap();
        let est = power_iteration_rho(&a, 3, 1e-10, 1000);
        assert!(est.converged);
        assert!((est.value - 0.5).abs() < 1e-6);
    }

    #[test]
    fn power_iteration_on_zero_and_nilpotent() {
        let zero = ComplexSparseMatrix::from_entries(3, &[]).unwrap();
        let est = power_iteration_rho(&zero, 2, 1e-8, 100);
        assert_eq!(est.value, 0.0);
        assert!(est.converged);

        // strictly upper triangular: nilpotent, rho = 0
        let nil = ComplexSparseMatrix::from_entries(
            3,
            &[(0, 1, c(1.0, 0.0)), (1, 2, c(2.0, 0.0))],
        )
        .unwrap();
        let est = power_iteration_rho(&nil, 2, 1e-8, 100);
        assert!(est.value < 1e-8);
    }

    #[test]
    fn jacobi_identity_and_tridiagonal() {
        let eigs = hermitian_eigs_jacobi(&DenseMatrix::identity(4), 1e-12).unwrap();
        for l in eigs {
            assert!((l - 1.0).abs() < 1e-12);
        }

        // tridiag(-1, 2, -1) of order 4: eigenvalues 2 - 2 cos(i pi / 5)
        let mut t = DenseMatrix::zeros(4);
        for i in 0..4 {
            t.set(i, i, c(2.0, 0.0));
            if i > 0 {
                t.set(i, i - 1, c(-1.0, 0.0));
                t.set(i - 1, i, c(-1.0, 0.0));
            }
        }
        let eigs = hermitian_eigs_jacobi(&t, 1e-14).unwrap();
        for (i, l) in eigs.iter().enumerate() {
            let want = 2.0 - 2.0 * ((i + 1) as f64 * std::f64::consts::PI / 5.0).cos();
            assert!((l - want).abs() < 1e-8, "eig {i}: {l} vs {want}");
        }
    }

    #[test]
    fn jacobi_preserves_trace_and_frobenius() {
        let mut rng = SplitMix64::new(99);
        let n = 8;
        let mut h = DenseMatrix::zeros(n);
        for i in 0..n {
            for j in 0..i {
                let v = c(rng.next_f64() - 0.5, rng.next_f64() - 0.5);
                h.set(i, j, v);
                h.set(j, i, v.conj());
            }
            h.set(i, i, c(2.0 * rng.next_f64() - 1.0, 0.0));
        }
        let eigs = hermitian_eigs_jacobi(&h, 1e-14).unwrap();
        let trace: f64 = (0..n).map(|i| h.get(i, i).re).sum();
        let sum: f64 = eigs.iter().sum();
        assert!((trace - sum).abs() < 1e-10 * trace.abs().max(1.0));
        let f2: f64 = h.frobenius_norm().powi(2);
        let e2: f64 = eigs.iter().map(|l| l * l).sum();
        assert!((f2 - e2).abs() < 1e-9 * f2.max(1.0));
    }

    #[test]
    fn jacobi_rejects_non_hermitian() {
        let mut h = DenseMatrix::zeros(2);
        h.set(0, 1, c(1.0, 0.0));
        assert_eq!(hermitian_eigs_jacobi(&h, 1e-12), Err(Error::NotHermitian));
    }

    #[test]
    fn symmetrized_spectrum_examples() {
        // diagonal matrix: no off-diagonal part at all
        let d = ComplexSparseMatrix::from_entries(
            3,
            &[(0, 0, c(2.0, 0.0)), (1, 1, c(3.0, 0.0)), (2, 2, c(4.0, 0.0))],
        )
        .unwrap();
        let (rho, lmin) = symmetrized_zone_spectrum(&d, &BlockPartition::point(3), 128).unwrap();
        assert_eq!((rho, lmin), (0.0, 0.0));

        // [[1, 1/2], [1/2, 1]] with point partition: eigenvalues +/- 1/2
        let m = ComplexSparseMatrix::from_entries(
            2,
            &[
                (0, 0, c(1.0, 0.0)),
                (0, 1, c(0.5, 0.0)),
                (1, 0, c(0.5, 0.0)),
                (1, 1, c(1.0, 0.0)),
            ],
        )
        .unwrap();
        let (rho, lmin) = symmetrized_zone_spectrum(&m, &BlockPartition::point(2), 128).unwrap();
        assert!((rho - 0.5).abs() < 1e-10);
        assert!((lmin + 0.5).abs() < 1e-10);
    }

    #[test]
    fn symmetrized_spectrum_rejects_indefinite_blocks() {
        let m = ComplexSparseMatrix::from_entries(
            2,
            &[
                (0, 0, c(-1.0, 0.0)),
                (1, 1, c(1.0, 0.0)),
                (0, 1, c(0.1, 0.0)),
                (1, 0, c(0.1, 0.0)),
            ],
        )
        .unwrap();
        assert_eq!(
            symmetrized_zone_spectrum(&m, &BlockPartition::point(2), 128),
            Err(Error::NotPositiveDefinite)
        );
    }
}
