//! A-priori error bounds for pinching and zone determinant approximations.

use crate::error::{Error, Result};
use crate::sparse::ComplexSparseMatrix;

/// The bound constant `c = -n * ln(1 - rho)`, defined for `rho < 1`.
pub fn bound_constant(n: usize, rho: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&rho) {
        return Err(Error::RhoNotLessThanOne(rho));
    }
    Ok(-(n as f64) * (1.0 - rho).ln())
}

/// Absolute bound on the log-determinant error of the order-`order`
/// expansion: `c * rho^order`.
pub fn log_error_bound(n: usize, rho: f64, order: usize) -> Result<f64> {
    Ok(bound_constant(n, rho)? * rho.powi(order as i32))
}

/// Relative determinant error bounds of the order-`order` expansion:
/// the general bound `c*rho^m * exp(c*rho^m)` and, when `c*rho^m < 1`
/// (strictly), the tighter `(7/4) * c * rho^m`.
pub fn det_rel_error_bounds(n: usize, rho: f64, order: usize) -> Result<(f64, Option<f64>)> {
    let x = log_error_bound(n, rho, order)?;
    let general = x * x.exp();
    let tight = (x < 1.0).then_some(1.75 * x);
    Ok((general, tight))
}

/// Relative pinching error bound for the real-spectrum regime:
/// `1 - exp(-n*rho^2 / (1 + lambda_min))`.
///
/// Valid when every eigenvalue of `M_D^{-1} M_off` is real and above -1;
/// the caller attests that (the Hermitian positive-definite case is the
/// sufficient condition this crate can verify).
pub fn pinching_bound_real(n: usize, rho: f64, lambda_min: f64) -> Result<f64> {
    if lambda_min <= -1.0 {
        return Err(Error::EigenvalueBelowMinusOne(lambda_min));
    }
    if rho < lambda_min.abs() || rho < 0.0 {
        return Err(Error::SpectrumInconsistent { rho, lambda_min });
    }
    Ok(1.0 - (-(n as f64) * rho * rho / (1.0 + lambda_min)).exp())
}

/// Gerschgorin upper bound on the spectral radius of `M_D^{-1} M_off` for
/// the point partition: the maximum over rows of `sum_{j != i} |m_ij / m_ii|`.
pub fn gerschgorin_rho_bound(m: &ComplexSparseMatrix) -> Result<f64> {
    let mut worst = 0.0f64;
    for r in 0..m.order() {
        let (cols, vals) = m.row(r);
        let mut diag = 0.0;
        let mut off = 0.0;
        for (&c, &v) in cols.iter().zip(vals.iter()) {
            if c == r {
                diag = v.norm();
            } else {
                off += v.norm();
            }
        }
        if diag == 0.0 {
            return Err(Error::ZeroDiagonal(r));
        }
        worst = worst.max(off / diag);
    }
    Ok(worst)
}
