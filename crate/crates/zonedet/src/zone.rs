//! The zone determinant expansion and its checkerboard shortcut.
//!
//! For `M = M_D + M_off` with non-singular block diagonal `M_D` and
//! `A = M_D^{-1} M_off`, the expansion produces
//!
//! ```text
//! delta_0 = ln det(M_D)
//! delta_m = delta_{m-1} + ((-1)^{m-1} / m) * trace(A^m)
//! ```
//!
//! which approximates `ln det(M)` with absolute error at most
//! `c * rho^m` whenever `rho = rho(A) < 1`, where `c = -n ln(1 - rho)`.

use crate::blockdiag::block_lu;
use crate::bounds::{bound_constant, gerschgorin_rho_bound};
use crate::error::{Error, Result};
use crate::logdet::LogDet;
use crate::oracle::{power_iteration_rho, symmetrized_zone_spectrum, DEFAULT_DENSE_CAP};
use crate::partition::BlockPartition;
use crate::sparse::ComplexSparseMatrix;
use num_complex::Complex64;

/// Block-parity classification of an equal-block sparsity pattern.
///
/// Odd: entries only between blocks of opposite index parity (all diagonal
/// blocks vanish). Even: entries only between blocks of equal parity.
/// `None`: neither, or the blocks are not equally sized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
    None,
}

impl Parity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
            Parity::None => "none",
        }
    }
}

/// How a spectral radius estimate was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoMethod {
    PowerIteration,
    GerschgorinBound,
    HermitianExact,
    UserSupplied,
}

impl RhoMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            RhoMethod::PowerIteration => "power_iteration",
            RhoMethod::GerschgorinBound => "gerschgorin_bound",
            RhoMethod::HermitianExact => "hermitian_exact",
            RhoMethod::UserSupplied => "user_supplied",
        }
    }
}

/// A spectral radius estimate for `M_D^{-1} M_off`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RhoEstimate {
    pub value: f64,
    pub method: RhoMethod,
    /// May be false only for power iteration.
    pub converged: bool,
    pub iterations: usize,
}

/// Strategy for estimating the spectral radius inside [`zone_expansion`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RhoMode {
    /// Exact Hermitian spectrum when applicable and affordable, otherwise
    /// power iteration, with the Gerschgorin bound as the fallback.
    Auto,
    Power,
    Gerschgorin,
    Hermitian,
    Value(f64),
}

/// Error bounds for one expansion order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrderBounds {
    /// `c * rho^p`, bounding `|ln det(M) - delta_p|`.
    pub abs_log: f64,
    /// `c rho^p e^{c rho^p}`, bounding the relative determinant error.
    pub rel_det: f64,
    /// `(7/4) c rho^p`, available when `c rho^p < 1` strictly.
    pub tight_rel: Option<f64>,
}

/// Options for [`zone_expansion`].
#[derive(Clone, Debug)]
pub struct ZoneOptions {
    /// Highest expansion order `m`.
    pub order: usize,
    pub rho_mode: RhoMode,
    /// Relative pivot tolerance for the block factorization.
    pub pivot_tol: f64,
    /// Cap on the non-zeros of a power accumulator; `None` means
    /// `64 * nnz(M)`.
    pub memory_cap: Option<usize>,
    /// Replaces `n` in the bound constant `c = -n ln(1-rho)` when set.
    /// The tightened value is a heuristic, not a theorem; bounds computed
    /// with it are advisory.
    pub effective_n: Option<usize>,
    /// Order cap for the dense Hermitian spectrum path.
    pub dense_cap: usize,
}

impl Default for ZoneOptions {
    fn default() -> Self {
        ZoneOptions {
            order: 2,
            rho_mode: RhoMode::Auto,
            pivot_tol: crate::blockdiag::DEFAULT_PIVOT_TOL,
            memory_cap: None,
            effective_n: None,
            dense_cap: DEFAULT_DENSE_CAP,
        }
    }
}

impl ZoneOptions {
    pub fn with_order(order: usize) -> Self {
        ZoneOptions { order, ..ZoneOptions::default() }
    }
}

/// In auto mode, the exact Hermitian spectrum is only attempted up to this
/// order; dense Jacobi sweeps grow as n^3 per sweep and stop being a
/// sensible default long before the oracle dense cap.
pub const AUTO_HERMITIAN_CAP: usize = 400;

/// The result of a zone determinant expansion.
#[derive(Clone, Debug)]
pub struct ExpansionReport {
    /// Matrix order.
    pub n: usize,
    /// Highest expansion order.
    pub order: usize,
    /// `ln det(M_D)` with its accumulated phase.
    pub delta0: LogDet,
    /// `delta_p` for `p = 0..=order` as complex numbers
    /// (`re = ln|.|`, `im = phase`).
    pub deltas: Vec<Complex64>,
    /// `trace(A^p)` for `p = 1..=order`. Orders suppressed by checkerboard
    /// parity are recorded as exactly zero.
    pub traces: Vec<Complex64>,
    pub rho: RhoEstimate,
    /// `c = -n ln(1 - rho)`; absent when `rho >= 1`.
    pub c: Option<f64>,
    /// Per-order bounds for `p = 0..=order`; absent when `rho >= 1`.
    pub bounds: Option<Vec<OrderBounds>>,
    /// Checkerboard classification of `M_off`.
    pub checkerboard: Parity,
    /// Odd orders whose traces were suppressed by parity.
    pub skipped_orders: Vec<usize>,
}

impl ExpansionReport {
    /// `delta_p` as a [`LogDet`].
    pub fn delta(&self, p: usize) -> LogDet {
        LogDet::new(self.deltas[p].re, self.deltas[p].im)
    }
}

/// Classify the block sparsity pattern of `M_off` as an odd or even
/// checkerboard. Requires equally sized blocks; returns [`Parity::None`]
/// otherwise. A matrix with no entries counts as even (trivially
/// block-diagonal).
pub fn checkerboard_parity(moff: &ComplexSparseMatrix, p: &BlockPartition) -> Parity {
    if p.order() != moff.order() || p.equal_block_size().is_none() {
        return Parity::None;
    }
    let mut any_same = false;
    let mut any_opposite = false;
    for (r, c, _) in moff.iter() {
        if (p.block_of(r) + p.block_of(c)) % 2 == 0 {
            any_same = true;
        } else {
            any_opposite = true;
        }
        if any_same && any_opposite {
            return Parity::None;
        }
    }
    if any_opposite {
        Parity::Odd
    } else {
        Parity::Even
    }
}

fn estimate_rho(
    m: &ComplexSparseMatrix,
    p: &BlockPartition,
    a: &ComplexSparseMatrix,
    opts: &ZoneOptions,
) -> Result<RhoEstimate> {
    // Gerschgorin disks of A are centered at zero (its block diagonal
    // vanishes), so the maximum absolute row sum bounds rho(A).
    let gersh = || RhoEstimate {
        value: a.norm_inf(),
        method: RhoMethod::GerschgorinBound,
        converged: true,
        iterations: 0,
    };
    match opts.rho_mode {
        RhoMode::Value(x) => {
            if x < 0.0 || !x.is_finite() {
                return Err(Error::InvalidParameter(format!("rho must be finite and non-negative, got {x}")));
            }
            Ok(RhoEstimate { value: x, method: RhoMethod::UserSupplied, converged: true, iterations: 0 })
        }
        RhoMode::Gerschgorin => Ok(gersh()),
        RhoMode::Power => Ok(power_iteration_rho(a, 3, 1e-9, 5000)),
        RhoMode::Hermitian => {
            let (rho, _) = symmetrized_zone_spectrum(m, p, opts.dense_cap)?;
            Ok(RhoEstimate { value: rho, method: RhoMethod::HermitianExact, converged: true, iterations: 0 })
        }
        RhoMode::Auto => {
            if m.order() <= AUTO_HERMITIAN_CAP.min(opts.dense_cap) && m.is_hermitian(1e-10) {
                if let Ok((rho, _)) = symmetrized_zone_spectrum(m, p, opts.dense_cap) {
                    return Ok(RhoEstimate {
                        value: rho,
                        method: RhoMethod::HermitianExact,
                        converged: true,
                        iterations: 0,
                    });
                }
            }
            let est = power_iteration_rho(a, 3, 1e-9, 5000);
            if est.converged {
                Ok(est)
            } else {
                Ok(gersh())
            }
        }
    }
}

/// Run the zone determinant expansion of `M` under the partition `P`.
///
/// The expansion itself is always produced; the error bounds are attached
/// only when the spectral radius estimate is below one (the report records
/// which regime applies). Odd-power traces of an odd-checkerboard `M_off`
/// are still computed (the next even power needs the product), asserted to
/// vanish, and recorded as exactly zero with the order listed in
/// `skipped_orders`.
pub fn zone_expansion(
    m: &ComplexSparseMatrix,
    p: &BlockPartition,
    opts: &ZoneOptions,
) -> Result<ExpansionReport> {
    p.check_covers(m.order())?;
    let n = m.order();
    let (md, moff) = m.split(p)?;
    let factored = block_lu(&md, p, opts.pivot_tol)?;
    let delta0 = factored.logdet();
    let parity = checkerboard_parity(&moff, p);
    let a = factored.solve(&moff)?;
    let a_norm1 = a.norm_one();
    let budget = opts.memory_cap.unwrap_or(64 * m.nnz().max(1));

    let mut deltas = Vec::with_capacity(opts.order + 1);
    let mut traces = Vec::with_capacity(opts.order);
    let mut skipped = Vec::new();
    deltas.push(delta0.as_complex());
    let mut power = a.clone();
    for pord in 1..=opts.order {
        if pord > 1 {
            power = power.sparse_product(&a)?;
        }
        if power.nnz() > budget {
            return Err(Error::MemoryBudgetExceeded { nnz: power.nnz(), budget });
        }
        let t = power.trace();
        let prev = deltas[pord - 1];
        if parity == Parity::Odd && pord % 2 == 1 {
            let threshold = n as f64 * 1e-12 * a_norm1.powi(pord as i32);
            if t.norm() > threshold {
                return Err(Error::CheckerboardTraceNonzero { order: pord, magnitude: t.norm() });
            }
            traces.push(Complex64::ZERO);
            skipped.push(pord);
            deltas.push(prev);
        } else {
            let sign = if pord % 2 == 1 { 1.0 } else { -1.0 };
            traces.push(t);
            deltas.push(prev + t * (sign / pord as f64));
        }
    }

    let rho = estimate_rho(m, p, &a, opts)?;
    let n_eff = opts.effective_n.unwrap_or(n);
    let (c, bounds) = if rho.value < 1.0 {
        let c = bound_constant(n_eff, rho.value)?;
        let per_order = (0..=opts.order)
            .map(|pord| {
                let x = c * rho.value.powi(pord as i32);
                OrderBounds { abs_log: x, rel_det: x * x.exp(), tight_rel: (x < 1.0).then_some(1.75 * x) }
            })
            .collect();
        (Some(c), Some(per_order))
    } else {
        (None, None)
    };

    Ok(ExpansionReport {
        n,
        order: opts.order,
        delta0,
        deltas,
        traces,
        rho,
        c,
        bounds,
        checkerboard: parity,
        skipped_orders: skipped,
    })
}

/// The diagonal (point-partition) approximation: `zone_expansion` with
/// `k = n` and the Gerschgorin spectral radius bound. Requires a fully
/// non-zero diagonal.
pub fn diagonal_approximation(m: &ComplexSparseMatrix, order: usize) -> Result<ExpansionReport> {
    gerschgorin_rho_bound(m)?;
    let opts = ZoneOptions {
        order,
        rho_mode: RhoMode::Gerschgorin,
        ..ZoneOptions::default()
    };
    zone_expansion(m, &BlockPartition::point(m.order()), &opts)
}
