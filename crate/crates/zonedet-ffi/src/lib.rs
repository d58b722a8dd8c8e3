//! C ABI for the zonedet library.
//!
//! Matrices and expansion reports are opaque handles created and destroyed
//! through this interface; every fallible call returns a [`ZdStatus`] and
//! writes results through out-pointers. The header `include/zonedet.h` is
//! generated by cbindgen at build time.
//!
//! Thread safety: handles are immutable after creation and may be shared
//! across threads; freeing a handle while another thread uses it is
//! undefined behaviour, as usual.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use zonedet::oracle::{dense_lu_logdet_with_cap, DEFAULT_DENSE_CAP};
use zonedet::{
    hadamard_product_logdet, lower_neighbor_pattern, read_matrix_market, spai_logdet,
    write_matrix_market, zone_expansion, BlockPartition, Complex64, ComplexSparseMatrix, Error,
    ExpansionReport, Parity, RhoMethod, RhoMode, ZoneOptions,
};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    SingularBlock = 4,
    NotHermitian = 5,
    NotPositiveDefinite = 6,
    CholeskyBreakdown = 7,
    DenseCapExceeded = 8,
    MemoryBudgetExceeded = 9,
    ZeroDiagonal = 10,
    RhoNotLessThanOne = 11,
    IoError = 12,
    Panic = 13,
}

/// Opaque sparse matrix handle.
pub struct ZdMatrix {
    inner: ComplexSparseMatrix,
}

/// Opaque zone expansion report handle.
pub struct ZdReport {
    inner: ExpansionReport,
}

/// Spectral radius estimation mode for [`zd_zone_expansion`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZdRhoMode {
    Auto = 0,
    Power = 1,
    Gerschgorin = 2,
    Hermitian = 3,
    /// Uses the `rho_value` argument.
    Value = 4,
}

/// How the spectral radius estimate of a report was obtained.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZdRhoMethod {
    PowerIteration = 0,
    GerschgorinBound = 1,
    HermitianExact = 2,
    UserSupplied = 3,
}

/// Checkerboard classification of the off-diagonal part.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZdParity {
    Odd = 0,
    Even = 1,
    None = 2,
}

fn status_of(err: &Error) -> ZdStatus {
    match err {
        Error::Parse { .. } | Error::UnsupportedFormat(_) => ZdStatus::ParseError,
        Error::SingularBlock { .. } | Error::SingularMatrix => ZdStatus::SingularBlock,
        Error::NotHermitian => ZdStatus::NotHermitian,
        Error::NotPositiveDefinite => ZdStatus::NotPositiveDefinite,
        Error::CholeskyBreakdown(_) => ZdStatus::CholeskyBreakdown,
        Error::DenseCapExceeded { .. } => ZdStatus::DenseCapExceeded,
        Error::MemoryBudgetExceeded { .. } => ZdStatus::MemoryBudgetExceeded,
        Error::ZeroDiagonal(_) => ZdStatus::ZeroDiagonal,
        Error::RhoNotLessThanOne(_) => ZdStatus::RhoNotLessThanOne,
        _ => ZdStatus::InvalidArgument,
    }
}

/// A short static description of a status code.
#[no_mangle]
pub extern "C" fn zd_status_message(status: ZdStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        ZdStatus::Ok => b"ok\0",
        ZdStatus::NullPointer => b"null pointer argument\0",
        ZdStatus::InvalidArgument => b"invalid argument\0",
        ZdStatus::ParseError => b"Matrix Market parse error or unsupported format\0",
        ZdStatus::SingularBlock => b"singular matrix or diagonal block\0",
        ZdStatus::NotHermitian => b"matrix is not Hermitian\0",
        ZdStatus::NotPositiveDefinite => b"matrix is not positive-definite\0",
        ZdStatus::CholeskyBreakdown => b"Cholesky breakdown: not positive-definite on pattern\0",
        ZdStatus::DenseCapExceeded => b"order exceeds the dense cap\0",
        ZdStatus::MemoryBudgetExceeded => b"power accumulator exceeded the memory budget\0",
        ZdStatus::ZeroDiagonal => b"zero or missing diagonal entry\0",
        ZdStatus::RhoNotLessThanOne => b"spectral radius is not below one\0",
        ZdStatus::IoError => b"file I/O error\0",
        ZdStatus::Panic => b"internal panic\0",
    };
    msg.as_ptr() as *const c_char
}

fn guard<F: FnOnce() -> ZdStatus>(f: F) -> ZdStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(ZdStatus::Panic)
}

unsafe fn matrix_out(out: *mut *mut ZdMatrix, m: ComplexSparseMatrix) -> ZdStatus {
    *out = Box::into_raw(Box::new(ZdMatrix { inner: m }));
    ZdStatus::Ok
}

/// Build a matrix from 0-based coordinate triples; duplicates are summed.
///
/// # Safety
/// `rows`, `cols`, `re`, `im` must point to `nnz` readable elements and
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_matrix_from_entries(
    order: usize,
    nnz: usize,
    rows: *const usize,
    cols: *const usize,
    re: *const f64,
    im: *const f64,
    out: *mut *mut ZdMatrix,
) -> ZdStatus {
    if out.is_null() || (nnz > 0 && (rows.is_null() || cols.is_null() || re.is_null() || im.is_null())) {
        return ZdStatus::NullPointer;
    }
    guard(|| {
        let rows = if nnz == 0 { &[][..] } else { std::slice::from_raw_parts(rows, nnz) };
        let cols = if nnz == 0 { &[][..] } else { std::slice::from_raw_parts(cols, nnz) };
        let re = if nnz == 0 { &[][..] } else { std::slice::from_raw_parts(re, nnz) };
        let im = if nnz == 0 { &[][..] } else { std::slice::from_raw_parts(im, nnz) };
        let triples: Vec<(usize, usize, Complex64)> = (0..nnz)
            .map(|i| (rows[i], cols[i], Complex64::new(re[i], im[i])))
            .collect();
        match ComplexSparseMatrix::from_entries(order, &triples) {
            Ok(m) => matrix_out(out, m),
            Err(e) => status_of(&e),
        }
    })
}

/// Read a Matrix Market coordinate file.
///
/// # Safety
/// `path` must be a NUL-terminated string, `out` a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_matrix_read_file(
    path: *const c_char,
    out: *mut *mut ZdMatrix,
) -> ZdStatus {
    if path.is_null() || out.is_null() {
        return ZdStatus::NullPointer;
    }
    guard(|| {
        let Ok(path) = CStr::from_ptr(path).to_str() else {
            return ZdStatus::InvalidArgument;
        };
        let Ok(text) = std::fs::read_to_string(path) else {
            return ZdStatus::IoError;
        };
        match read_matrix_market(&text) {
            Ok(m) => matrix_out(out, m),
            Err(e) => status_of(&e),
        }
    })
}

/// Write a matrix as `complex general` Matrix Market text.
///
/// # Safety
/// `matrix` must be a live handle; `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn zd_matrix_write_file(
    matrix: *const ZdMatrix,
    path: *const c_char,
) -> ZdStatus {
    if matrix.is_null() || path.is_null() {
        return ZdStatus::NullPointer;
    }
    guard(|| {
        let Ok(path) = CStr::from_ptr(path).to_str() else {
            return ZdStatus::InvalidArgument;
        };
        let text = write_matrix_market(&(*matrix).inner, &[]);
        match std::fs::write(path, text) {
            Ok(_) => ZdStatus::Ok,
            Err(_) => ZdStatus::IoError,
        }
    })
}

/// Matrix order `n`.
///
/// # Safety
/// `matrix` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zd_matrix_order(matrix: *const ZdMatrix) -> usize {
    if matrix.is_null() {
        return 0;
    }
    (*matrix).inner.order()
}

/// Number of stored non-zero entries.
///
/// # Safety
/// `matrix` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zd_matrix_nnz(matrix: *const ZdMatrix) -> usize {
    if matrix.is_null() {
        return 0;
    }
    (*matrix).inner.nnz()
}

/// Whether `||M - M*||_1 <= tol * ||M||_1`.
///
/// # Safety
/// `matrix` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zd_matrix_is_hermitian(matrix: *const ZdMatrix, tol: f64) -> bool {
    if matrix.is_null() {
        return false;
    }
    (*matrix).inner.is_hermitian(tol)
}

/// Release a matrix handle (accepts NULL).
///
/// # Safety
/// `matrix` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn zd_matrix_free(matrix: *mut ZdMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

/// 2-D Poisson matrix of order `m*m` (`m >= 2`).
///
/// # Safety
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_generate_laplacian_2d(m: usize, out: *mut *mut ZdMatrix) -> ZdStatus {
    if out.is_null() {
        return ZdStatus::NullPointer;
    }
    if m < 2 {
        return ZdStatus::InvalidArgument;
    }
    guard(|| matrix_out(out, zonedet::generators::laplacian_2d(m)))
}

/// Symmetric tridiagonal Toeplitz matrix (`n >= 1`).
///
/// # Safety
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_generate_toeplitz(
    n: usize,
    a: f64,
    b: f64,
    out: *mut *mut ZdMatrix,
) -> ZdStatus {
    if out.is_null() {
        return ZdStatus::NullPointer;
    }
    if n < 1 || !a.is_finite() || !b.is_finite() {
        return ZdStatus::InvalidArgument;
    }
    guard(|| matrix_out(out, zonedet::generators::toeplitz_tridiag(n, a, b)))
}

/// Block diagonal of T_3 blocks (`n` a positive multiple of 3).
///
/// # Safety
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_generate_block_t3(n: usize, out: *mut *mut ZdMatrix) -> ZdStatus {
    if out.is_null() {
        return ZdStatus::NullPointer;
    }
    if n == 0 || n % 3 != 0 {
        return ZdStatus::InvalidArgument;
    }
    guard(|| matrix_out(out, zonedet::generators::block_t3(n)))
}

/// Seeded bipartite zone matrix (`k` even and >= 2, `block_size >= 1`).
///
/// # Safety
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_generate_checkerboard(
    k: usize,
    block_size: usize,
    coupling_scale: f64,
    seed: u64,
    out: *mut *mut ZdMatrix,
) -> ZdStatus {
    if out.is_null() {
        return ZdStatus::NullPointer;
    }
    if k < 2 || k % 2 != 0 || block_size == 0 || !(coupling_scale >= 0.0) {
        return ZdStatus::InvalidArgument;
    }
    guard(|| {
        matrix_out(
            out,
            zonedet::generators::random_checkerboard(k, block_size, coupling_scale, seed),
        )
    })
}

/// Seeded Hermitian positive-definite matrix `B*B + dominance*I`.
///
/// # Safety
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_generate_hpd(
    n: usize,
    seed: u64,
    dominance: f64,
    out: *mut *mut ZdMatrix,
) -> ZdStatus {
    if out.is_null() {
        return ZdStatus::NullPointer;
    }
    if n == 0 || !(dominance >= 0.0) {
        return ZdStatus::InvalidArgument;
    }
    guard(|| matrix_out(out, zonedet::generators::hpd_random(n, seed, dominance)))
}

/// Seeded strictly row diagonally dominant matrix.
///
/// # Safety
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_generate_diag_dominant(
    n: usize,
    seed: u64,
    margin: f64,
    out: *mut *mut ZdMatrix,
) -> ZdStatus {
    if out.is_null() {
        return ZdStatus::NullPointer;
    }
    if n == 0 || !(margin > 0.0) {
        return ZdStatus::InvalidArgument;
    }
    guard(|| matrix_out(out, zonedet::generators::diag_dominant_random(n, seed, margin)))
}

/// The 2x2 example `[[1, alpha], [alpha, 1]]`.
///
/// # Safety
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_generate_example_2x2(
    alpha_re: f64,
    alpha_im: f64,
    out: *mut *mut ZdMatrix,
) -> ZdStatus {
    if out.is_null() {
        return ZdStatus::NullPointer;
    }
    if !alpha_re.is_finite() || !alpha_im.is_finite() {
        return ZdStatus::InvalidArgument;
    }
    guard(|| {
        matrix_out(
            out,
            zonedet::generators::example_2x2(Complex64::new(alpha_re, alpha_im)),
        )
    })
}

/// Run the zone determinant expansion.
///
/// `offsets` is the full partition offsets list (`0, ..., n`) with
/// `offsets_len` elements. `rho_value` is only read for
/// [`ZdRhoMode::Value`]. On success `*out` owns the report.
///
/// # Safety
/// `matrix` must be a live handle, `offsets` readable for `offsets_len`
/// elements, `out` a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_zone_expansion(
    matrix: *const ZdMatrix,
    offsets: *const usize,
    offsets_len: usize,
    order: usize,
    rho_mode: ZdRhoMode,
    rho_value: f64,
    pivot_tol: f64,
    out: *mut *mut ZdReport,
) -> ZdStatus {
    if matrix.is_null() || offsets.is_null() || out.is_null() {
        return ZdStatus::NullPointer;
    }
    guard(|| {
        let offsets = std::slice::from_raw_parts(offsets, offsets_len).to_vec();
        let partition = match BlockPartition::from_offsets(offsets) {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        let mode = match rho_mode {
            ZdRhoMode::Auto => RhoMode::Auto,
            ZdRhoMode::Power => RhoMode::Power,
            ZdRhoMode::Gerschgorin => RhoMode::Gerschgorin,
            ZdRhoMode::Hermitian => RhoMode::Hermitian,
            ZdRhoMode::Value => {
                if !(rho_value >= 0.0) || !rho_value.is_finite() {
                    return ZdStatus::InvalidArgument;
                }
                RhoMode::Value(rho_value)
            }
        };
        let opts = ZoneOptions { order, rho_mode: mode, pivot_tol, ..ZoneOptions::default() };
        match zone_expansion(&(*matrix).inner, &partition, &opts) {
            Ok(report) => {
                *out = Box::into_raw(Box::new(ZdReport { inner: report }));
                ZdStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Highest order of a report.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zd_report_order(report: *const ZdReport) -> usize {
    if report.is_null() {
        return 0;
    }
    (*report).inner.order
}

/// `delta_p` of a report (`p <= order`).
///
/// # Safety
/// `report` must be a live handle; `re`/`im` valid out-pointers.
#[no_mangle]
pub unsafe extern "C" fn zd_report_delta(
    report: *const ZdReport,
    p: usize,
    re: *mut f64,
    im: *mut f64,
) -> ZdStatus {
    if report.is_null() || re.is_null() || im.is_null() {
        return ZdStatus::NullPointer;
    }
    let r = &(*report).inner;
    if p > r.order {
        return ZdStatus::InvalidArgument;
    }
    *re = r.deltas[p].re;
    *im = r.deltas[p].im;
    ZdStatus::Ok
}

/// `trace(A^p)` of a report (`1 <= p <= order`). Orders suppressed by
/// checkerboard parity read as exactly zero.
///
/// # Safety
/// `report` must be a live handle; `re`/`im` valid out-pointers.
#[no_mangle]
pub unsafe extern "C" fn zd_report_trace(
    report: *const ZdReport,
    p: usize,
    re: *mut f64,
    im: *mut f64,
) -> ZdStatus {
    if report.is_null() || re.is_null() || im.is_null() {
        return ZdStatus::NullPointer;
    }
    let r = &(*report).inner;
    if p == 0 || p > r.order {
        return ZdStatus::InvalidArgument;
    }
    *re = r.traces[p - 1].re;
    *im = r.traces[p - 1].im;
    ZdStatus::Ok
}

/// Spectral radius estimate of a report.
///
/// # Safety
/// `report` must be a live handle; out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn zd_report_rho(
    report: *const ZdReport,
    value: *mut f64,
    method: *mut ZdRhoMethod,
    converged: *mut bool,
    iterations: *mut usize,
) -> ZdStatus {
    if report.is_null()
        || value.is_null()
        || method.is_null()
        || converged.is_null()
        || iterations.is_null()
    {
        return ZdStatus::NullPointer;
    }
    let rho = (*report).inner.rho;
    *value = rho.value;
    *method = match rho.method {
        RhoMethod::PowerIteration => ZdRhoMethod::PowerIteration,
        RhoMethod::GerschgorinBound => ZdRhoMethod::GerschgorinBound,
        RhoMethod::HermitianExact => ZdRhoMethod::HermitianExact,
        RhoMethod::UserSupplied => ZdRhoMethod::UserSupplied,
    };
    *converged = rho.converged;
    *iterations = rho.iterations;
    ZdStatus::Ok
}

/// Error bounds at order `p`; fails with `RhoNotLessThanOne` when the
/// report carries no bounds. `*has_tight` says whether `*tight_rel` is
/// meaningful (`c * rho^p < 1`).
///
/// # Safety
/// `report` must be a live handle; out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn zd_report_bound(
    report: *const ZdReport,
    p: usize,
    abs_log: *mut f64,
    rel_det: *mut f64,
    tight_rel: *mut f64,
    has_tight: *mut bool,
) -> ZdStatus {
    if report.is_null()
        || abs_log.is_null()
        || rel_det.is_null()
        || tight_rel.is_null()
        || has_tight.is_null()
    {
        return ZdStatus::NullPointer;
    }
    let r = &(*report).inner;
    if p > r.order {
        return ZdStatus::InvalidArgument;
    }
    match &r.bounds {
        Some(bounds) => {
            *abs_log = bounds[p].abs_log;
            *rel_det = bounds[p].rel_det;
            *has_tight = bounds[p].tight_rel.is_some();
            *tight_rel = bounds[p].tight_rel.unwrap_or(0.0);
            ZdStatus::Ok
        }
        None => ZdStatus::RhoNotLessThanOne,
    }
}

/// Checkerboard classification of the report's off-diagonal part.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zd_report_checkerboard(report: *const ZdReport) -> ZdParity {
    if report.is_null() {
        return ZdParity::None;
    }
    match (*report).inner.checkerboard {
        Parity::Odd => ZdParity::Odd,
        Parity::Even => ZdParity::Even,
        Parity::None => ZdParity::None,
    }
}

/// Whether order `p` was suppressed by checkerboard parity.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn zd_report_is_skipped(report: *const ZdReport, p: usize) -> bool {
    if report.is_null() {
        return false;
    }
    (*report).inner.skipped_orders.contains(&p)
}

/// Release a report handle (accepts NULL).
///
/// # Safety
/// `report` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn zd_report_free(report: *mut ZdReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Exact dense LU log-determinant (`cap = 0` means the default cap).
///
/// # Safety
/// `matrix` must be a live handle; out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn zd_exact_logdet(
    matrix: *const ZdMatrix,
    cap: usize,
    ln_abs: *mut f64,
    phase: *mut f64,
) -> ZdStatus {
    if matrix.is_null() || ln_abs.is_null() || phase.is_null() {
        return ZdStatus::NullPointer;
    }
    guard(|| {
        let cap = if cap == 0 { DEFAULT_DENSE_CAP } else { cap };
        match dense_lu_logdet_with_cap(&(*matrix).inner, cap) {
            Ok(ld) => {
                *ln_abs = ld.ln_abs;
                *phase = ld.phase;
                ZdStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Sparse-inverse determinant approximation with the level-`level`
/// lower-neighbour pattern. On Cholesky breakdown the offending index is
/// written to `*breakdown_index`.
///
/// # Safety
/// `matrix` must be a live handle; out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn zd_spai_logdet(
    matrix: *const ZdMatrix,
    level: usize,
    cap: usize,
    ln_sigma: *mut f64,
    breakdown_index: *mut usize,
) -> ZdStatus {
    if matrix.is_null() || ln_sigma.is_null() || breakdown_index.is_null() {
        return ZdStatus::NullPointer;
    }
    guard(|| {
        *breakdown_index = usize::MAX;
        let pattern = match lower_neighbor_pattern(&(*matrix).inner, level, cap) {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        match spai_logdet(&(*matrix).inner, &pattern) {
            Ok(result) => {
                *ln_sigma = result.logdet.ln_abs;
                ZdStatus::Ok
            }
            Err(Error::CholeskyBreakdown(i)) => {
                *breakdown_index = i;
                ZdStatus::CholeskyBreakdown
            }
            Err(e) => status_of(&e),
        }
    })
}

/// `ln prod_i m_ii` with its accumulated phase.
///
/// # Safety
/// `matrix` must be a live handle; out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn zd_hadamard_logdet(
    matrix: *const ZdMatrix,
    ln_abs: *mut f64,
    phase: *mut f64,
) -> ZdStatus {
    if matrix.is_null() || ln_abs.is_null() || phase.is_null() {
        return ZdStatus::NullPointer;
    }
    guard(|| match hadamard_product_logdet(&(*matrix).inner) {
        Ok(ld) => {
            *ln_abs = ld.ln_abs;
            *phase = ld.phase;
            ZdStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Gerschgorin upper bound on the point-partition spectral radius.
///
/// # Safety
/// `matrix` must be a live handle; `out` a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_gerschgorin_rho_bound(
    matrix: *const ZdMatrix,
    out: *mut f64,
) -> ZdStatus {
    if matrix.is_null() || out.is_null() {
        return ZdStatus::NullPointer;
    }
    guard(|| match zonedet::gerschgorin_rho_bound(&(*matrix).inner) {
        Ok(v) => {
            *out = v;
            ZdStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// `c * rho^order` with `c = -n ln(1 - rho)`.
///
/// # Safety
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_log_error_bound(
    n: usize,
    rho: f64,
    order: usize,
    out: *mut f64,
) -> ZdStatus {
    if out.is_null() {
        return ZdStatus::NullPointer;
    }
    match zonedet::log_error_bound(n, rho, order) {
        Ok(v) => {
            *out = v;
            ZdStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Relative determinant bounds; `*has_tight` says whether `*tight` holds.
///
/// # Safety
/// Out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn zd_det_rel_error_bounds(
    n: usize,
    rho: f64,
    order: usize,
    general: *mut f64,
    tight: *mut f64,
    has_tight: *mut bool,
) -> ZdStatus {
    if general.is_null() || tight.is_null() || has_tight.is_null() {
        return ZdStatus::NullPointer;
    }
    match zonedet::det_rel_error_bounds(n, rho, order) {
        Ok((g, t)) => {
            *general = g;
            *has_tight = t.is_some();
            *tight = t.unwrap_or(0.0);
            ZdStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Real-spectrum pinching bound `1 - exp(-n rho^2 / (1 + lambda_min))`.
///
/// # Safety
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn zd_pinching_bound_real(
    n: usize,
    rho: f64,
    lambda_min: f64,
    out: *mut f64,
) -> ZdStatus {
    if out.is_null() {
        return ZdStatus::NullPointer;
    }
    match zonedet::pinching_bound_real(n, rho, lambda_min) {
        Ok(v) => {
            *out = v;
            ZdStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
