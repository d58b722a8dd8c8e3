//! Determinant and log-determinant approximation for sparse complex
//! matrices.
//!
//! The core pipeline factors `det(M) = det(M_D) * det(I + M_D^{-1} M_off)`
//! over a block partition and expands the logarithm of the second factor as
//! a trace series (the zone determinant expansion), with a-priori error
//! bounds driven by the spectral radius of `M_D^{-1} M_off`. A competing
//! sparse-inverse determinant approximation, closed-form test-matrix
//! generators and exact dense oracles round out the crate.

pub mod blockdiag;
pub mod bounds;
pub mod dense;
pub mod error;
pub mod generators;
pub mod logdet;
pub mod market;
pub mod oracle;
pub mod partition;
pub mod rng;
pub mod sparse;
pub mod spai;
pub mod zone;

pub use blockdiag::{block_lu, FactoredBlockDiag, DEFAULT_PIVOT_TOL};
pub use bounds::{
    bound_constant, det_rel_error_bounds, gerschgorin_rho_bound, log_error_bound,
    pinching_bound_real,
};
pub use error::{Error, Result};
pub use logdet::{logdet_distance, wrap_phase, LogDet};
pub use market::{read_matrix_market, write_matrix_market};
pub use partition::BlockPartition;
pub use sparse::ComplexSparseMatrix;
pub use spai::{hadamard_product_logdet, lower_neighbor_pattern, spai_logdet, SpaiPattern, SpaiResult};
pub use zone::{
    checkerboard_parity, diagonal_approximation, zone_expansion, ExpansionReport, OrderBounds,
    Parity, RhoEstimate, RhoMethod, RhoMode, ZoneOptions,
};

pub use num_complex::Complex64;
