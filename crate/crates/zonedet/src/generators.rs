//! Deterministic test-matrix families with exact determinants.
//!
//! Every seeded generator draws from [`SplitMix64`] in a fixed order, so
//! a given parameter set produces bit-identical entries on every run and
//! platform.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::sparse::ComplexSparseMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The 2-D Poisson matrix: order `n = m^2`, block tridiagonal with
/// `T_m = tridiag(-1, 4, -1)` diagonal blocks and `-I_m` couplings,
/// grid points in natural row-major order.
pub fn laplacian_2d(m: usize) -> ComplexSparseMatrix {
    assert!(m >= 2, "laplacian_2d needs m >= 2");
    let n = m * m;
    let mut triples = Vec::with_capacity(5 * n);
    for r in 0..m {
        for c in 0..m {
            let i = r * m + c;
            triples.push((i, i, re(4.0)));
            if c > 0 {
                triples.push((i, i - 1, re(-1.0)));
            }
            if c + 1 < m {
                triples.push((i, i + 1, re(-1.0)));
            }
            if r > 0 {
                triples.push((i, i - m, re(-1.0)));
            }
            if r + 1 < m {
                triples.push((i, i + m, re(-1.0)));
            }
        }
    }
    ComplexSparseMatrix::from_entries(n, &triples).expect("stencil entries are valid")
}

/// Exact `ln det` of [`laplacian_2d`] via the eigenvalue product
/// `prod_{i,j} 4 (sin^2(i pi / 2(m+1)) + sin^2(j pi / 2(m+1)))`,
/// summed in a fixed order.
pub fn laplacian_2d_logdet_exact(m: usize) -> f64 {
    assert!(m >= 2, "laplacian_2d needs m >= 2");
    let s: Vec<f64> = (1..=m)
        .map(|i| (i as f64 * PI / (2.0 * (m as f64 + 1.0))).sin().powi(2))
        .collect();
    let mut total = 0.0;
    for &si in &s {
        for &sj in &s {
            total += (4.0 * (si + sj)).ln();
        }
    }
    total
}

/// Symmetric tridiagonal Toeplitz matrix with diagonal `a` and
/// off-diagonal `b`.
pub fn toeplitz_tridiag(n: usize, a: f64, b: f64) -> ComplexSparseMatrix {
    assert!(n >= 1, "toeplitz_tridiag needs n >= 1");
    let mut triples = Vec::with_capacity(3 * n);
    for i in 0..n {
        triples.push((i, i, re(a)));
        if i > 0 {
            triples.push((i, i - 1, re(b)));
            triples.push((i - 1, i, re(b)));
        }
    }
    ComplexSparseMatrix::from_entries(n, &triples).expect("tridiagonal entries are valid")
}

/// Exact `ln det` of [`toeplitz_tridiag`] from the eigenvalues
/// `a + 2 b cos(i pi / (n+1))`; fails when any eigenvalue is not positive.
pub fn toeplitz_logdet_exact(n: usize, a: f64, b: f64) -> Result<f64> {
    let mut total = 0.0;
    for i in 1..=n {
        let lambda = a + 2.0 * b * (i as f64 * PI / (n as f64 + 1.0)).cos();
        if lambda <= 0.0 {
            return Err(Error::NonPositiveEigenvalue(lambda));
        }
        total += lambda.ln();
    }
    Ok(total)
}

/// Block-diagonal matrix of order `n = 3k` whose blocks are all
/// `T_3 = tridiag(-1, 3/2, -1)` (determinant 3/8 per block).
pub fn block_t3(n: usize) -> ComplexSparseMatrix {
    assert!(n % 3 == 0 && n > 0, "block_t3 needs a positive multiple of 3");
    let mut triples = Vec::with_capacity(7 * n / 3);
    for b in (0..n).step_by(3) {
        for i in 0..3 {
            triples.push((b + i, b + i, re(1.5)));
        }
        for i in 0..2 {
            triples.push((b + i, b + i + 1, re(-1.0)));
            triples.push((b + i + 1, b + i, re(-1.0)));
        }
    }
    ComplexSparseMatrix::from_entries(n, &triples).expect("block entries are valid")
}

/// Exact `ln det` of [`block_t3`]: `(n/3) ln(3/8)`.
pub fn block_t3_logdet_exact(n: usize) -> f64 {
    assert!(n % 3 == 0 && n > 0);
    (n as f64 / 3.0) * (3.0f64 / 8.0).ln()
}

/// The 2x2 example `[[1, alpha], [alpha, 1]]` with `det = 1 - alpha^2`.
pub fn example_2x2(alpha: Complex64) -> ComplexSparseMatrix {
    ComplexSparseMatrix::from_entries(
        2,
        &[(0, 0, re(1.0)), (0, 1, alpha), (1, 0, alpha), (1, 1, re(1.0))],
    )
    .expect("2x2 entries are valid")
}

/// A bipartite zone matrix: `k` zones of `block_size` rows arranged on a
/// cycle, with identity-plus-perturbation diagonal blocks and random
/// couplings of fixed magnitude `coupling_scale` between cycle neighbours.
///
/// Zones only couple across the even/odd index parity, so the off-diagonal
/// part is an odd checkerboard for the uniform `block_size` partition. Each
/// coupling block carries two entries of magnitude `coupling_scale` per
/// row; diagonal blocks stay diagonally dominant and non-Hermitian.
pub fn random_checkerboard(
    k: usize,
    block_size: usize,
    coupling_scale: f64,
    seed: u64,
) -> ComplexSparseMatrix {
    assert!(k >= 2 && k % 2 == 0, "random_checkerboard needs an even zone count >= 2");
    assert!(block_size >= 1, "random_checkerboard needs block_size >= 1");
    assert!(coupling_scale >= 0.0);
    let n = k * block_size;
    let mut rng = SplitMix64::new(seed);
    let mut triples = Vec::new();
    for z in 0..k {
        let base = z * block_size;
        // diagonal block: perturbed identity, non-Hermitian
        for r in 0..block_size {
            let d = Complex64::new(
                1.0 + 0.1 * (rng.next_f64() - 0.5),
                0.1 * (rng.next_f64() - 0.5),
            );
            triples.push((base + r, base + r, d));
            if block_size > 1 {
                let mut c = rng.next_below(block_size);
                if c == r {
                    c = (c + 1) % block_size;
                }
                let mag = 0.08 * (0.5 + 0.5 * rng.next_f64());
                triples.push((base + r, base + c, rng.next_phase(mag)));
            }
        }
        // couplings to both cycle neighbours (opposite parity since k is even)
        for neighbour in [(z + 1) % k, (z + k - 1) % k] {
            let nbase = neighbour * block_size;
            for r in 0..block_size {
                for _ in 0..2 {
                    let c = rng.next_below(block_size);
                    if coupling_scale > 0.0 {
                        triples.push((base + r, nbase + c, rng.next_phase(coupling_scale)));
                    } else {
                        // keep the draw order identical for any scale
                        let _ = rng.next_f64();
                    }
                }
            }
        }
    }
    ComplexSparseMatrix::from_entries(n, &triples).expect("generated entries are valid")
}

/// Hermitian positive-(semi)definite random matrix `B* B + dominance * I`
/// with a sparse random `B`.
pub fn hpd_random(n: usize, seed: u64, dominance: f64) -> ComplexSparseMatrix {
    assert!(n >= 1);
    assert!(dominance >= 0.0);
    let mut rng = SplitMix64::new(seed);
    let mut btriples = Vec::with_capacity(3 * n);
    for i in 0..n {
        for _ in 0..3 {
            let j = rng.next_below(n);
            btriples.push((i, j, Complex64::new(rng.next_f64() - 0.5, rng.next_f64() - 0.5)));
        }
    }
    let b = ComplexSparseMatrix::from_entries(n, &btriples).expect("generated entries are valid");
    let bstar_b = b
        .conjugate_transpose()
        .sparse_product(&b)
        .expect("orders match");
    let mut triples: Vec<(usize, usize, Complex64)> = bstar_b.iter().collect();
    for i in 0..n {
        triples.push((i, i, re(dominance)));
    }
    ComplexSparseMatrix::from_entries(n, &triples).expect("generated entries are valid")
}

/// Strictly row diagonally dominant random complex matrix: each row's
/// diagonal magnitude exceeds its off-diagonal sum by at least `margin`.
pub fn diag_dominant_random(n: usize, seed: u64, margin: f64) -> ComplexSparseMatrix {
    assert!(n >= 1);
    assert!(margin > 0.0, "diag_dominant_random needs a positive margin");
    let mut rng = SplitMix64::new(seed);
    let mut triples = Vec::with_capacity(4 * n);
    for i in 0..n {
        let mut off_sum = 0.0;
        if n > 1 {
            for _ in 0..3 {
                let mut j = rng.next_below(n);
                if j == i {
                    j = (j + 1) % n;
                }
                let mag = 0.2 + 0.8 * rng.next_f64();
                let v = rng.next_phase(mag);
                off_sum += v.norm();
                triples.push((i, j, v));
            }
        }
        // diagonal with a mild random rotation keeps the matrix non-Hermitian
        let mag = off_sum + margin + rng.next_f64();
        let theta = 0.6 * (rng.next_f64() - 0.5);
        triples.push((i, i, Complex64::from_polar(mag, theta)));
    }
    ComplexSparseMatrix::from_entries(n, &triples).expect("generated entries are valid")
}

/// Parameter set describing one generated matrix; used for provenance
/// comments in written files and for CLI dispatch.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    Laplacian2d { m: usize },
    ToeplitzTridiag { n: usize, a: f64, b: f64 },
    BlockT3 { n: usize },
    Checkerboard { k: usize, block_size: usize, coupling_scale: f64, seed: u64 },
    HpdRandom { n: usize, seed: u64, dominance: f64 },
    DiagDominantRandom { n: usize, seed: u64, margin: f64 },
    Example2x2 { alpha: Complex64 },
}

impl GeneratorSpec {
    pub fn build(&self) -> ComplexSparseMatrix {
        match *self {
            GeneratorSpec::Laplacian2d { m } => laplacian_2d(m),
            GeneratorSpec::ToeplitzTridiag { n, a, b } => toeplitz_tridiag(n, a, b),
            GeneratorSpec::BlockT3 { n } => block_t3(n),
            GeneratorSpec::Checkerboard { k, block_size, coupling_scale, seed } => {
                random_checkerboard(k, block_size, coupling_scale, seed)
            }
            GeneratorSpec::HpdRandom { n, seed, dominance } => hpd_random(n, seed, dominance),
            GeneratorSpec::DiagDominantRandom { n, seed, margin } => {
                diag_dominant_random(n, seed, margin)
            }
            GeneratorSpec::Example2x2 { alpha } => example_2x2(alpha),
        }
    }

    /// Closed-form `ln det` when the family has one.
    pub fn exact_logdet(&self) -> Option<f64> {
        match *self {
            GeneratorSpec::Laplacian2d { m } => Some(laplacian_2d_logdet_exact(m)),
            GeneratorSpec::ToeplitzTridiag { n, a, b } => toeplitz_logdet_exact(n, a, b).ok(),
            GeneratorSpec::BlockT3 { n } => Some(block_t3_logdet_exact(n)),
            _ => None,
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorSpec::Laplacian2d { m } => write!(f, "laplacian2d m={m}"),
            GeneratorSpec::ToeplitzTridiag { n, a, b } => write!(f, "toeplitz n={n} a={a} b={b}"),
            GeneratorSpec::BlockT3 { n } => write!(f, "blockt3 n={n}"),
            GeneratorSpec::Checkerboard { k, block_size, coupling_scale, seed } => write!(
                f,
                "checkerboard k={k} block_size={block_size} coupling_scale={coupling_scale} seed={seed}"
            ),
            GeneratorSpec::HpdRandom { n, seed, dominance } => {
                write!(f, "hpd n={n} seed={seed} dominance={dominance}")
            }
            GeneratorSpec::DiagDominantRandom { n, seed, margin } => {
                write!(f, "diagdom n={n} seed={seed} margin={margin}")
            }
            GeneratorSpec::Example2x2 { alpha } => {
                write!(f, "example2x2 alpha={}+{}i", alpha.re, alpha.im)
            }
        }
    }
}
