//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! every line).

mod common;

use common::{rel_det_err, run_cli, stdout_of, Checks};
use num_complex::Complex64;
use std::time::Instant;
use zonedet::generators::{
    block_t3, block_t3_logdet_exact, diag_dominant_random, hpd_random, laplacian_2d,
    laplacian_2d_logdet_exact, random_checkerboard, toeplitz_logdet_exact, toeplitz_tridiag,
};
use zonedet::oracle::{
    dense_lu_logdet, power_iteration_rho, symmetrized_zone_spectrum, DEFAULT_DENSE_CAP,
};
use zonedet::rng::SplitMix64;
use zonedet::{
    block_lu, hadamard_product_logdet, logdet_distance, lower_neighbor_pattern, pinching_bound_real,
    spai_logdet, zone_expansion, BlockPartition, ComplexSparseMatrix, Parity, RhoMode, SpaiPattern,
    ZoneOptions, DEFAULT_PIVOT_TOL,
};

const LN_15_4: f64 = 1.321_755_839_982_319; // ln(15/4)
const LN_7_2: f64 = 1.252_762_968_495_368; // ln(7/2)

fn laplacian_sigma_formula(m: usize) -> f64 {
    let n = (m * m) as f64;
    4.0f64.ln() + m as f64 * LN_15_4 + (n - m as f64 - 1.0) * LN_7_2
}

/// Criterion 1: the Laplacian golden table from closed forms.
#[test]
fn criterion_1_laplacian_golden_table() {
    let start = Instant::now();
    let mut checks = Checks::new("criterion 1 (Laplacian golden table)");
    let table: [(usize, f64, [f64; 4]); 3] = [
        (30, 1.0650e+03, [0.1150, 0.0607, 0.1458, 0.0745]),
        (100, 1.1717e+04, [0.1246, 0.0698, 0.1572, 0.0852]),
        (200, 4.6761e+04, [0.1269, 0.0719, 0.1599, 0.0877]),
    ];
    for (m, lndet_ref, cells) in table {
        let n = (m * m) as f64;
        let lndet = laplacian_2d_logdet_exact(m);
        let ln_md = m as f64 * toeplitz_logdet_exact(m, 4.0, -1.0).unwrap();
        let ln_sigma = laplacian_sigma_formula(m);
        checks.close(&format!("m={m}: ln det"), lndet, lndet_ref, 1e-4 * lndet_ref);
        checks.close(&format!("m={m}: rel err ln M_D"), (ln_md - lndet).abs() / lndet, cells[0], 1e-4);
        checks.close(&format!("m={m}: rel err ln sigma"), (ln_sigma - lndet).abs() / lndet, cells[1], 1e-4);
        checks.close(
            &format!("m={m}: rel err M_D^(1/n)"),
            (((ln_md - lndet) / n).exp() - 1.0).abs(),
            cells[2],
            1e-4,
        );
        checks.close(
            &format!("m={m}: rel err sigma^(1/n)"),
            (((ln_sigma - lndet) / n).exp() - 1.0).abs(),
            cells[3],
            1e-4,
        );
    }
    println!("criterion 1 elapsed: {:.2?}", start.elapsed());
    checks.finish();
}

/// Criterion 2: the n = 900 Laplacian through the actual CLI pipeline
/// (`zone` with block size 30, `spai` at level 1, dense LU oracle).
#[test]
fn criterion_2_laplacian_numerical_path() {
    let start = Instant::now();
    let mut checks = Checks::new("criterion 2 (Laplacian numerical path)");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("L900.mtx");
    let path = path.to_str().unwrap();

    let gen = run_cli(&["generate", "--kind", "laplacian2d", "--m", "30", "-o", path]);
    let gen_out = stdout_of(&gen);
    checks.holds("generate reports n = 900", gen_out.contains("n = 900"));

    let zone = run_cli(&[
        "zone", "--matrix", path, "--block-size", "30", "--order", "1", "--rho", "power",
        "--exact", "--format", "json",
    ]);
    let zone_doc: serde_json::Value = serde_json::from_str(&stdout_of(&zone)).unwrap();
    let rho = zone_doc["rho"]["value"].as_f64().unwrap();
    let exact_ln = zone_doc["exact"]["ln_abs"].as_f64().unwrap();
    let delta0 = zone_doc["rows"][0]["delta_re"].as_f64().unwrap();
    let rel_err_p0 = zone_doc["rows"][0]["rel_err_logdet"].as_f64().unwrap();

    checks.holds(
        &format!("power-iteration rho = {rho:.6} lies in [0.9888, 0.9908]"),
        (0.9888..=0.9908).contains(&rho),
    );
    checks.close("|delta_0 - ln det|", (delta0 - exact_ln).abs(), 122.4966, 0.05);
    checks.close("zone rel err in ln M_D", rel_err_p0, 0.1150, 1e-3);
    checks.close(
        "zone rel err in M_D^(1/n)",
        (((delta0 - exact_ln) / 900.0).exp() - 1.0).abs(),
        0.1458,
        1e-3,
    );

    let spai = run_cli(&["spai", "--matrix", path, "--level", "1", "--exact", "--format", "json"]);
    let spai_doc: serde_json::Value = serde_json::from_str(&stdout_of(&spai)).unwrap();
    let rel_ln = spai_doc["rel_err_ln"].as_f64().unwrap();
    let rel_root = spai_doc["rel_err_nth_root"].as_f64().unwrap();
    // The golden sigma formula counts m rows at 15/4, but the grid graph
    // only has 2(n - m) lower adjacencies, which forces 2m - 2 such rows;
    // the measured cells land ~2e-3 above the quoted ones. Asserted as
    // quoted; the README documents the discrepancy.
    checks.close("spai rel err in ln sigma", rel_ln, 0.0607, 1e-3);
    checks.close("spai rel err in sigma^(1/n)", rel_root, 0.0745, 1e-3);

    println!("criterion 2 elapsed: {:.2?}", start.elapsed());
    checks.finish();
}

/// Criterion 3: the tridiagonal Toeplitz family, its sparse-inverse value
/// and the pinching crossover at block size 4.
#[test]
fn criterion_3_toeplitz_family() {
    let start = Instant::now();
    let mut checks = Checks::new("criterion 3 (Toeplitz family)");
    for n in 1..=200usize {
        let t = toeplitz_tridiag(n, 2.0, -1.0);
        let lu = dense_lu_logdet(&t).unwrap();
        let want = ((n + 1) as f64).ln();
        if ((lu.ln_abs - want).exp() - 1.0).abs() > 1e-10 || lu.principal_phase().abs() > 1e-12 {
            checks.holds(&format!("det(T_{n}) = {}", n + 1), false);
        }
        let pattern = lower_neighbor_pattern(&t, 1, 64).unwrap();
        let sigma = spai_logdet(&t, &pattern).unwrap();
        let sigma_want = 2.0f64.ln() + (n as f64 - 1.0) * 1.5f64.ln();
        if (sigma.logdet.ln_abs - sigma_want).abs() > 1e-10 {
            checks.holds(&format!("ln sigma for T_{n}"), false);
        }
    }
    checks.holds("determinants and sigma values for n in 1..=200", true);

    // crossover at n = 120: det(M_D) <= sigma exactly when the block size
    // is at least 4
    let n = 120usize;
    let t = toeplitz_tridiag(n, 2.0, -1.0);
    let pattern = lower_neighbor_pattern(&t, 1, 64).unwrap();
    let ln_sigma = spai_logdet(&t, &pattern).unwrap().logdet.ln_abs;
    for bs in (1..=n).filter(|bs| n % bs == 0) {
        let k = n / bs;
        let p = BlockPartition::uniform(n, bs).unwrap();
        let (md, _) = t.split(&p).unwrap();
        let ln_md = block_lu(&md, &p, DEFAULT_PIVOT_TOL).unwrap().logdet().ln_abs;
        let formula = k as f64 * ((bs + 1) as f64).ln();
        checks.close(&format!("bs={bs}: ln det(M_D) formula"), ln_md, formula, 1e-10);
        if bs >= 4 {
            checks.holds(&format!("bs={bs}: ln det(M_D) <= ln sigma"), ln_md <= ln_sigma);
        } else {
            checks.holds(&format!("bs={bs}: ln det(M_D) > ln sigma"), ln_md > ln_sigma);
        }
    }
    println!("criterion 3 elapsed: {:.2?}", start.elapsed());
    checks.finish();
}

/// Criterion 4: the block-T3 case where the sparse-inverse approximation
/// has no accurate digit.
#[test]
fn criterion_4_block_t3_spai_failure() {
    let start = Instant::now();
    let mut checks = Checks::new("criterion 4 (block-T3 sparse-inverse failure)");

    // single block: sigma = 25/24 exactly, det = 3/8
    let single = block_t3(3);
    let pattern = lower_neighbor_pattern(&single, 1, 64).unwrap();
    let r = spai_logdet(&single, &pattern).unwrap();
    checks.close("per-block ln sigma", r.logdet.ln_abs, (25.0f64 / 24.0).ln(), 1e-13);
    let sigma = r.logdet.ln_abs.exp();
    let det = dense_lu_logdet(&single).unwrap().ln_abs.exp();
    checks.close("relative error of the block approximation", (sigma - det) / det, 16.0 / 9.0, 1e-12);

    // n = 300: ln sigma - ln det = 100 ln(25/9) from the formulas
    let big = block_t3(300);
    let pattern = lower_neighbor_pattern(&big, 1, 64).unwrap();
    let ln_sigma = spai_logdet(&big, &pattern).unwrap().logdet.ln_abs;
    let ln_det = block_t3_logdet_exact(300);
    checks.close("n=300 gap", ln_sigma - ln_det, 100.0 * (25.0f64 / 9.0).ln(), 1e-9);

    // the block-diagonal pinching with the natural partition is exact here
    let p = BlockPartition::uniform(300, 3).unwrap();
    let report = zone_expansion(&big, &p, &ZoneOptions::with_order(0)).unwrap();
    checks.close("pinching is exact", report.delta0.ln_abs, ln_det, 1e-9);

    println!("criterion 4 elapsed: {:.2?}", start.elapsed());
    checks.finish();
}

struct BoundInstance {
    name: String,
    matrix: ComplexSparseMatrix,
    partition: BlockPartition,
    rho_mode: RhoMode,
}

fn bound_suite() -> Vec<BoundInstance> {
    let mut instances = Vec::new();
    // Laplacians with row-block and point partitions (Hermitian PD)
    for m in 3..=8usize {
        let lap = laplacian_2d(m);
        instances.push(BoundInstance {
            name: format!("laplacian m={m} row blocks"),
            matrix: lap.clone(),
            partition: BlockPartition::uniform(m * m, m).unwrap(),
            rho_mode: RhoMode::Hermitian,
        });
        instances.push(BoundInstance {
            name: format!("laplacian m={m} point"),
            matrix: lap,
            partition: BlockPartition::point(m * m),
            rho_mode: RhoMode::Hermitian,
        });
    }
    // Toeplitz families with every equal block size
    for n in [6usize, 8, 12, 16, 20, 24] {
        for (a, b) in [(2.0, -1.0), (4.0, -1.0)] {
            for bs in (1..=n / 2).filter(|bs| n % bs == 0) {
                instances.push(BoundInstance {
                    name: format!("toeplitz n={n} a={a} bs={bs}"),
                    matrix: toeplitz_tridiag(n, a, b),
                    partition: BlockPartition::uniform(n, bs).unwrap(),
                    rho_mode: RhoMode::Hermitian,
                });
            }
        }
    }
    // strictly diagonally dominant random matrices, point partition
    for seed in 0..60u64 {
        let n = 6 + (seed as usize % 5) * 7;
        instances.push(BoundInstance {
            name: format!("diagdom n={n} seed={seed}"),
            matrix: diag_dominant_random(n, seed, 0.4),
            partition: BlockPartition::point(n),
            rho_mode: RhoMode::Gerschgorin,
        });
    }
    // random checkerboards with weak coupling
    for seed in 0..44u64 {
        let k = [4usize, 6, 8][seed as usize % 3];
        let bs = [2usize, 4][seed as usize % 2];
        let scale = [0.03, 0.06][(seed as usize / 3) % 2];
        instances.push(BoundInstance {
            name: format!("checkerboard k={k} bs={bs} scale={scale} seed={seed}"),
            matrix: random_checkerboard(k, bs, scale, seed),
            partition: BlockPartition::uniform(k * bs, bs).unwrap(),
            rho_mode: RhoMode::Gerschgorin,
        });
    }
    // Hermitian positive-definite randoms with random equal partitions
    for seed in 0..60u64 {
        let n = 8 + (seed as usize % 4) * 4;
        let bs = [2usize, 4][(seed as usize / 4) % 2];
        instances.push(BoundInstance {
            name: format!("hpd n={n} seed={seed} bs={bs}"),
            matrix: hpd_random(n, seed, 2.0),
            partition: BlockPartition::uniform(n, bs).unwrap(),
            rho_mode: RhoMode::Hermitian,
        });
    }
    instances
}

/// Criterion 5: the order-`p` expansion error bounds over at least
/// 200 generated instances with `rho < 1`, orders up to 8.
#[test]
fn criterion_5_error_bound_suite() {
    let start = Instant::now();
    let mut checks = Checks::new("criterion 5 (error bound suite)");
    let mut counted = 0usize;
    let mut violations: Vec<String> = Vec::new();
    for inst in bound_suite() {
        let opts = ZoneOptions { order: 8, rho_mode: inst.rho_mode, ..ZoneOptions::default() };
        let report = match zone_expansion(&inst.matrix, &inst.partition, &opts) {
            Ok(r) => r,
            Err(e) => {
                violations.push(format!("{}: expansion failed: {e}", inst.name));
                continue;
            }
        };
        let Some(bounds) = &report.bounds else {
            continue; // rho >= 1: outside the theorem's regime
        };
        counted += 1;
        let exact = dense_lu_logdet(&inst.matrix).unwrap().as_complex();
        for p in 0..=8usize {
            let abs_err = logdet_distance(report.deltas[p], exact);
            if abs_err > bounds[p].abs_log + 1e-9 {
                violations.push(format!(
                    "{}: |delta_{p} - lndet| = {abs_err:.3e} over bound {:.3e}",
                    inst.name, bounds[p].abs_log
                ));
            }
            let rel = rel_det_err(report.deltas[p], exact);
            if rel > bounds[p].rel_det + 1e-9 {
                violations.push(format!(
                    "{}: rel det err at {p} = {rel:.3e} over bound {:.3e}",
                    inst.name, bounds[p].rel_det
                ));
            }
            if let Some(tight) = bounds[p].tight_rel {
                if rel > tight + 1e-9 {
                    violations.push(format!(
                        "{}: rel det err at {p} = {rel:.3e} over tight bound {tight:.3e}",
                        inst.name
                    ));
                }
            }
        }
        // checkerboard structure: odd traces vanish, odd deltas repeat
        if report.checkerboard == Parity::Odd {
            for &p in &report.skipped_orders {
                if report.traces[p - 1] != Complex64::ZERO || report.deltas[p] != report.deltas[p - 1]
                {
                    violations.push(format!("{}: skipped order {p} not exact", inst.name));
                }
            }
            if report.skipped_orders != vec![1, 3, 5, 7] {
                violations.push(format!(
                    "{}: expected odd orders skipped, got {:?}",
                    inst.name, report.skipped_orders
                ));
            }
        }
    }
    checks.holds(
        &format!("at least 200 instances with rho < 1 (got {counted})"),
        counted >= 200,
    );
    for v in &violations {
        checks.holds(v, false);
    }
    checks.holds("no bound violations", violations.is_empty());
    println!("criterion 5 elapsed: {:.2?} ({counted} instances)", start.elapsed());
    checks.finish();
}

/// Criterion 6: qualitative reproduction of the interaction-matrix
/// behaviour on seeded checkerboard instances (k = 64 zones of 8).
#[test]
fn criterion_6_checkerboard_qualitative() {
    let start = Instant::now();
    let mut checks = Checks::new("criterion 6 (checkerboard error decay)");
    for seed in 0..20u64 {
        let m = random_checkerboard(64, 8, 0.1, seed);
        let p = BlockPartition::uniform(512, 8).unwrap();
        let opts = ZoneOptions { order: 8, rho_mode: RhoMode::Gerschgorin, ..ZoneOptions::default() };
        let report = zone_expansion(&m, &p, &opts).unwrap();
        checks.holds(
            &format!("seed {seed}: Gerschgorin bound {:.3} <= 0.7", report.rho.value),
            report.rho.value <= 0.7,
        );
        let exact = dense_lu_logdet(&m).unwrap().as_complex();
        let errs: Vec<f64> = [0usize, 2, 4, 6, 8]
            .iter()
            .map(|&p| logdet_distance(report.deltas[p], exact))
            .collect();
        checks.holds(
            &format!("seed {seed}: even-order errors decrease monotonically {errs:?}"),
            errs.windows(2).all(|w| w[1] < w[0]),
        );
        // A = M_D^{-1} M_off for the power-iteration estimate
        let (md, moff) = m.split(&p).unwrap();
        let f = block_lu(&md, &p, DEFAULT_PIVOT_TOL).unwrap();
        let a = f.solve(&moff).unwrap();
        // the cyclic zone coupling makes the top eigenvalues of A^2 nearly
        // degenerate, so the Rayleigh value settles slowly on some seeds
        let rho_hat = power_iteration_rho(&a, 4, 1e-8, 20000);
        if !rho_hat.converged {
            println!("  note: seed {seed} power iteration unconverged after {} iterations", rho_hat.iterations);
        }
        for (i, &ord) in [0usize, 2, 4, 6, 8].iter().enumerate() {
            let cap = rho_hat.value.powi(ord as i32) * errs[0] * 10.0;
            checks.holds(
                &format!("seed {seed}: err at order {ord} within rho^p * err_0 * 10"),
                errs[i] <= cap,
            );
        }
    }
    println!("criterion 6 elapsed: {:.2?}", start.elapsed());
    checks.finish();
}

/// Criterion 7: the inequality suites (Hadamard-Fischer, sparse-inverse
/// sandwich and monotonicity, real-spectrum pinching bound).
#[test]
fn criterion_7_inequality_suites() {
    let start = Instant::now();
    let mut checks = Checks::new("criterion 7 (inequality suites)");
    let mut rng = SplitMix64::new(0xFEED);

    let mut hf_ok = true;
    let mut sandwich_ok = true;
    let mut pinch_ok = true;
    for trial in 0..50u64 {
        let n = 6 + (trial as usize % 5) * 3;
        let m = hpd_random(n, 1000 + trial, 1.2);
        // random equal-ish partition
        let bs = 1 + rng.next_below(4);
        let p = BlockPartition::uniform(n, bs).unwrap();
        let exact = dense_lu_logdet(&m).unwrap();
        let report = zone_expansion(&m, &p, &ZoneOptions::with_order(0)).unwrap();

        // Hadamard-Fischer: det(M) <= det(M_D), phases vanish
        if report.delta0.ln_abs < exact.ln_abs - 1e-9
            || report.delta0.principal_phase().abs() > 1e-9
            || exact.principal_phase().abs() > 1e-9
        {
            hf_ok = false;
            checks.holds(&format!("Hadamard-Fischer violated at trial {trial}"), false);
        }

        // sparse-inverse sandwich: det(M) <= sigma <= prod m_ii
        let pattern = lower_neighbor_pattern(&m, 1, 64).unwrap();
        let sigma = spai_logdet(&m, &pattern).unwrap().logdet.ln_abs;
        let hadamard = hadamard_product_logdet(&m).unwrap().ln_abs;
        if !(exact.ln_abs <= sigma + 1e-9 && sigma <= hadamard + 1e-9) {
            sandwich_ok = false;
            checks.holds(&format!("sandwich violated at trial {trial}"), false);
        }

        // pinching bound with the exact symmetrized spectrum
        let (rho, lambda_min) = symmetrized_zone_spectrum(&m, &p, DEFAULT_DENSE_CAP).unwrap();
        let bound = pinching_bound_real(n, rho, lambda_min).unwrap();
        let rel = 1.0 - (-(report.delta0.ln_abs - exact.ln_abs)).exp();
        if !(rel >= -1e-12 && rel <= bound + 1e-9) {
            pinch_ok = false;
            checks.holds(
                &format!("pinching bound violated at trial {trial}: rel {rel:.3e} vs {bound:.3e}"),
                false,
            );
        }
    }
    checks.holds("Hadamard-Fischer on 50 instances", hf_ok);
    checks.holds("sparse-inverse sandwich on 50 instances", sandwich_ok);
    checks.holds("pinching bound on 50 instances", pinch_ok);

    // monotonicity under pattern growth: 10 chains
    let mut mono_ok = true;
    for chain in 0..10u64 {
        let n = 10 + (chain as usize % 3) * 4;
        let m = hpd_random(n, 2000 + chain, 1.5);
        let exact = dense_lu_logdet(&m).unwrap().ln_abs;
        let mut sets = lower_neighbor_pattern(&m, 1, 64).unwrap().sets().to_vec();
        let mut prev = spai_logdet(&m, &SpaiPattern::from_sets(sets.clone()).unwrap())
            .unwrap()
            .logdet
            .ln_abs;
        for _step in 0..6 {
            // grow one pattern by one missing smaller index
            let j = 1 + rng.next_below(n - 1);
            let missing: Vec<usize> = (0..j).filter(|i| !sets[j].contains(i)).collect();
            if missing.is_empty() {
                continue;
            }
            let add = missing[rng.next_below(missing.len())];
            sets[j].push(add);
            sets[j].sort_unstable();
            let grown = spai_logdet(&m, &SpaiPattern::from_sets(sets.clone()).unwrap())
                .unwrap()
                .logdet
                .ln_abs;
            if grown > prev + 1e-10 || grown < exact - 1e-9 {
                mono_ok = false;
                checks.holds(
                    &format!("chain {chain}: growth step raised ln sigma {prev:.12} -> {grown:.12}"),
                    false,
                );
            }
            prev = grown;
        }
    }
    checks.holds("sparse-inverse monotonicity on 10 growth chains", mono_ok);

    println!("criterion 7 elapsed: {:.2?}", start.elapsed());
    checks.finish();
}

/// Criterion 8: the 2x2 counterexamples where the pinching fails to bound
/// the determinant.
#[test]
fn criterion_8_counterexamples() {
    let start = Instant::now();
    let mut checks = Checks::new("criterion 8 (2x2 counterexamples)");

    let complex_case = zonedet::generators::example_2x2(Complex64::new(0.0, 0.5));
    let det = dense_lu_logdet(&complex_case).unwrap().det_value().unwrap();
    checks.close("alpha = i/2: det", det.re, 1.25, 1e-12);
    checks.close("alpha = i/2: det imaginary part", det.im, 0.0, 1e-12);
    checks.holds("alpha = i/2: det > det(M_D) = 1", det.norm() > 1.0);

    let real_case = zonedet::generators::example_2x2(Complex64::new(3.0, 0.0));
    let det3 = dense_lu_logdet(&real_case).unwrap();
    checks.close("alpha = 3: |det|", det3.ln_abs.exp(), 8.0, 1e-12);
    checks.holds("alpha = 3: |det| > det(M_D) = 1", det3.ln_abs > 0.0);

    println!("criterion 8 elapsed: {:.2?}", start.elapsed());
    checks.finish();
}
