//! Helpers shared by the integration suites.

use num_complex::Complex64;
use std::process::{Command, Output};
use zonedet::wrap_phase;

/// Relative determinant error `|det - Delta_p| / |Delta_p|` evaluated in
/// log space: `|exp(lndet - delta_p) - 1|` with the phase difference
/// wrapped into `(-pi, pi]`.
#[allow(dead_code)]
pub fn rel_det_err(delta: Complex64, exact: Complex64) -> f64 {
    let z = Complex64::new(exact.re - delta.re, wrap_phase(exact.im - delta.im));
    (z.exp() - Complex64::ONE).norm()
}

/// Run the CLI binary with the given arguments, panicking on spawn failure.
#[allow(dead_code)]
pub fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zonedet"))
        .args(args)
        .output()
        .expect("failed to run the zonedet binary")
}

#[allow(dead_code)]
pub fn stdout_of(output: &Output) -> String {
    assert!(
        output.status.success(),
        "command failed with {:?}\nstderr: {}",
        output.status.code(),
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

/// Collects named check failures so a criterion can evaluate everything
/// before failing, with one summary line at the end.
#[allow(dead_code)]
pub struct Checks {
    label: &'static str,
    failures: Vec<String>,
    total: usize,
}

#[allow(dead_code)]
impl Checks {
    pub fn new(label: &'static str) -> Self {
        Checks { label, failures: Vec::new(), total: 0 }
    }

    pub fn close(&mut self, name: &str, measured: f64, expected: f64, tol: f64) {
        self.total += 1;
        if !((measured - expected).abs() <= tol) {
            self.failures.push(format!(
                "{name}: measured {measured:.6e}, expected {expected:.6e} +/- {tol:.1e}"
            ));
        }
    }

    pub fn holds(&mut self, name: &str, ok: bool) {
        self.total += 1;
        if !ok {
            self.failures.push(name.to_string());
        }
    }

    pub fn finish(self) {
        if self.failures.is_empty() {
            println!("{}: PASS ({} checks)", self.label, self.total);
        } else {
            println!(
                "{}: FAIL ({} of {} checks failed)",
                self.label,
                self.failures.len(),
                self.total
            );
            for f in &self.failures {
                println!("  - {f}");
            }
            panic!("{}: {} failed checks", self.label, self.failures.len());
        }
    }
}
