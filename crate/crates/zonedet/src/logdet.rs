//! Overflow-safe determinant representation.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::ops::{Add, AddAssign};

/// A determinant carried as `ln|det|` plus an accumulated (unwrapped) phase.
///
/// Keeping the logarithm instead of the determinant itself avoids overflow
/// for matrices whose determinant magnitude exceeds the `f64` range.
/// The phase is a running sum of pivot arguments and is deliberately not
/// wrapped; use [`LogDet::principal_phase`] for a value in `(-pi, pi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogDet {
    /// Natural log of the determinant magnitude.
    pub ln_abs: f64,
    /// Accumulated argument in radians, not reduced modulo 2*pi.
    pub phase: f64,
}

impl LogDet {
    /// Log-determinant of the identity: det = 1.
    pub const ZERO: LogDet = LogDet { ln_abs: 0.0, phase: 0.0 };

    pub fn new(ln_abs: f64, phase: f64) -> Self {
        LogDet { ln_abs, phase }
    }

    /// Log-determinant of a 1x1 matrix `[z]`.
    pub fn from_value(z: Complex64) -> Self {
        LogDet { ln_abs: z.norm().ln(), phase: z.arg() }
    }

    /// The accumulated phase mapped into `(-pi, pi]`.
    pub fn principal_phase(&self) -> f64 {
        wrap_phase(self.phase)
    }

    /// The log-determinant as a complex number `ln_abs + i*phase`.
    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.ln_abs, self.phase)
    }

    /// The determinant itself, when its magnitude fits an `f64`.
    pub fn det_value(&self) -> Option<Complex64> {
        if self.ln_abs.abs() < 700.0 {
            Some(Complex64::from_polar(self.ln_abs.exp(), self.phase))
        } else {
            None
        }
    }

    /// Branch-safe distance: `|delta ln_abs| + |delta phase mod 2*pi|`.
    pub fn distance(&self, other: &LogDet) -> f64 {
        (self.ln_abs - other.ln_abs).abs() + wrap_phase(self.phase - other.phase).abs()
    }
}

impl Add for LogDet {
    type Output = LogDet;
    fn add(self, rhs: LogDet) -> LogDet {
        LogDet { ln_abs: self.ln_abs + rhs.ln_abs, phase: self.phase + rhs.phase }
    }
}

impl AddAssign for LogDet {
    fn add_assign(&mut self, rhs: LogDet) {
        self.ln_abs += rhs.ln_abs;
        self.phase += rhs.phase;
    }
}

/// Map an angle into `(-pi, pi]`.
pub fn wrap_phase(x: f64) -> f64 {
    let r = x.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Branch-safe distance between two complex log-determinants
/// (real parts compared directly, imaginary parts modulo 2*pi).
pub fn logdet_distance(a: Complex64, b: Complex64) -> f64 {
    (a.re - b.re).abs() + wrap_phase(a.im - b.im).abs()
}
