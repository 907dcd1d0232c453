//! Floating-point cross-checks: the leading asymptotic term and a numerical
//! contour integral for `Δn`.
//!
//! # Asymptotics
//!
//! `Δn = 1 / (2 sqrt(nπ)) + O(n^(-3/2))`. The `O` constant is not known in
//! closed form, so it is pinned empirically: over `100 <= n <= 10_000` the
//! exact values satisfy `|2 sqrt(nπ) Δn - 1| <= C₁ / n` with
//! [`RATIO_ERROR_CONSTANT`]. `Δn` approaches the leading term from below;
//! `n (1 - 2 sqrt(nπ) Δn)` climbs towards `1/16` (0.0601 at `n = 100`,
//! 0.0625 by `n = 10_000`). The `calibrate_asymptotics` example recomputes
//! the calibration.
//!
//! # Contour integral
//!
//! With `A(z) = [[1, 1/z], [1, z]]` and `1` the all-ones vector,
//!
//! ```text
//! Δn = (1 / 2πi) ∮ 2^(-n) 1ᵀ (A(z)^(n-1) - A(1/z)^(n-1)) 1 / (1 - z) dz
//! ```
//!
//! over any circle around the origin. The integrand is a Laurent polynomial
//! times `1/(1 - z)`, so the trapezoidal rule on `|z| = r < 1` converges
//! geometrically in the number of nodes. The entries of `A(1/z)^(n-1)` are
//! large and cancel against each other, so rounding error grows with `n`.
//! Measured: with the default 1024 nodes the result stays within `1e-6` of
//! the exact value up to about `n = 780`, where the imaginary-residual
//! guard starts to trip; 64 nodes already miss before `n = 100`. The
//! verification suite stops at 32.

use num_complex::Complex64;
use serde::Serialize;

use crate::rational::to_f64;
use crate::recurrence::{self, FloatDeltas};
use crate::{Error, Result};

/// Frozen `C₁` in `|2 sqrt(nπ) Δn - 1| <= C₁ / n`, `100 <= n <= 10_000`.
/// Calibrated supremum 0.062476 (attained at `n = 10_000`), rounded up.
pub const RATIO_ERROR_CONSTANT: f64 = 0.063;

/// Range over which [`RATIO_ERROR_CONSTANT`] was calibrated.
pub const RATIO_CALIBRATION_RANGE: (usize, usize) = (100, 10_000);

/// Above this index [`asymptotic_table`] switches from exact to float `Δn`.
pub const EXACT_LIMIT: usize = 20_000;

/// Largest imaginary part tolerated in a contour result.
pub const IMAG_TOLERANCE: f64 = 1e-8;

/// Default cap on `n` for the contour check.
pub const CONTOUR_CAP: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticRecord {
    pub n: usize,
    pub delta: f64,
    pub leading: f64,
    pub ratio: f64,
    pub scaled_err: f64,
}

impl AsymptoticRecord {
    pub fn new(n: usize, delta: f64) -> Self {
        let leading = leading_term(n);
        AsymptoticRecord {
            n,
            delta,
            leading,
            ratio: delta / leading,
            scaled_err: (n as f64).powf(1.5) * (delta - leading).abs(),
        }
    }

    /// `n |ratio - 1|`, the quantity bounded by [`RATIO_ERROR_CONSTANT`].
    pub fn scaled_ratio_error(&self) -> f64 {
        self.n as f64 * (self.ratio - 1.0).abs()
    }
}

/// `1 / (2 sqrt(nπ))`.
pub fn leading_term(n: usize) -> f64 {
    0.5 / (n as f64 * std::f64::consts::PI).sqrt()
}

/// One record per requested `n >= 3`. `Δn` is exact (rounded once) up to
/// [`EXACT_LIMIT`] and from the float recurrence beyond.
pub fn asymptotic_table(n_values: &[usize]) -> Result<Vec<AsymptoticRecord>> {
    if let Some(&bad) = n_values.iter().find(|&&n| n < 3) {
        return Err(Error::OutOfRange { n: bad as u64, min: 3, max: u64::MAX });
    }
    let max = n_values.iter().copied().max().unwrap_or(0);
    let exact = recurrence::e_sequence(max.min(EXACT_LIMIT))?;
    let float = if max > EXACT_LIMIT { FloatDeltas::new().take(max + 1).collect() } else { Vec::new() };
    Ok(n_values
        .iter()
        .map(|&n| {
            let delta = match exact.delta(n) {
                Some(d) => to_f64(&d),
                None => float[n],
            };
            AsymptoticRecord::new(n, delta)
        })
        .collect())
}

/// Circle radius and node count for [`contour_delta`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourConfig {
    radius: f64,
    points: usize,
}

impl ContourConfig {
    /// `0 < radius < 1` and at least 64 nodes.
    pub fn new(radius: f64, points: usize) -> Result<Self> {
        if !(radius > 0.0 && radius < 1.0) {
            return Err(Error::InvalidContour(format!("radius {radius} is not in (0, 1)")));
        }
        if points < 64 {
            return Err(Error::InvalidContour(format!("{points} nodes is below the minimum of 64")));
        }
        Ok(ContourConfig { radius, points })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn points(&self) -> usize {
        self.points
    }
}

impl Default for ContourConfig {
    fn default() -> Self {
        ContourConfig { radius: 0.75, points: 1024 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Mat2([Complex64; 4]);

impl Mat2 {
    const IDENTITY: Mat2 = Mat2([Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]);

    fn mul(&self, o: &Mat2) -> Mat2 {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Mat2([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    fn pow(&self, mut k: usize) -> Mat2 {
        let mut base = *self;
        let mut acc = Mat2::IDENTITY;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    fn entry_sum(&self) -> Complex64 {
        self.0.iter().sum()
    }
}

fn transfer(z: Complex64) -> Mat2 {
    let one = Complex64::new(1.0, 0.0);
    Mat2([one, z.inv(), one, z])
}

/// The raw quadrature value, real and imaginary parts.
pub fn contour_integral(n: usize, cfg: &ContourConfig) -> Result<Complex64> {
    if n < 2 {
        return Err(Error::OutOfRange { n: n as u64, min: 2, max: u64::MAX });
    }
    let one = Complex64::new(1.0, 0.0);
    let m = cfg.points;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..m {
        let theta = std::f64::consts::TAU * k as f64 / m as f64;
        let z = Complex64::from_polar(cfg.radius, theta);
        let diff = transfer(z).pow(n - 1).entry_sum() - transfer(z.inv()).pow(n - 1).entry_sum();
        // dz / (2πi) = z dθ / 2π
        acc += diff / (one - z) * z;
    }
    Ok(acc / m as f64 * 0.5f64.powi(n as i32))
}

/// `Δn` from the contour integral. Fails if the imaginary part exceeds
/// [`IMAG_TOLERANCE`], a sign of too few nodes or lost precision.
pub fn contour_delta(n: usize, cfg: &ContourConfig) -> Result<f64> {
    let value = contour_integral(n, cfg)?;
    if value.im.abs() > IMAG_TOLERANCE {
        return Err(Error::ImaginaryResidual { n: n as u64, residual: value.im.abs(), tolerance: IMAG_TOLERANCE });
    }
    Ok(value.re)
}
