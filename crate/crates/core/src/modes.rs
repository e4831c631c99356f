//! In-slit waveguide modes: index bookkeeping, excitation coefficients,
//! longitudinal wavenumbers and the oscillatory aperture integral.
//!
//! A plane wave entering a hard-wall slit excites only the odd sine
//! modes; the even Fourier coefficients vanish identically, so the mode
//! index stores `(m, n)` with physical mode numbers `2m+1` (across the
//! width) and `2n+1` (along the length).

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

use crate::beam::BeamParams;
use crate::error::{Error, Result};
use crate::geometry::SlitGeometry;

/// Relative half-width of the near-singular guard band of
/// [`slit_integral`]: for `|q|` within `GUARD_BAND * mu` of the mode
/// wavenumber `mu` the closed form is replaced by a second-order Taylor
/// expansion about the removable singularity. Outside roughly this band
/// the factored closed form is accurate to better than 1e-10 relative.
pub const GUARD_BAND: f64 = 1e-6;

/// Pair of nonnegative series indices; the physical (odd) mode numbers
/// are `2m+1` across the slit width and `2n+1` along the slit length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModeIndex {
    m: u32,
    n: u32,
}

impl ModeIndex {
    pub fn new(m: u32, n: u32) -> Self {
        Self { m, n }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Odd mode number across the width, `2m + 1`.
    pub fn width_number(&self) -> u32 {
        2 * self.m + 1
    }

    /// Odd mode number along the length, `2n + 1`.
    pub fn length_number(&self) -> u32 {
        2 * self.n + 1
    }
}

/// Series truncation: the double mode sum runs over `m in 0..=m_max`,
/// `n in 0..=n_max`. `tail_tolerance` is the relative intensity change
/// threshold used by convergence reporting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Truncation {
    m_max: u32,
    n_max: u32,
    tail_tolerance: f64,
}

impl Truncation {
    pub fn new(m_max: u32, n_max: u32, tail_tolerance: f64) -> Result<Self> {
        if !(tail_tolerance.is_finite() && tail_tolerance > 0.0) {
            return Err(Error::invalid(
                "tail_tolerance",
                format!("must be finite and > 0, got {tail_tolerance}"),
            ));
        }
        Ok(Self {
            m_max,
            n_max,
            tail_tolerance,
        })
    }

    pub fn m_max(&self) -> u32 {
        self.m_max
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn tail_tolerance(&self) -> f64 {
        self.tail_tolerance
    }
}

/// Excitation coefficient of mode `(2m+1, 2n+1)`:
/// `16 A / ((2m+1)(2n+1) pi^2)`.
///
/// Even mode numbers never arise from [`ModeIndex`], matching the
/// vanishing of their coefficients.
pub fn fourier_coefficient(mode: ModeIndex, beam: &BeamParams) -> f64 {
    let mw = f64::from(mode.width_number());
    let nl = f64::from(mode.length_number());
    16.0 * beam.amplitude() / (mw * nl * PI * PI)
}

/// Longitudinal wavenumber of a slit mode (1/m):
/// `k_z = sqrt(k^2 - ((2n+1) pi / b)^2 - ((2m+1) pi / width)^2)`.
///
/// For a negative radicand the branch with positive imaginary part is
/// returned, so the mode decays along +z through the slit thickness.
pub fn longitudinal_wavenumber(
    mode: ModeIndex,
    width: f64,
    geometry: &SlitGeometry,
    beam: &BeamParams,
) -> Complex64 {
    let k = beam.wavenumber();
    let kx = f64::from(mode.length_number()) * PI / geometry.b();
    let ky = f64::from(mode.width_number()) * PI / width;
    let radicand = k * k - kx * kx - ky * ky;
    sqrt_radicand(radicand)
}

/// sqrt of a possibly negative radicand on the decaying (+imaginary) branch.
fn sqrt_radicand(radicand: f64) -> Complex64 {
    if radicand >= 0.0 {
        Complex64::new(radicand.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-radicand).sqrt())
    }
}

/// Aperture integral `int_0^width exp(-i q y) sin(mode_number pi y / width) dy`.
///
/// Evaluated through the closed form
/// `mu (1 - (-1)^mode_number exp(-i q width)) / (mu^2 - q^2)` with
/// `mu = mode_number pi / width`. The singularity at `q = +-mu` is
/// removable; inside the guard band `|q| in [mu (1 - GUARD_BAND),
/// mu (1 + GUARD_BAND)]` the value comes from a second-order Taylor
/// expansion about the singular point, keeping the result continuous
/// through it. The denominator is computed factored and the numerator
/// phase-reduced near the resonance so that cancellation stays below
/// 1e-10 relative on both sides of the band.
pub fn slit_integral(mode_number: u32, q: f64, width: f64) -> Complex64 {
    if mode_number == 0 {
        // sin(0) integrand
        return Complex64::new(0.0, 0.0);
    }
    // Work with the dimensionless phases Q = q*width and mt = mode_number*pi;
    // the integral is width * F(Q) for the unit-interval integral F.
    let mt = f64::from(mode_number) * PI;
    let qw = q * width;
    let aq = qw.abs();

    if (aq - mt).abs() <= GUARD_BAND * mt {
        let val = taylor_near_resonance(mt, aq, width);
        // F(-Q) = conj(F(Q)) since the integrand's sine factor is real.
        return if qw >= 0.0 { val } else { val.conj() };
    }
    closed_form(mode_number, mt, qw, width)
}

fn closed_form(mode_number: u32, mt: f64, qw: f64, width: f64) -> Complex64 {
    let aq = qw.abs();
    // numerator 1 - (-1)^mode_number e^{-iQ}; near the resonance use the
    // identity 1 - (-1)^n e^{-iQ} = 1 - e^{-i(Q -+ n pi)} and evaluate the
    // small-angle difference without cancellation.
    let numerator = if (aq - mt).abs() < 0.5 {
        let delta = if qw >= 0.0 { qw - mt } else { qw + mt };
        let (sh, ch) = (0.5 * delta).sin_cos();
        // 1 - e^{-i delta} = 2 sin(delta/2) (sin(delta/2) + i cos(delta/2))
        Complex64::new(2.0 * sh * sh, 2.0 * sh * ch)
    } else {
        let (s, c) = qw.sin_cos();
        if mode_number % 2 == 1 {
            Complex64::new(1.0 + c, -s)
        } else {
            Complex64::new(1.0 - c, s)
        }
    };
    // (mu^2 - q^2) factored; the differences are exact near the resonance.
    let denominator = (mt - qw) * (mt + qw);
    width * mt * numerator / denominator
}

/// Second-order Taylor expansion of the unit-interval integral about
/// its removable singularity Q = mt, scaled back by `width`.
fn taylor_near_resonance(mt: f64, q_abs: f64, width: f64) -> Complex64 {
    let eta = q_abs - mt;
    let f0 = Complex64::new(0.0, -0.5);
    let f1 = Complex64::new(-0.25, 0.25 / mt);
    let f2 = Complex64::new(0.25 / mt, 1.0 / 6.0 - 0.25 / (mt * mt));
    (f0 + eta * (f1 + (0.5 * eta) * f2)) * width
}
