//! Quadrature-backed reference evaluations.
//!
//! These deliberately re-derive everything from the integrand level so
//! they can certify the closed-form paths: no integral code is shared
//! with [`crate::modes::slit_integral`] or the far-field mode tables.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::analysis::quadrature::integrate_complex;
use crate::beam::BeamParams;
use crate::error::Result;
use crate::geometry::{Slit, SlitGeometry};
use crate::modes::Truncation;
use crate::scan::DetectorScan;

const MAX_INTERVALS: usize = 16_384;

/// `int_0^width exp(-i q y) sin(mode_number pi y / width) dy` by adaptive
/// quadrature. The absolute tolerance scales with the slit width so the
/// oracle keeps a fixed relative resolution across micrometer apertures.
pub fn quadrature_slit_integral(mode_number: u32, q: f64, width: f64) -> Result<Complex64> {
    let mu = f64::from(mode_number) * PI / width;
    let tolerance = 1e-14 * width;
    integrate_complex(
        |y| Complex64::from_polar(1.0, -q * y) * (mu * y).sin(),
        0.0,
        width,
        tolerance,
        MAX_INTERVALS,
    )
}

/// Term-by-term Kirchhoff amplitude with every aperture integral done by
/// quadrature over the slit's absolute coordinates. Meant for coarse
/// truncations; cost grows as `m_max * n_max` quadratures.
pub fn kirchhoff_amplitude_reference(
    slit: Slit,
    s: f64,
    geometry: &SlitGeometry,
    beam: &BeamParams,
    scan: &DetectorScan,
    truncation: &Truncation,
) -> Result<Complex64> {
    let width = geometry.width(slit)?;
    let y_lo = geometry.lower_edge(slit)?;
    let y_hi = y_lo + width;
    let b = geometry.b();
    let c = geometry.c();
    let k = beam.wavenumber();

    let r = scan.l().hypot(s);
    let sin_beta = s / r;
    let cos_a = scan.alpha().cos();
    let cos_theta = (cos_a * cos_a - sin_beta * sin_beta).sqrt();
    let qx = k * scan.alpha().sin();
    let qy = k * sin_beta;

    let x_tol = 1e-14 * b;
    let y_tol = 1e-14 * width;

    let mut sum = Complex64::new(0.0, 0.0);
    for m in 0..=truncation.m_max() {
        let across = f64::from(2 * m + 1) * PI / width;
        // integral over the slit's own y range, sine measured from its edge
        let y_integral = integrate_complex(
            |y| Complex64::from_polar(1.0, -qy * y) * (across * (y - y_lo)).sin(),
            y_lo,
            y_hi,
            y_tol,
            MAX_INTERVALS,
        )?;
        for n in 0..=truncation.n_max() {
            let along = f64::from(2 * n + 1) * PI / b;
            let x_integral = integrate_complex(
                |x| Complex64::from_polar(1.0, -qx * x) * (along * x).sin(),
                0.0,
                b,
                x_tol,
                MAX_INTERVALS,
            )?;
            let d = 16.0 * beam.amplitude()
                / (f64::from(2 * m + 1) * f64::from(2 * n + 1) * PI * PI);
            let radicand = k * k - along * along - across * across;
            let kz = if radicand >= 0.0 {
                Complex64::new(radicand.sqrt(), 0.0)
            } else {
                Complex64::new(0.0, (-radicand).sqrt())
            };
            let through = (Complex64::i() * kz * c).exp();
            let bracket = Complex64::i() * kz + Complex64::new(-1.0 / r, k) * cos_theta;
            sum += d * through * bracket * x_integral * y_integral;
        }
    }
    let prefactor = -Complex64::from_polar(1.0 / (4.0 * PI * r), k * r);
    Ok(prefactor * sum)
}
