//! Wavefunction inside the slit: truncated double mode sum.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::beam::BeamParams;
use crate::error::{Error, Result};
use crate::geometry::{Slit, SlitGeometry};
use crate::modes::{fourier_coefficient, longitudinal_wavenumber, ModeIndex, Truncation};

/// Stationary wavefunction at a point inside the requested slit,
/// evaluated as the truncated sum over odd waveguide modes:
///
/// `sum_{m,n} D_mn sin((2n+1) pi x / b) sin((2m+1) pi y' / width) exp(i k_z z)`
///
/// with `y'` measured from the slit's own lower edge. The global time
/// phase is dropped; every observable downstream is an absolute square.
/// Coordinates outside the aperture are rejected.
pub fn in_slit_wavefunction(
    x: f64,
    y: f64,
    z: f64,
    slit: Slit,
    geometry: &SlitGeometry,
    beam: &BeamParams,
    truncation: &Truncation,
) -> Result<Complex64> {
    let b = geometry.b();
    let c = geometry.c();
    let width = geometry.width(slit)?;
    let y_local = y - geometry.lower_edge(slit)?;

    if !(0.0..=b).contains(&x) {
        return Err(Error::OutOfAperture(format!("x = {x} outside [0, {b}]")));
    }
    if !(0.0..=width).contains(&y_local) {
        return Err(Error::OutOfAperture(format!(
            "y = {y} outside the slit opening (local y' = {y_local}, width {width})"
        )));
    }
    if !(0.0..=c).contains(&z) {
        return Err(Error::OutOfAperture(format!("z = {z} outside [0, {c}]")));
    }

    let mut sum = Complex64::new(0.0, 0.0);
    for m in 0..=truncation.m_max() {
        let sin_y = (f64::from(2 * m + 1) * PI * y_local / width).sin();
        for n in 0..=truncation.n_max() {
            let mode = ModeIndex::new(m, n);
            let d = fourier_coefficient(mode, beam);
            let sin_x = (f64::from(2 * n + 1) * PI * x / b).sin();
            let kz = longitudinal_wavenumber(mode, width, geometry, beam);
            let axial = (Complex64::i() * kz * z).exp();
            sum += d * sin_x * sin_y * axial;
        }
    }
    Ok(sum)
}
