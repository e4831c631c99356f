//! Far-field Kirchhoff propagation of the in-slit modes to the screen.
//!
//! The per-slit amplitude at screen coordinate `s` is
//!
//! ```text
//! psi(s) = -e^{ikR}/(4 pi R) * sum_{m,n} D_mn e^{i k_z c}
//!          [ i k_z + (ik - 1/R) sqrt(cos^2(alpha) - (s/R)^2) ]
//!          X_n(k sin(alpha)) Y_m(k sin(beta))
//! ```
//!
//! with `R = sqrt(l^2 + s^2)`, `sin(beta) = s/R`, and `X_n`, `Y_m` the
//! aperture integrals over the slit length and width. Everything except
//! `Y_m` and the obliquity factor is independent of `s`, so the `n` sum
//! is collapsed once per slit into two per-`m` tables and each detector
//! point costs a single pass over `m`. The second slit's width integral
//! equals the first-slit form times the offset phase
//! `e^{-i k sin(beta) (a1 + d)}`, which is applied outside the sum.
//!
//! Detector points are independent; scans evaluate them in parallel
//! under the `parallel` feature with a fixed per-point summation order,
//! so results do not depend on the thread count.

use num_complex::Complex64;
use std::f64::consts::PI;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::beam::BeamParams;
use crate::coherence::CoherenceParams;
use crate::error::{Error, Result};
use crate::geometry::{Slit, SlitGeometry};
use crate::modes::{fourier_coefficient, longitudinal_wavenumber, slit_integral, ModeIndex, Truncation};
use crate::profile::{IntensityProfile, ProfileKind, ProfileMeta};
use crate::scan::DetectorScan;

/// Precomputed per-slit mode sums (everything independent of `s`).
#[derive(Debug, Clone)]
struct ModeTable {
    width: f64,
    /// y of the slit's lower edge; the offset enters as a pure phase.
    y_offset: f64,
    /// per m: sum over n of `D_mn X_n e^{i k_z c} * (i k_z)`.
    grad_sum: Vec<Complex64>,
    /// per m: sum over n of `D_mn X_n e^{i k_z c}`.
    field_sum: Vec<Complex64>,
}

impl ModeTable {
    fn build(
        slit: Slit,
        geometry: &SlitGeometry,
        beam: &BeamParams,
        scan: &DetectorScan,
        truncation: &Truncation,
    ) -> Result<Self> {
        let width = geometry.width(slit)?;
        let y_offset = geometry.lower_edge(slit)?;
        let k = beam.wavenumber();
        let qx = k * scan.alpha().sin();
        let b = geometry.b();
        let c = geometry.c();

        let x_integrals: Vec<Complex64> = (0..=truncation.n_max())
            .map(|n| slit_integral(2 * n + 1, qx, b))
            .collect();

        let m_count = truncation.m_max() as usize + 1;
        let mut grad_sum = Vec::with_capacity(m_count);
        let mut field_sum = Vec::with_capacity(m_count);
        for m in 0..=truncation.m_max() {
            let mut grad = Complex64::new(0.0, 0.0);
            let mut field = Complex64::new(0.0, 0.0);
            for n in 0..=truncation.n_max() {
                let mode = ModeIndex::new(m, n);
                let d = fourier_coefficient(mode, beam);
                let kz = longitudinal_wavenumber(mode, width, geometry, beam);
                let through = (Complex64::i() * kz * c).exp();
                let weight = d * x_integrals[n as usize] * through;
                grad += weight * Complex64::i() * kz;
                field += weight;
            }
            grad_sum.push(grad);
            field_sum.push(field);
        }
        Ok(Self {
            width,
            y_offset,
            grad_sum,
            field_sum,
        })
    }
}

/// Far-field evaluator for one parameter set: build once, evaluate at
/// any number of screen points.
#[derive(Debug, Clone)]
pub struct FarField {
    geometry: SlitGeometry,
    beam: BeamParams,
    scan: DetectorScan,
    truncation: Truncation,
    k: f64,
    table1: ModeTable,
    table2: Option<ModeTable>,
}

impl FarField {
    pub fn new(
        geometry: &SlitGeometry,
        beam: &BeamParams,
        scan: &DetectorScan,
        truncation: &Truncation,
    ) -> Result<Self> {
        let table1 = ModeTable::build(Slit::First, geometry, beam, scan, truncation)?;
        let table2 = if geometry.is_double() {
            Some(ModeTable::build(Slit::Second, geometry, beam, scan, truncation)?)
        } else {
            None
        };
        Ok(Self {
            geometry: *geometry,
            beam: *beam,
            scan: *scan,
            truncation: *truncation,
            k: beam.wavenumber(),
            table1,
            table2,
        })
    }

    pub fn geometry(&self) -> &SlitGeometry {
        &self.geometry
    }

    pub fn scan(&self) -> &DetectorScan {
        &self.scan
    }

    fn table(&self, slit: Slit) -> Result<&ModeTable> {
        match slit {
            Slit::First => Ok(&self.table1),
            Slit::Second => self.table2.as_ref().ok_or(Error::NotDoubleSlit),
        }
    }

    /// Diffraction amplitude of one slit at screen coordinate `s`.
    pub fn amplitude(&self, slit: Slit, s: f64) -> Result<Complex64> {
        let table = self.table(slit)?;
        self.amplitude_from_table(table, s)
    }

    /// Coherent superposition `c1 psi_1(s) + c2 psi_2(s)`.
    pub fn coherent(&self, coherence: &CoherenceParams, s: f64) -> Result<Complex64> {
        let (psi1, psi2) = self.both_amplitudes(s)?;
        Ok(coherence.c1() * psi1 + coherence.c2() * psi2)
    }

    fn both_amplitudes(&self, s: f64) -> Result<(Complex64, Complex64)> {
        let table2 = self.table(Slit::Second)?;
        let psi1 = self.amplitude_from_table(&self.table1, s)?;
        let psi2 = self.amplitude_from_table(table2, s)?;
        Ok((psi1, psi2))
    }

    fn amplitude_from_table(&self, table: &ModeTable, s: f64) -> Result<Complex64> {
        let k = self.k;
        let r = self.scan.l().hypot(s);
        let sin_beta = s / r;
        let cos_theta_sq = self.scan.cos_theta_sq(s);
        if cos_theta_sq < 0.0 {
            return Err(Error::InvalidScreenPoint { s });
        }
        // (ik - 1/R) cos(theta): the 1/R term is kept even though kR >> 1.
        let obliquity = Complex64::new(-1.0 / r, k) * cos_theta_sq.sqrt();
        let qy = k * sin_beta;

        let mut acc = Complex64::new(0.0, 0.0);
        for m in 0..=self.truncation.m_max() {
            let y_integral = slit_integral(2 * m + 1, qy, table.width);
            let mi = m as usize;
            acc += y_integral * (table.grad_sum[mi] + obliquity * table.field_sum[mi]);
        }

        let prefactor = -Complex64::from_polar(1.0 / (4.0 * PI * r), k * r);
        let amp = prefactor * acc;
        if table.y_offset != 0.0 {
            Ok(Complex64::from_polar(1.0, -qy * table.y_offset) * amp)
        } else {
            Ok(amp)
        }
    }

    fn intensity_point_single(&self, s: f64) -> Result<f64> {
        Ok(self.amplitude_from_table(&self.table1, s)?.norm_sqr())
    }

    fn intensity_point_coherent(&self, coherence: &CoherenceParams, s: f64) -> Result<f64> {
        let (psi1, psi2) = self.both_amplitudes(s)?;
        let c1 = coherence.c1();
        let c2 = coherence.c2();
        let cross = (psi1.conj() * psi2).re;
        let value = c1 * c1 * psi1.norm_sqr() + c2 * c2 * psi2.norm_sqr() + 2.0 * c1 * c2 * cross;
        // the expansion can round a hair below zero at deep nulls
        Ok(value.max(0.0))
    }

    fn intensity_point_decoherent(
        &self,
        coherence: &CoherenceParams,
        lambda: f64,
        alpha_overlap: f64,
        s: f64,
    ) -> Result<f64> {
        let (psi1, psi2) = self.both_amplitudes(s)?;
        let c1 = coherence.c1();
        let c2 = coherence.c2();
        let cross = (psi1.conj() * psi2).re;
        let value = (1.0 + alpha_overlap * alpha_overlap)
            * (c1 * c1 * psi1.norm_sqr()
                + c2 * c2 * psi2.norm_sqr()
                + 2.0 * c1 * c2 * lambda * cross);
        Ok(value.max(0.0))
    }

    /// Single-slit profile `|psi_1(s)|^2` over the scan grid.
    pub fn scan_single(&self) -> Result<IntensityProfile> {
        let intensity = map_points(&self.scan.grid(), |s| self.intensity_point_single(s))?;
        self.finish_profile(ProfileKind::Single, None, intensity)
    }

    /// Sequential evaluation of [`FarField::scan_single`]; same bits.
    pub fn scan_single_seq(&self) -> Result<IntensityProfile> {
        let intensity = map_points_seq(&self.scan.grid(), |s| self.intensity_point_single(s))?;
        self.finish_profile(ProfileKind::Single, None, intensity)
    }

    /// Coherent two-slit profile over the scan grid.
    pub fn scan_coherent(&self, coherence: &CoherenceParams) -> Result<IntensityProfile> {
        self.table(Slit::Second)?;
        let intensity = map_points(&self.scan.grid(), |s| {
            self.intensity_point_coherent(coherence, s)
        })?;
        self.finish_profile(ProfileKind::Coherent, Some(*coherence), intensity)
    }

    /// Sequential evaluation of [`FarField::scan_coherent`]; same bits.
    pub fn scan_coherent_seq(&self, coherence: &CoherenceParams) -> Result<IntensityProfile> {
        self.table(Slit::Second)?;
        let intensity = map_points_seq(&self.scan.grid(), |s| {
            self.intensity_point_coherent(coherence, s)
        })?;
        self.finish_profile(ProfileKind::Coherent, Some(*coherence), intensity)
    }

    /// Decoherence-damped two-slit profile over the scan grid;
    /// the coherence parameters must carry `lambda_t`.
    pub fn scan_decoherent(&self, coherence: &CoherenceParams) -> Result<IntensityProfile> {
        self.table(Slit::Second)?;
        let (lambda, alpha) = decoherence_factors(coherence)?;
        let intensity = map_points(&self.scan.grid(), |s| {
            self.intensity_point_decoherent(coherence, lambda, alpha, s)
        })?;
        self.finish_profile(ProfileKind::Decoherent, Some(*coherence), intensity)
    }

    /// Sequential evaluation of [`FarField::scan_decoherent`]; same bits.
    pub fn scan_decoherent_seq(&self, coherence: &CoherenceParams) -> Result<IntensityProfile> {
        self.table(Slit::Second)?;
        let (lambda, alpha) = decoherence_factors(coherence)?;
        let intensity = map_points_seq(&self.scan.grid(), |s| {
            self.intensity_point_decoherent(coherence, lambda, alpha, s)
        })?;
        self.finish_profile(ProfileKind::Decoherent, Some(*coherence), intensity)
    }

    fn finish_profile(
        &self,
        kind: ProfileKind,
        coherence: Option<CoherenceParams>,
        intensity: Vec<f64>,
    ) -> Result<IntensityProfile> {
        let meta = ProfileMeta {
            kind,
            beam: self.beam,
            geometry: self.geometry,
            scan: self.scan,
            coherence,
            truncation: self.truncation,
        };
        IntensityProfile::new(self.scan.grid(), intensity, meta)
    }
}

fn decoherence_factors(coherence: &CoherenceParams) -> Result<(f64, f64)> {
    let lambda = coherence.lambda_t().ok_or_else(|| {
        Error::invalid("lambda_t", "decoherent intensity requires a coherence degree")
    })?;
    let alpha = coherence.alpha_overlap().unwrap_or(0.0);
    Ok((lambda, alpha))
}

#[cfg(feature = "parallel")]
fn map_points<F>(grid: &[f64], f: F) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    grid.par_iter().map(|&s| f(s)).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_points<F>(grid: &[f64], f: F) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    map_points_seq(grid, f)
}

fn map_points_seq<F>(grid: &[f64], f: F) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64>,
{
    grid.iter().map(|&s| f(s)).collect()
}

/// One-shot per-slit diffraction amplitude at screen coordinate `s`.
///
/// Builds the mode tables for a single evaluation; use [`FarField`]
/// directly when scanning many points.
pub fn slit_amplitude(
    slit: Slit,
    s: f64,
    geometry: &SlitGeometry,
    beam: &BeamParams,
    scan: &DetectorScan,
    truncation: &Truncation,
) -> Result<Complex64> {
    FarField::new(geometry, beam, scan, truncation)?.amplitude(slit, s)
}

/// One-shot coherent superposition amplitude at screen coordinate `s`.
pub fn coherent_amplitude(
    s: f64,
    geometry: &SlitGeometry,
    beam: &BeamParams,
    scan: &DetectorScan,
    coherence: &CoherenceParams,
    truncation: &Truncation,
) -> Result<Complex64> {
    FarField::new(geometry, beam, scan, truncation)?.coherent(coherence, s)
}

/// Single-slit intensity profile (slit 1 only, on any geometry).
pub fn intensity_single(
    scan: &DetectorScan,
    geometry: &SlitGeometry,
    beam: &BeamParams,
    truncation: &Truncation,
) -> Result<IntensityProfile> {
    FarField::new(geometry, beam, scan, truncation)?.scan_single()
}

/// Coherent two-slit intensity profile.
pub fn intensity_coherent(
    scan: &DetectorScan,
    geometry: &SlitGeometry,
    beam: &BeamParams,
    coherence: &CoherenceParams,
    truncation: &Truncation,
) -> Result<IntensityProfile> {
    FarField::new(geometry, beam, scan, truncation)?.scan_coherent(coherence)
}

/// Decoherence-damped two-slit intensity profile.
pub fn intensity_decoherent(
    scan: &DetectorScan,
    geometry: &SlitGeometry,
    beam: &BeamParams,
    coherence: &CoherenceParams,
    truncation: &Truncation,
) -> Result<IntensityProfile> {
    FarField::new(geometry, beam, scan, truncation)?.scan_decoherent(coherence)
}
