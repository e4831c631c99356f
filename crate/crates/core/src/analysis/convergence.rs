//! Truncation convergence studies.
//!
//! Intensity units are arbitrary (the incident amplitude is a fitted
//! scale), so convergence is measured on peak-normalized profiles: the
//! per-step metric is the largest pointwise change of `I / max(I)`
//! between consecutive truncations. A pure rescaling of the profile
//! therefore reads as zero change; shape movement is what counts.

use serde::Serialize;

use crate::beam::BeamParams;
use crate::coherence::CoherenceParams;
use crate::error::{Error, Result};
use crate::farfield::FarField;
use crate::geometry::SlitGeometry;
use crate::modes::Truncation;
use crate::profile::IntensityProfile;
use crate::scan::DetectorScan;

/// Outcome of a ladder of truncations.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    /// The (m_max, n_max) ladder that was evaluated.
    pub ladder: Vec<(u32, u32)>,
    /// Per-step max change of the peak-normalized intensity.
    pub step_changes: Vec<f64>,
    /// Threshold the final step is compared against.
    pub tail_tolerance: f64,
    /// Whether the final step change is below `tail_tolerance`;
    /// `false` for a single-rung ladder (nothing to compare).
    pub converged: bool,
}

/// Evaluate the intensity at each truncation of `ladder` and report the
/// per-step profile changes. Double-slit geometries use the coherent
/// (or, when `lambda_t` is set, the decoherence-damped) intensity;
/// single-slit geometries fall back to the single-slit profile.
pub fn convergence_study(
    scan: &DetectorScan,
    geometry: &SlitGeometry,
    beam: &BeamParams,
    coherence: &CoherenceParams,
    ladder: &[(u32, u32)],
    tail_tolerance: f64,
) -> Result<ConvergenceReport> {
    if ladder.is_empty() {
        return Err(Error::invalid("ladder", "must not be empty"));
    }
    for pair in ladder.windows(2) {
        let (m0, n0) = pair[0];
        let (m1, n1) = pair[1];
        if m1 < m0 || n1 < n0 || (m1, n1) == (m0, n0) {
            return Err(Error::invalid(
                "ladder",
                format!("must increase, got ({m0},{n0}) -> ({m1},{n1})"),
            ));
        }
    }
    if !(tail_tolerance.is_finite() && tail_tolerance > 0.0) {
        return Err(Error::invalid("tail_tolerance", "must be finite and > 0"));
    }

    let mut normalized_profiles: Vec<Vec<f64>> = Vec::with_capacity(ladder.len());
    for &(m_max, n_max) in ladder {
        let truncation = Truncation::new(m_max, n_max, tail_tolerance)?;
        let profile = evaluate(scan, geometry, beam, coherence, &truncation)?;
        normalized_profiles.push(peak_normalize(&profile));
    }

    let step_changes: Vec<f64> = normalized_profiles
        .windows(2)
        .map(|pair| {
            pair[0]
                .iter()
                .zip(&pair[1])
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
        .collect();

    let converged = step_changes
        .last()
        .map(|&change| change < tail_tolerance)
        .unwrap_or(false);

    Ok(ConvergenceReport {
        ladder: ladder.to_vec(),
        step_changes,
        tail_tolerance,
        converged,
    })
}

fn evaluate(
    scan: &DetectorScan,
    geometry: &SlitGeometry,
    beam: &BeamParams,
    coherence: &CoherenceParams,
    truncation: &Truncation,
) -> Result<IntensityProfile> {
    let engine = FarField::new(geometry, beam, scan, truncation)?;
    if !geometry.is_double() {
        engine.scan_single()
    } else if coherence.lambda_t().is_some() {
        engine.scan_decoherent(coherence)
    } else {
        engine.scan_coherent(coherence)
    }
}

fn peak_normalize(profile: &IntensityProfile) -> Vec<f64> {
    let peak = profile.peak().1;
    if peak == 0.0 {
        return profile.intensity().to_vec();
    }
    profile.intensity().iter().map(|v| v / peak).collect()
}
