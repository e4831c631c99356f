//! Intensity profiles and their provenance metadata.

use serde::Serialize;

use crate::beam::BeamParams;
use crate::coherence::CoherenceParams;
use crate::error::{Error, Result};
use crate::geometry::SlitGeometry;
use crate::modes::Truncation;
use crate::scan::DetectorScan;

/// Which intensity law produced a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileKind {
    /// Single-slit intensity `|psi_1|^2`.
    Single,
    /// Coherent two-slit superposition.
    Coherent,
    /// Decoherence-damped two-slit intensity.
    Decoherent,
}

/// Full parameter record carried along with every profile.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ProfileMeta {
    pub kind: ProfileKind,
    pub beam: BeamParams,
    pub geometry: SlitGeometry,
    pub scan: DetectorScan,
    pub coherence: Option<CoherenceParams>,
    pub truncation: Truncation,
}

/// Ordered `(s, intensity)` samples over a detector scan.
#[derive(Debug, Clone, Serialize)]
pub struct IntensityProfile {
    s: Vec<f64>,
    intensity: Vec<f64>,
    meta: ProfileMeta,
}

impl IntensityProfile {
    pub fn new(s: Vec<f64>, intensity: Vec<f64>, meta: ProfileMeta) -> Result<Self> {
        if s.is_empty() || s.len() != intensity.len() {
            return Err(Error::invalid(
                "profile",
                format!("need equal nonzero lengths, got {} and {}", s.len(), intensity.len()),
            ));
        }
        if !s.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::invalid("profile.s", "screen coordinates must strictly increase"));
        }
        for (i, v) in intensity.iter().enumerate() {
            if !(v.is_finite() && *v >= 0.0) {
                return Err(Error::invalid(
                    "profile.intensity",
                    format!("sample {i} is {v}; intensities must be finite and >= 0"),
                ));
            }
        }
        Ok(Self { s, intensity, meta })
    }

    pub fn s(&self) -> &[f64] {
        &self.s
    }

    pub fn intensity(&self) -> &[f64] {
        &self.intensity
    }

    pub fn meta(&self) -> &ProfileMeta {
        &self.meta
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// Location and value of the global intensity maximum (leftmost on ties).
    pub fn peak(&self) -> (f64, f64) {
        let mut best = 0;
        for i in 1..self.intensity.len() {
            if self.intensity[i] > self.intensity[best] {
                best = i;
            }
        }
        (self.s[best], self.intensity[best])
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.s.iter().copied().zip(self.intensity.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta() -> ProfileMeta {
        ProfileMeta {
            kind: ProfileKind::Single,
            beam: BeamParams::from_energy(1.67e-27, 3.3e-23, 1.0).unwrap(),
            geometry: SlitGeometry::single(90e-6, 5e-3, 3e-5).unwrap(),
            scan: DetectorScan::new(5.0, 0.0, -1e-4, 1e-4, 3).unwrap(),
            coherence: None,
            truncation: Truncation::new(10, 3, 0.01).unwrap(),
        }
    }

    #[test]
    fn validates_shape_and_signs() {
        assert!(IntensityProfile::new(vec![0.0, 1.0], vec![1.0], meta()).is_err());
        assert!(IntensityProfile::new(vec![1.0, 0.0], vec![1.0, 1.0], meta()).is_err());
        assert!(IntensityProfile::new(vec![0.0, 1.0], vec![1.0, -1.0], meta()).is_err());
        assert!(IntensityProfile::new(vec![0.0, 1.0], vec![1.0, f64::NAN], meta()).is_err());
        assert!(IntensityProfile::new(vec![], vec![], meta()).is_err());
    }

    #[test]
    fn peak_is_leftmost_on_ties() {
        let p = IntensityProfile::new(vec![0.0, 1.0, 2.0], vec![1.0, 5.0, 5.0], meta()).unwrap();
        assert_eq!(p.peak(), (1.0, 5.0));
    }
}
